// Copyright 2026 The snowpredict Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snowpredict/lexicon.h"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "snowpredict/error.h"

namespace snowpredict {

std::optional<FeatureId> Lexicon::Intern(std::string_view identity,
                                         bool allocate) {
  auto it = ids_.find(std::string(identity));
  if (it != ids_.end()) {
    if (allocate) ++counts_[it->second];
    return it->second;
  }
  if (!allocate) return std::nullopt;
  if (frozen_) throw std::logic_error("allocation into a frozen lexicon");
  const auto id = static_cast<FeatureId>(identities_.size());
  identities_.emplace_back(identity);
  counts_.push_back(1);
  ids_.emplace(identities_.back(), id);
  return id;
}

std::optional<FeatureId> Lexicon::Find(std::string_view identity) const {
  auto it = ids_.find(std::string(identity));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void Lexicon::Save(std::ostream& out) const {
  for (size_t id = 0; id < identities_.size(); ++id) {
    out << id << '\t' << counts_[id] << '\t' << identities_[id] << '\n';
  }
}

void Lexicon::SaveFile(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write lexicon " + path);
  Save(out);
}

Lexicon Lexicon::Load(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fail = [&](const char* what) {
      return DataError("lexicon line " + std::to_string(line_no) + ": " + what);
    };
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw fail("expected id, count and identity");
    std::uint64_t id = 0;
    std::uint64_t count = 0;
    auto r1 = std::from_chars(line.data(), line.data() + t1, id);
    auto r2 = std::from_chars(line.data() + t1 + 1, line.data() + t2, count);
    if (r1.ec != std::errc() || r1.ptr != line.data() + t1 ||
        r2.ec != std::errc() || r2.ptr != line.data() + t2) {
      throw fail("bad id or count");
    }
    if (id != lexicon.size()) throw fail("ids must be contiguous from 0");
    if (count == 0) throw fail("count must be positive");
    std::string identity = line.substr(t2 + 1);
    if (lexicon.ids_.count(identity)) throw fail("duplicate identity");
    lexicon.ids_.emplace(identity, static_cast<FeatureId>(id));
    lexicon.identities_.push_back(std::move(identity));
    lexicon.counts_.push_back(count);
  }
  return lexicon;
}

Lexicon Lexicon::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon " + path);
  return Load(in);
}

}  // namespace snowpredict
