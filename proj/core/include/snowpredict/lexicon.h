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

// Feature identity <-> dense id mapping, allocated on first occurrence.

#ifndef SNOWPREDICT_LEXICON_H_
#define SNOWPREDICT_LEXICON_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace snowpredict {

using FeatureId = std::uint32_t;

class Lexicon {
 public:
  // With allocate=true returns the existing or a fresh id and bumps the
  // occurrence count; with allocate=false returns nullopt for unseen
  // identities and leaves counts untouched.
  std::optional<FeatureId> Intern(std::string_view identity, bool allocate);
  std::optional<FeatureId> Find(std::string_view identity) const;

  const std::string& Identity(FeatureId id) const { return identities_.at(id); }
  std::uint64_t Count(FeatureId id) const { return counts_.at(id); }
  std::size_t size() const { return identities_.size(); }

  // After Freeze, allocating interns throw std::logic_error; lookups remain
  // safe from concurrent readers.
  void Freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  // `id<TAB>count<TAB>identity`, one per line, sorted by id.
  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  static Lexicon Load(std::istream& in);
  static Lexicon LoadFile(const std::string& path);

 private:
  std::unordered_map<std::string, FeatureId> ids_;
  std::vector<std::string> identities_;
  std::vector<std::uint64_t> counts_;
  bool frozen_ = false;
};

}  // namespace snowpredict

#endif  // SNOWPREDICT_LEXICON_H_
