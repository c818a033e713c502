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

#include "snowpredict/confusion.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "snowpredict/error.h"

namespace snowpredict {
namespace {

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

// Non-comment, non-blank lines split at the first tab.
template <typename Fn>
void ForEachTabbedLine(std::istream& in, const char* what, Fn&& fn) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(std::string(what) + " line " + std::to_string(line_no) +
                      ": expected a tab-separated key and value");
    }
    fn(line_no, line.substr(0, tab), line.substr(tab + 1));
  }
}

}  // namespace

bool ConfusionSet::Contains(std::string_view word) const {
  return std::find(members.begin(), members.end(), word) != members.end();
}

double ConfusionSet::MajorityShare() const {
  std::uint64_t total = 0;
  std::uint64_t best = 0;
  for (std::uint64_t f : frequencies) {
    total += f;
    best = std::max(best, f);
  }
  if (total == 0) return 1.0;
  return static_cast<double>(best) / static_cast<double>(total);
}

std::vector<ConfusionSet> EqualFrequencyPairs(const FrequencyTable& counts,
                                              std::uint64_t floor) {
  std::vector<std::pair<std::string, std::uint64_t>> eligible;
  for (const auto& [word, count] : counts) {
    if (count >= floor) eligible.emplace_back(word, count);
  }
  if (eligible.size() < 2) {
    throw DataError("fewer than two words reach the frequency floor of " +
                    std::to_string(floor));
  }
  std::sort(eligible.begin(), eligible.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (eligible.size() % 2 == 1) {
    spdlog::warn("odd number of eligible words; dropping '{}'", eligible.back().first);
    eligible.pop_back();
  }
  std::vector<ConfusionSet> pairs;
  for (size_t i = 0; i < eligible.size(); i += 2) {
    pairs.push_back({std::string(kPairTag),
                     {eligible[i].first, eligible[i + 1].first},
                     {eligible[i].second, eligible[i + 1].second}});
  }
  return pairs;
}

ConfusionSet AllTargetsSet(const FrequencyTable& counts) {
  ConfusionSet set{std::string(kAllTag), {}, {}};
  for (const auto& [word, count] : counts) {
    set.members.push_back(word);
    set.frequencies.push_back(count);
  }
  return set;
}

void PhoneticClassMap::Add(std::string phoneme, std::string cls) {
  classes_.insert_or_assign(std::move(phoneme), std::move(cls));
}

std::optional<std::string_view> PhoneticClassMap::ClassOf(
    std::string_view phoneme) const {
  auto it = classes_.find(phoneme);
  if (it == classes_.end()) return std::nullopt;
  return std::string_view(it->second);
}

PhoneticClassMap PhoneticClassMap::Load(std::istream& in) {
  PhoneticClassMap map;
  ForEachTabbedLine(in, "phonetic class map",
                    [&](int line_no, std::string key, std::string value) {
                      auto k = SplitWhitespace(key);
                      auto v = SplitWhitespace(value);
                      if (k.size() != 1 || v.size() != 1) {
                        throw DataError("phonetic class map line " +
                                        std::to_string(line_no) + ": malformed");
                      }
                      map.Add(k[0], v[0]);
                    });
  return map;
}

PhoneticClassMap PhoneticClassMap::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open phonetic class map " + path);
  return Load(in);
}

bool PronunciationLexicon::Add(std::string word, std::vector<std::string> phonemes) {
  return entries_.emplace(std::move(word), std::move(phonemes)).second;
}

const std::vector<std::string>* PronunciationLexicon::Find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

PronunciationLexicon PronunciationLexicon::Load(std::istream& in) {
  PronunciationLexicon lexicon;
  ForEachTabbedLine(in, "pronunciation lexicon",
                    [&](int line_no, std::string key, std::string value) {
                      auto k = SplitWhitespace(key);
                      if (k.size() != 1) {
                        throw DataError("pronunciation lexicon line " +
                                        std::to_string(line_no) + ": malformed word");
                      }
                      lexicon.Add(k[0], SplitWhitespace(value));
                    });
  return lexicon;
}

PronunciationLexicon PronunciationLexicon::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open pronunciation lexicon " + path);
  return Load(in);
}

std::string Transcribe(std::string_view word, const PronunciationLexicon& lexicon,
                       const PhoneticClassMap& map) {
  const auto* phonemes = lexicon.Find(word);
  if (!phonemes) throw DataError("no pronunciation for '" + std::string(word) + "'");
  if (phonemes->empty()) {
    throw DataError("empty pronunciation for '" + std::string(word) + "'");
  }
  std::string out;
  for (const std::string& ph : *phonemes) {
    auto cls = map.ClassOf(ph);
    if (!cls) {
      throw DataError("phoneme '" + ph + "' of '" + std::string(word) +
                      "' has no phonetic class");
    }
    if (!out.empty()) out += '_';
    out += *cls;
  }
  return out;
}

std::vector<ConfusionSet> PhoneticConfusionSets(const FrequencyTable& targets,
                                                const PronunciationLexicon& lexicon,
                                                const PhoneticClassMap& map,
                                                std::optional<double> baseline_cap) {
  std::map<std::string, ConfusionSet> groups;
  for (const auto& [word, count] : targets) {
    std::string key;
    try {
      key = Transcribe(word, lexicon, map);
    } catch (const DataError& e) {
      spdlog::info("excluding '{}' from phonetic sets: {}", word, e.what());
      continue;
    }
    ConfusionSet& set = groups[key];
    set.tag = std::string(kPhoneticTagPrefix) + key;
    set.members.push_back(word);
    set.frequencies.push_back(count);
  }
  std::vector<ConfusionSet> sets;
  for (auto& [key, set] : groups) {
    if (baseline_cap && set.MajorityShare() >= *baseline_cap) continue;
    sets.push_back(std::move(set));
  }
  return sets;
}

void WriteConfusionSets(std::ostream& out, std::span<const ConfusionSet> sets) {
  for (const ConfusionSet& set : sets) {
    out << set.tag << '\t';
    for (size_t i = 0; i < set.members.size(); ++i) {
      out << (i ? " " : "") << set.members[i];
    }
    out << '\n';
  }
}

void WriteConfusionSetsFile(const std::string& path,
                            std::span<const ConfusionSet> sets) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write confusion sets " + path);
  WriteConfusionSets(out, sets);
}

std::vector<ConfusionSet> ReadConfusionSets(std::istream& in) {
  std::vector<ConfusionSet> sets;
  ForEachTabbedLine(in, "confusion set file",
                    [&](int line_no, std::string tag, std::string members) {
                      ConfusionSet set{tag, SplitWhitespace(members), {}};
                      std::set<std::string> distinct(set.members.begin(),
                                                     set.members.end());
                      if (set.tag.empty() || set.members.empty() ||
                          distinct.size() != set.members.size()) {
                        throw DataError("confusion set file line " +
                                        std::to_string(line_no) +
                                        ": needs a tag and distinct members");
                      }
                      set.frequencies.assign(set.members.size(), 0);
                      sets.push_back(std::move(set));
                    });
  return sets;
}

std::vector<ConfusionSet> ReadConfusionSetsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open confusion sets " + path);
  return ReadConfusionSets(in);
}

}  // namespace snowpredict
