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

// Confusion sets: the candidate words that compete for one prediction slot.

#ifndef SNOWPREDICT_CONFUSION_H_
#define SNOWPREDICT_CONFUSION_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snowpredict/baselines.h"

namespace snowpredict {

inline constexpr std::string_view kPairTag = "pair";
inline constexpr std::string_view kAllTag = "all";
inline constexpr std::string_view kPhoneticTagPrefix = "pc:";
inline constexpr std::uint64_t kDefaultFrequencyFloor = 50;

struct ConfusionSet {
  std::string tag;                        // pair | pc:<class string> | all
  std::vector<std::string> members;       // distinct
  std::vector<std::uint64_t> frequencies;  // training frequency per member

  bool Contains(std::string_view word) const;
  // Share of the most frequent member; 1 for empty or all-zero sets.
  double MajorityShare() const;
  bool operator==(const ConfusionSet&) const = default;
};

// Words with count >= floor, sorted by descending count (ties
// lexicographically) and paired adjacently. An odd leftover is dropped with a
// warning. Throws DataError with fewer than two eligible words.
std::vector<ConfusionSet> EqualFrequencyPairs(
    const FrequencyTable& counts, std::uint64_t floor = kDefaultFrequencyFloor);

// Every given word in one set.
ConfusionSet AllTargetsSet(const FrequencyTable& counts);

// phoneme -> broad class (P, F, N, A, V1, V2 in the shipped map).
class PhoneticClassMap {
 public:
  void Add(std::string phoneme, std::string cls);
  std::optional<std::string_view> ClassOf(std::string_view phoneme) const;
  std::size_t size() const { return classes_.size(); }

  // `phoneme<TAB>class` lines; '#' comments.
  static PhoneticClassMap Load(std::istream& in);
  static PhoneticClassMap LoadFile(const std::string& path);

 private:
  std::map<std::string, std::string, std::less<>> classes_;
};

// word -> phoneme sequence. Homographs keep their first entry.
class PronunciationLexicon {
 public:
  // Returns false if the word already had a pronunciation.
  bool Add(std::string word, std::vector<std::string> phonemes);
  const std::vector<std::string>* Find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

  // `word<TAB>phoneme phoneme ...` lines; '#' comments.
  static PronunciationLexicon Load(std::istream& in);
  static PronunciationLexicon LoadFile(const std::string& path);

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

// Class symbols of the word's phonemes joined with '_' ("buy" -> "P_V1").
// Throws DataError if the word has no pronunciation, an empty one, or a
// phoneme outside the map.
std::string Transcribe(std::string_view word, const PronunciationLexicon& lexicon,
                       const PhoneticClassMap& map);

// Groups the targets by transcription. Targets without a usable
// pronunciation are logged and left out. With a cap, sets whose majority
// member's share reaches the cap are dropped (this removes every singleton).
std::vector<ConfusionSet> PhoneticConfusionSets(
    const FrequencyTable& targets, const PronunciationLexicon& lexicon,
    const PhoneticClassMap& map, std::optional<double> baseline_cap = std::nullopt);

// `tag<TAB>member member ...`, one set per line. Frequencies are not stored.
void WriteConfusionSets(std::ostream& out, std::span<const ConfusionSet> sets);
void WriteConfusionSetsFile(const std::string& path,
                            std::span<const ConfusionSet> sets);
std::vector<ConfusionSet> ReadConfusionSets(std::istream& in);
std::vector<ConfusionSet> ReadConfusionSetsFile(const std::string& path);

}  // namespace snowpredict

#endif  // SNOWPREDICT_CONFUSION_H_
