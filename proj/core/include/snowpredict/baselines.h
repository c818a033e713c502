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

// Reference predictors: the majority (MLE) choice and a backoff trigram.

#ifndef SNOWPREDICT_BASELINES_H_
#define SNOWPREDICT_BASELINES_H_

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace snowpredict {

using FrequencyTable = std::map<std::string, std::uint64_t, std::less<>>;

// Candidate with the highest training frequency; ties go to the
// lexicographically smaller word.
std::string MlePredict(std::span<const std::string> candidates,
                       const FrequencyTable& counts);

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";

// Unigram/bigram/trigram counts over "<s> <s> w_1 .. w_n </s>" with
// absolute-discount backoff:
//
//   P1(v)       = (c(v) + 1) / (N + V)
//   P2(v | u)   = (c(u v) - d) / c(u .)              if c(u v) > 0
//               = bow(u) P1(v)                       otherwise
//   P3(v | t u) likewise over P2(. | u)
//
// where bow(.) renormalizes the discounted mass over the unseen
// continuations. V counts the word types plus </s>; <s> is never predicted.
// Contexts whose continuations cover the whole vocabulary are not discounted.
class NgramTable {
 public:
  static constexpr double kDefaultDiscount = 0.5;

  class Builder {
   public:
    explicit Builder(double discount = kDefaultDiscount);
    void AddSentence(std::span<const std::string> words);
    NgramTable Build() &&;

   private:
    double discount_;
    std::unordered_map<std::string, std::uint64_t> counts_[3];
  };

  double discount() const { return discount_; }
  std::uint64_t Count(std::string_view gram) const;  // space-joined words
  std::uint64_t total_tokens() const { return total_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }

  double UnigramProb(std::string_view word) const;
  double BigramProb(std::string_view word, std::string_view prev) const;
  double TrigramProb(std::string_view word, std::string_view prev2,
                     std::string_view prev1) const;

  // `n<TAB>gram<TAB>count`, sorted by order then gram.
  void Save(std::ostream& out) const;
  static NgramTable Load(std::istream& in, double discount = kDefaultDiscount);

 private:
  struct ContextStats {
    std::uint64_t total = 0;
    std::uint64_t types = 0;
    double discount = 0.0;
    double backoff = 1.0;
  };

  NgramTable() = default;
  void Finalize();

  double discount_ = kDefaultDiscount;
  std::uint64_t total_ = 0;
  std::vector<std::string> vocabulary_;  // sorted
  std::unordered_map<std::string, std::uint64_t> counts_[3];
  std::unordered_map<std::string, ContextStats> bigram_contexts_;
  std::unordered_map<std::string, ContextStats> trigram_contexts_;
};

// log P(candidate | left2 left1). With right context, adds
// log P(right1 | left1 candidate) and, unless right2 is empty,
// log P(right2 | candidate right1). Pass "</s>" past the sentence end.
double TrigramScore(std::string_view candidate, std::string_view left2,
                    std::string_view left1, const NgramTable& table);
double TrigramScore(std::string_view candidate, std::string_view left2,
                    std::string_view left1, std::string_view right1,
                    std::string_view right2, const NgramTable& table);

// Highest-scoring candidate for the word at 1-based `position` of `words`;
// ties go to the lexicographically smaller word.
std::string TrigramPredict(std::span<const std::string> candidates,
                           std::span<const std::string> words, int position,
                           const NgramTable& table, bool use_right_context = false);

}  // namespace snowpredict

#endif  // SNOWPREDICT_BASELINES_H_
