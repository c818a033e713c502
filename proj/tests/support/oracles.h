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

// Shared fixtures and reference implementations for the test suites.

#ifndef SNOWPREDICT_TESTS_SUPPORT_ORACLES_H_
#define SNOWPREDICT_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snowpredict/corpus.h"
#include "snowpredict/features.h"
#include "snowpredict/lexicon.h"

namespace snowpredict::testing {

// Builds a sentence from (form, pos, head, deprel) rows.
struct Row {
  std::string form;
  std::string pos;
  int head = 0;
  std::string deprel;
};
Sentence MakeSentence(const std::vector<Row>& rows);
// Tokens with no dependency edges.
Sentence FlatSentence(const std::vector<std::pair<std::string, std::string>>& words);

// "John X at the clock to see what time it is", focus at position 2.
Sentence ClockSentence();
// "Pierre Vinken, 61 years old, will join the board ..." with the subject
// attached to "will" (aux_vrb -> join), or directly to "join".
Sentence BoardSentence(bool with_aux);

// Random tree-shaped sentence over the predicates word, pos and subj.
Sentence RandomSentence(std::mt19937_64& rng, int max_length);
PredicateRegistry SmallRegistry();  // word, pos, subj

// Exhaustive re-implementation of Instantiate: enumerates every position
// tuple and keeps the ones that form a valid chain.
std::vector<std::string> BruteForceInstantiate(std::span<const FeatureType> types,
                                               const Sentence& sentence,
                                               int focus);

// Count-based naive Bayes, written without the library's learner.
class ClosedFormNb {
 public:
  explicit ClosedFormNb(double smoothing) : smoothing_(smoothing) {}
  void Add(const std::vector<FeatureId>& active, const std::string& label);
  std::string Predict(const std::vector<FeatureId>& active,
                      const std::vector<std::string>& candidates) const;

 private:
  double smoothing_;
  std::uint64_t total_ = 0;
  std::map<std::string, std::uint64_t> prior_;
  std::map<std::string, std::map<FeatureId, std::uint64_t>> counts_;
};

// Minimum summed |f_a - f_b| over all perfect matchings of an even-sized list.
std::uint64_t ExhaustivePairingCost(const std::vector<std::uint64_t>& freqs);

}  // namespace snowpredict::testing

#endif  // SNOWPREDICT_TESTS_SUPPORT_ORACLES_H_
