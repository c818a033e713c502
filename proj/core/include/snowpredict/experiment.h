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

// End-to-end runner: split, confusion sets, example generation, training per
// regime, WER evaluation.

#ifndef SNOWPREDICT_EXPERIMENT_H_
#define SNOWPREDICT_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snowpredict/baselines.h"
#include "snowpredict/confusion.h"
#include "snowpredict/corpus.h"
#include "snowpredict/features.h"
#include "snowpredict/lexicon.h"
#include "snowpredict/report.h"
#include "snowpredict/snow.h"

namespace snowpredict {

enum class Learner { kMle, kTrigram, kNaiveBayes, kWinnow, kPerceptron };
enum class TrainRegime { kAll, kPerSet };
enum class TestRegime { kAll, kPerSet };
enum class ConfusionSource { kPairs, kPhonetic, kAll, kFile };

struct Regime {
  TrainRegime train = TrainRegime::kPerSet;
  TestRegime test = TestRegime::kPerSet;
  bool operator==(const Regime&) const = default;
};

std::string_view LearnerColumn(Learner learner);  // Bline, Trigram, NB, SNoW, ...
std::optional<Learner> ParseLearner(std::string_view name);
std::optional<ConfusionSource> ParseConfusionSource(std::string_view name);
std::optional<TrainRegime> ParseTrainRegime(std::string_view name);
std::optional<TestRegime> ParseTestRegime(std::string_view name);
// "Train All Test 2", "Train PC Test PC", ...
std::string RegimeLabel(const Regime& regime, ConfusionSource source);

struct FeatureSet {
  std::string label;  // "Linear", "Non Linear"
  std::vector<FeatureType> types;
};

// Contiguous split at the sentence boundary nearest fraction * n; a .5 tie
// gives the extra sentence to training. Throws DataError on an empty corpus
// or a fraction outside (0, 1).
std::pair<std::vector<Sentence>, std::vector<Sentence>> SplitCorpus(
    std::span<const Sentence> sentences, double fraction);

// Occurrences of forms whose POS starts with `pos_prefix` (all forms when the
// prefix is empty).
FrequencyTable CountTargets(std::span<const Sentence> sentences,
                            std::string_view pos_prefix);

// Word -> confusion set lookup over non-overlapping sets.
class ConfusionAssignment {
 public:
  // Throws DataError if a word belongs to two sets or a set is empty.
  explicit ConfusionAssignment(std::vector<ConfusionSet> sets);

  const std::vector<ConfusionSet>& sets() const { return sets_; }
  const std::vector<std::string>& targets() const { return targets_; }  // sorted
  std::optional<int> SetOf(std::string_view word) const;
  std::string SetKey(int set) const;  // "make/sell"

 private:
  std::vector<ConfusionSet> sets_;
  std::vector<std::string> targets_;
  std::map<std::string, int, std::less<>> set_of_;
};

struct PredictionExample {
  int sentence = 0;  // index into the sentence span
  int focus = 0;     // 1-based token position
  std::string gold;
  int set = 0;       // index into the assignment's sets
  std::vector<FeatureId> features;  // sorted, unique
};

// One example per occurrence of a target word. Features are interned with
// `allocate` (training) or looked up only (evaluation; unseen ones dropped).
// Instantiation runs on `jobs` threads; interning stays in document order.
std::vector<PredictionExample> GenerateExamples(
    std::span<const Sentence> sentences, const ConfusionAssignment& assignment,
    std::span<const FeatureType> types, Lexicon& lexicon, bool allocate,
    int jobs = 1);

// Drops features whose lexicon count is below `floor`.
void ApplyFeatureFloor(std::vector<PredictionExample>& examples,
                       const Lexicon& lexicon, std::uint64_t floor);

using CandidateFn =
    std::function<std::span<const std::string>(const PredictionExample&)>;
using PredictFn = std::function<std::string(const PredictionExample&,
                                            std::span<const std::string>)>;

// mistakes / |examples| with a per-set breakdown. Throws DataError on an
// empty example set. `predict` must be safe to call concurrently when
// jobs > 1.
WerResult EvaluateWer(std::span<const PredictionExample> examples,
                      const ConfusionAssignment& assignment,
                      const CandidateFn& candidates, const PredictFn& predict,
                      int jobs = 1);

// Builds a network over the assignment's targets and trains it under the
// given regime.
Network TrainNetwork(std::span<const PredictionExample> examples,
                     const ConfusionAssignment& assignment, TrainRegime regime,
                     const LearnerConfig& config, TrainStats* stats = nullptr);

struct ExperimentOptions {
  std::string target_pos_prefix = "VB";
  std::uint64_t frequency_floor = kDefaultFrequencyFloor;
  ConfusionSource source = ConfusionSource::kPairs;
  std::optional<double> baseline_cap;
  std::vector<Learner> learners = {Learner::kMle, Learner::kNaiveBayes,
                                   Learner::kWinnow, Learner::kTrigram};
  std::vector<Regime> regimes = {{TrainRegime::kPerSet, TestRegime::kPerSet}};
  LearnerConfig learner;  // the rule field is overridden per learner
  std::uint64_t feature_floor = 1;
  double trigram_discount = NgramTable::kDefaultDiscount;
  bool trigram_right_context = false;
  int jobs = 1;
};

struct ExperimentData {
  std::vector<Sentence> train;
  std::vector<Sentence> test;
  std::vector<FeatureSet> feature_sets;
  // Used when the source is kFile.
  std::vector<ConfusionSet> sets;
  std::optional<PronunciationLexicon> pronunciations;
  std::optional<PhoneticClassMap> phonetic_classes;
};

// Confusion sets for the configured source, computed from training counts.
std::vector<ConfusionSet> BuildConfusionSets(const ExperimentData& data,
                                             const ExperimentOptions& options);

EvaluationReport RunExperiment(const ExperimentData& data,
                               const ExperimentOptions& options);

// File-driven variant: either `corpus_path` (split by `split_fraction`) or
// both `train_path` and `test_path`.
struct ExperimentConfig {
  std::string corpus_path;
  std::string train_path;
  std::string test_path;
  double split_fraction = 0.8;
  std::vector<std::pair<std::string, std::string>> feature_files;  // label, path
  std::string sets_path;
  std::string pronunciations_path;
  std::string phonetic_classes_path;
  ExperimentOptions options;
};

EvaluationReport RunExperiment(const ExperimentConfig& config);

}  // namespace snowpredict

#endif  // SNOWPREDICT_EXPERIMENT_H_
