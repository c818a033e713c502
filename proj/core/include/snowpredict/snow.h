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

// Sparse network of per-word linear units.
//
// Each target keeps links only to features that were active in one of its
// positive examples. Training is online and mistake-driven; prediction is a
// winner-take-all over a candidate set.

#ifndef SNOWPREDICT_SNOW_H_
#define SNOWPREDICT_SNOW_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snowpredict/lexicon.h"

namespace snowpredict {

using TargetId = std::uint32_t;

enum class UpdateRule { kWinnow, kNaiveBayes, kPerceptron };

std::string_view UpdateRuleName(UpdateRule rule);
std::optional<UpdateRule> ParseUpdateRule(std::string_view name);

struct WinnowConfig {
  double promotion = 1.5;    // alpha > 1
  double demotion = 0.8;     // beta in (0, 1)
  double threshold = 1.0;    // theta > 0
  double init_weight = 0.2;  // w_0 > 0
  int epochs = 2;

  void Validate() const;  // throws DataError
};

struct NbConfig {
  double smoothing = 0.1;  // lambda > 0
  void Validate() const;
};

// Additive rule, kept for comparison runs.
struct PerceptronConfig {
  double learning_rate = 0.1;
  double threshold = 1.0;
  double init_weight = 0.0;
  int epochs = 2;
  void Validate() const;
};

struct LearnerConfig {
  UpdateRule rule = UpdateRule::kWinnow;
  WinnowConfig winnow;
  NbConfig nb;
  PerceptronConfig perceptron;

  void Validate() const;
  int epochs() const;
  double threshold() const;
};

struct TargetNode {
  std::string label;
  double threshold = 1.0;
  std::uint64_t prior = 0;  // positive examples presented
  // Winnow/perceptron: link weights. Naive Bayes: per-feature counts.
  std::unordered_map<FeatureId, double> weights;
};

// Incremented once per weight lookup; lets tests check that scoring touches
// only the active features.
struct ScoreCounter {
  std::uint64_t lookups = 0;
};

// Sum of linked weights over the active features; unlinked features add 0.
double Activation(const TargetNode& target, std::span<const FeatureId> active,
                  ScoreCounter* counter = nullptr);

// One Winnow step. A positive example with activation <= theta links its
// missing features at w_0 and promotes every active link by alpha; a negative
// example with activation > theta demotes its active links by beta without
// linking anything. Returns whether the example was a mistake.
bool WinnowUpdate(TargetNode& target, std::span<const FeatureId> active,
                  bool positive, const WinnowConfig& config);

// Additive counterpart of WinnowUpdate.
bool PerceptronUpdate(TargetNode& target, std::span<const FeatureId> active,
                      bool positive, const PerceptronConfig& config);

// Counts a positive example; negatives are not reported to naive Bayes.
void NbUpdate(TargetNode& target, std::span<const FeatureId> active);

// log P(t) + sum over active features of log P(f | t), with
// P(f | t) = (count_t(f) + lambda) / (prior_t + 2 lambda).
double NbScore(const TargetNode& target, std::uint64_t total_prior,
               std::span<const FeatureId> active, const NbConfig& config,
               ScoreCounter* counter = nullptr);

class Network {
 public:
  explicit Network(LearnerConfig config = {});

  // Idempotent; new targets start with no links.
  TargetId AddTarget(std::string_view label);
  std::optional<TargetId> Find(std::string_view label) const;

  std::size_t size() const { return targets_.size(); }
  const TargetNode& target(TargetId id) const { return targets_.at(id); }
  TargetNode& mutable_target(TargetId id) { return targets_.at(id); }
  const LearnerConfig& config() const { return config_; }

  std::uint64_t total_prior() const;

  // Activation (Winnow, perceptron) or log posterior (naive Bayes).
  double Score(TargetId id, std::span<const FeatureId> active,
               ScoreCounter* counter = nullptr) const;
  // Same, with the network's total prior precomputed by the caller.
  double Score(TargetId id, std::span<const FeatureId> active,
               std::uint64_t total_prior, ScoreCounter* counter = nullptr) const;

 private:
  LearnerConfig config_;
  std::vector<TargetNode> targets_;
  std::map<std::string, TargetId, std::less<>> index_;
};

struct Example {
  std::vector<FeatureId> active;  // sorted, unique
  TargetId label = 0;
  // Targets the example is presented to; empty means every target.
  std::span<const TargetId> candidates;
};

// Sorts and deduplicates an active feature list in place.
void NormalizeActive(std::vector<FeatureId>& active);

struct TrainStats {
  std::uint64_t mistakes = 0;
  std::uint64_t promotions = 0;
  std::uint64_t demotions = 0;
  std::uint64_t presentations = 0;
};

// For each epoch, in order, every example is positive for its label and
// negative for every other target in its candidate set. Naive Bayes makes a
// single counting pass. Throws DataError if a label is outside its candidate
// set.
TrainStats Train(Network& network, std::span<const Example> examples);

struct CandidateScore {
  std::string label;
  double score = 0.0;
};

struct Prediction {
  std::string label;
  std::vector<CandidateScore> scores;  // in candidate order
};

// Winner-take-all. Ties go to the larger training prior, then to the
// lexicographically smaller label. Candidates without a target score -inf.
Prediction Predict(const Network& network, std::span<const FeatureId> active,
                   std::span<const std::string> candidates,
                   ScoreCounter* counter = nullptr);
TargetId PredictTarget(const Network& network, std::span<const FeatureId> active,
                       std::span<const TargetId> candidates);

// ---------------------------------------------------------------------------
// Model files
//
//   snowpredict-model<TAB>1
//   rule<TAB>winnow
//   <config key><TAB><value>...
//   features<TAB>N, then N definition lines
//   targets<TAB>M, then per target (sorted by label)
//     target<TAB>label<TAB>theta<TAB>prior<TAB>links
//     <feature-id><TAB><weight>   (sorted by id)
//   end

inline constexpr int kModelVersion = 1;

struct Model {
  Network network;
  std::vector<std::string> feature_definitions;
};

void SaveModel(std::ostream& out, const Network& network,
               std::span<const std::string> feature_definitions = {});
void SaveModelFile(const std::string& path, const Network& network,
                   std::span<const std::string> feature_definitions = {});
// Throws DataError on bad magic, version mismatch or truncation.
Model LoadModel(std::istream& in);
Model LoadModelFile(const std::string& path);

}  // namespace snowpredict

#endif  // SNOWPREDICT_SNOW_H_
