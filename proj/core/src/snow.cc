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

#include "snowpredict/snow.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "snowpredict/error.h"

namespace snowpredict {

std::string_view UpdateRuleName(UpdateRule rule) {
  switch (rule) {
    case UpdateRule::kWinnow:
      return "winnow";
    case UpdateRule::kNaiveBayes:
      return "nb";
    case UpdateRule::kPerceptron:
      return "perceptron";
  }
  return "unknown";
}

std::optional<UpdateRule> ParseUpdateRule(std::string_view name) {
  if (name == "winnow") return UpdateRule::kWinnow;
  if (name == "nb") return UpdateRule::kNaiveBayes;
  if (name == "perceptron") return UpdateRule::kPerceptron;
  return std::nullopt;
}

void WinnowConfig::Validate() const {
  if (!(promotion > 1.0)) throw DataError("winnow promotion must be > 1");
  if (!(demotion > 0.0 && demotion < 1.0)) {
    throw DataError("winnow demotion must be in (0, 1)");
  }
  if (!(threshold > 0.0)) throw DataError("winnow threshold must be > 0");
  if (!(init_weight > 0.0)) throw DataError("winnow initial weight must be > 0");
  if (epochs < 1) throw DataError("epochs must be >= 1");
}

void NbConfig::Validate() const {
  if (!(smoothing > 0.0)) throw DataError("naive Bayes smoothing must be > 0");
}

void PerceptronConfig::Validate() const {
  if (!(learning_rate > 0.0)) throw DataError("perceptron learning rate must be > 0");
  if (epochs < 1) throw DataError("epochs must be >= 1");
}

void LearnerConfig::Validate() const {
  winnow.Validate();
  nb.Validate();
  perceptron.Validate();
}

int LearnerConfig::epochs() const {
  switch (rule) {
    case UpdateRule::kWinnow:
      return winnow.epochs;
    case UpdateRule::kPerceptron:
      return perceptron.epochs;
    case UpdateRule::kNaiveBayes:
      return 1;
  }
  return 1;
}

double LearnerConfig::threshold() const {
  switch (rule) {
    case UpdateRule::kWinnow:
      return winnow.threshold;
    case UpdateRule::kPerceptron:
      return perceptron.threshold;
    case UpdateRule::kNaiveBayes:
      return 0.0;
  }
  return 0.0;
}

double Activation(const TargetNode& target, std::span<const FeatureId> active,
                  ScoreCounter* counter) {
  double sum = 0.0;
  for (FeatureId f : active) {
    auto it = target.weights.find(f);
    if (it != target.weights.end()) sum += it->second;
  }
  if (counter) counter->lookups += active.size();
  return sum;
}

bool WinnowUpdate(TargetNode& target, std::span<const FeatureId> active,
                  bool positive, const WinnowConfig& config) {
  const double activation = Activation(target, active);
  if (positive) {
    if (activation > target.threshold) return false;
    for (FeatureId f : active) {
      auto [it, inserted] = target.weights.try_emplace(f, config.init_weight);
      it->second *= config.promotion;
    }
    return true;
  }
  if (activation <= target.threshold) return false;
  for (FeatureId f : active) {
    auto it = target.weights.find(f);
    if (it != target.weights.end()) it->second *= config.demotion;
  }
  return true;
}

bool PerceptronUpdate(TargetNode& target, std::span<const FeatureId> active,
                      bool positive, const PerceptronConfig& config) {
  const double activation = Activation(target, active);
  if (positive) {
    if (activation > target.threshold) return false;
    for (FeatureId f : active) {
      auto [it, inserted] = target.weights.try_emplace(f, config.init_weight);
      it->second += config.learning_rate;
    }
    return true;
  }
  if (activation <= target.threshold) return false;
  for (FeatureId f : active) {
    auto it = target.weights.find(f);
    if (it != target.weights.end()) it->second -= config.learning_rate;
  }
  return true;
}

void NbUpdate(TargetNode& target, std::span<const FeatureId> active) {
  ++target.prior;
  for (FeatureId f : active) target.weights[f] += 1.0;
}

double NbScore(const TargetNode& target, std::uint64_t total_prior,
               std::span<const FeatureId> active, const NbConfig& config,
               ScoreCounter* counter) {
  if (target.prior == 0 || total_prior == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  const double lambda = config.smoothing;
  const double denominator = std::log(static_cast<double>(target.prior) + 2.0 * lambda);
  double score = std::log(static_cast<double>(target.prior) /
                          static_cast<double>(total_prior));
  for (FeatureId f : active) {
    auto it = target.weights.find(f);
    const double count = it == target.weights.end() ? 0.0 : it->second;
    score += std::log(count + lambda) - denominator;
  }
  if (counter) counter->lookups += active.size();
  return score;
}

Network::Network(LearnerConfig config) : config_(config) {}

TargetId Network::AddTarget(std::string_view label) {
  if (auto id = Find(label)) return *id;
  const auto id = static_cast<TargetId>(targets_.size());
  TargetNode node;
  node.label = label;
  node.threshold = config_.threshold();
  targets_.push_back(std::move(node));
  index_.emplace(std::string(label), id);
  return id;
}

std::optional<TargetId> Network::Find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Network::total_prior() const {
  std::uint64_t total = 0;
  for (const TargetNode& t : targets_) total += t.prior;
  return total;
}

double Network::Score(TargetId id, std::span<const FeatureId> active,
                      ScoreCounter* counter) const {
  return Score(id, active, total_prior(), counter);
}

double Network::Score(TargetId id, std::span<const FeatureId> active,
                      std::uint64_t total_prior, ScoreCounter* counter) const {
  const TargetNode& node = targets_.at(id);
  if (config_.rule == UpdateRule::kNaiveBayes) {
    return NbScore(node, total_prior, active, config_.nb, counter);
  }
  return Activation(node, active, counter);
}

void NormalizeActive(std::vector<FeatureId>& active) {
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
}

TrainStats Train(Network& network, std::span<const Example> examples) {
  const LearnerConfig& config = network.config();
  TrainStats stats;
  std::vector<TargetId> all(network.size());
  for (TargetId t = 0; t < all.size(); ++t) all[t] = t;

  for (const Example& ex : examples) {
    if (ex.label >= network.size()) throw DataError("example label has no target");
    if (!ex.candidates.empty() &&
        std::find(ex.candidates.begin(), ex.candidates.end(), ex.label) ==
            ex.candidates.end()) {
      throw DataError("example label '" + network.target(ex.label).label +
                      "' is outside its confusion set");
    }
  }

  for (int epoch = 0; epoch < config.epochs(); ++epoch) {
    for (const Example& ex : examples) {
      if (config.rule == UpdateRule::kNaiveBayes) {
        NbUpdate(network.mutable_target(ex.label), ex.active);
        ++stats.presentations;
        continue;
      }
      std::span<const TargetId> targets = ex.candidates.empty()
                                              ? std::span<const TargetId>(all)
                                              : ex.candidates;
      if (epoch == 0) ++network.mutable_target(ex.label).prior;
      for (TargetId t : targets) {
        const bool positive = t == ex.label;
        TargetNode& node = network.mutable_target(t);
        const bool mistake =
            config.rule == UpdateRule::kWinnow
                ? WinnowUpdate(node, ex.active, positive, config.winnow)
                : PerceptronUpdate(node, ex.active, positive, config.perceptron);
        ++stats.presentations;
        if (mistake) {
          ++stats.mistakes;
          ++(positive ? stats.promotions : stats.demotions);
        }
      }
    }
  }
  return stats;
}

namespace {

// True if candidate a beats candidate b.
bool Beats(double score_a, const TargetNode* a, std::string_view label_a,
           double score_b, const TargetNode* b, std::string_view label_b) {
  if (score_a != score_b) return score_a > score_b;
  const std::uint64_t prior_a = a ? a->prior : 0;
  const std::uint64_t prior_b = b ? b->prior : 0;
  if (prior_a != prior_b) return prior_a > prior_b;
  return label_a < label_b;
}

}  // namespace

Prediction Predict(const Network& network, std::span<const FeatureId> active,
                   std::span<const std::string> candidates,
                   ScoreCounter* counter) {
  if (candidates.empty()) throw DataError("empty candidate set");
  Prediction prediction;
  prediction.scores.reserve(candidates.size());
  const std::uint64_t total = network.total_prior();
  const TargetNode* best_node = nullptr;
  double best_score = 0.0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const std::string& label = candidates[i];
    auto id = network.Find(label);
    double score = -std::numeric_limits<double>::infinity();
    const TargetNode* node = nullptr;
    if (id) {
      node = &network.target(*id);
      score = network.Score(*id, active, total, counter);
    } else {
      spdlog::warn("candidate '{}' has no trained target", label);
    }
    prediction.scores.push_back({label, score});
    if (i == 0 || Beats(score, node, label, best_score, best_node, prediction.label)) {
      best_score = score;
      best_node = node;
      prediction.label = label;
    }
  }
  return prediction;
}

TargetId PredictTarget(const Network& network, std::span<const FeatureId> active,
                       std::span<const TargetId> candidates) {
  if (candidates.empty()) throw DataError("empty candidate set");
  const std::uint64_t total = network.total_prior();
  TargetId best = candidates.front();
  double best_score = network.Score(best, active, total);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const TargetId t = candidates[i];
    const double score = network.Score(t, active, total);
    if (Beats(score, &network.target(t), network.target(t).label, best_score,
              &network.target(best), network.target(best).label)) {
      best = t;
      best_score = score;
    }
  }
  return best;
}

}  // namespace snowpredict
