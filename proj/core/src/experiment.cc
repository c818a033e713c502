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

#include "snowpredict/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include <spdlog/spdlog.h>

#include "parallel.h"
#include "snowpredict/error.h"

namespace snowpredict {

std::string_view LearnerColumn(Learner learner) {
  switch (learner) {
    case Learner::kMle:
      return "Bline";
    case Learner::kTrigram:
      return "Trigram";
    case Learner::kNaiveBayes:
      return "NB";
    case Learner::kWinnow:
      return "SNoW";
    case Learner::kPerceptron:
      return "Perceptron";
  }
  return "?";
}

std::optional<Learner> ParseLearner(std::string_view name) {
  if (name == "mle" || name == "baseline") return Learner::kMle;
  if (name == "trigram") return Learner::kTrigram;
  if (name == "nb") return Learner::kNaiveBayes;
  if (name == "winnow" || name == "snow") return Learner::kWinnow;
  if (name == "perceptron") return Learner::kPerceptron;
  return std::nullopt;
}

std::optional<ConfusionSource> ParseConfusionSource(std::string_view name) {
  if (name == "pairs") return ConfusionSource::kPairs;
  if (name == "phonetic") return ConfusionSource::kPhonetic;
  if (name == "all") return ConfusionSource::kAll;
  if (name == "file") return ConfusionSource::kFile;
  return std::nullopt;
}

std::optional<TrainRegime> ParseTrainRegime(std::string_view name) {
  if (name == "train-all" || name == "all") return TrainRegime::kAll;
  if (name == "train-per-set" || name == "per-set") return TrainRegime::kPerSet;
  return std::nullopt;
}

std::optional<TestRegime> ParseTestRegime(std::string_view name) {
  if (name == "test-all" || name == "all") return TestRegime::kAll;
  if (name == "test-per-set" || name == "per-set") return TestRegime::kPerSet;
  return std::nullopt;
}

std::string RegimeLabel(const Regime& regime, ConfusionSource source) {
  std::string set_name;
  switch (source) {
    case ConfusionSource::kPairs:
      set_name = "2";
      break;
    case ConfusionSource::kPhonetic:
      set_name = "PC";
      break;
    case ConfusionSource::kAll:
      set_name = "All";
      break;
    case ConfusionSource::kFile:
      set_name = "Set";
      break;
  }
  std::string label = "Train ";
  label += regime.train == TrainRegime::kAll ? "All" : set_name;
  label += " Test ";
  label += regime.test == TestRegime::kAll ? "All" : set_name;
  return label;
}

std::pair<std::vector<Sentence>, std::vector<Sentence>> SplitCorpus(
    std::span<const Sentence> sentences, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw DataError("split fraction must lie strictly between 0 and 1");
  }
  if (sentences.empty()) throw DataError("cannot split an empty corpus");
  const double exact = static_cast<double>(sentences.size()) * fraction;
  auto cut = static_cast<std::size_t>(std::floor(exact + 0.5 + 1e-9));
  cut = std::min(cut, sentences.size());
  std::pair<std::vector<Sentence>, std::vector<Sentence>> out;
  out.first.assign(sentences.begin(), sentences.begin() + cut);
  out.second.assign(sentences.begin() + cut, sentences.end());
  if (out.first.empty()) spdlog::warn("training split is empty");
  if (out.second.empty()) spdlog::warn("test split is empty");
  return out;
}

FrequencyTable CountTargets(std::span<const Sentence> sentences,
                            std::string_view pos_prefix) {
  FrequencyTable counts;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) {
      if (std::string_view(t.pos).starts_with(pos_prefix)) ++counts[t.form];
    }
  }
  return counts;
}

ConfusionAssignment::ConfusionAssignment(std::vector<ConfusionSet> sets)
    : sets_(std::move(sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].members.empty()) throw DataError("empty confusion set");
    for (const auto& m : sets_[i].members) {
      auto [it, inserted] = set_of_.emplace(m, static_cast<int>(i));
      if (!inserted) {
        throw DataError("word '" + m + "' belongs to more than one confusion set");
      }
      targets_.push_back(m);
    }
  }
  std::sort(targets_.begin(), targets_.end());
}

std::optional<int> ConfusionAssignment::SetOf(std::string_view word) const {
  auto it = set_of_.find(word);
  if (it == set_of_.end()) return std::nullopt;
  return it->second;
}

std::string ConfusionAssignment::SetKey(int set) const {
  std::string key;
  for (const auto& m : sets_.at(set).members) {
    if (!key.empty()) key += '/';
    key += m;
  }
  return key;
}

std::vector<PredictionExample> GenerateExamples(
    std::span<const Sentence> sentences, const ConfusionAssignment& assignment,
    std::span<const FeatureType> types, Lexicon& lexicon, bool allocate,
    int jobs) {
  struct Pending {
    int focus;
    int set;
    std::vector<std::string> identities;
  };
  constexpr std::size_t kChunk = 512;
  std::vector<PredictionExample> examples;
  for (std::size_t begin = 0; begin < sentences.size(); begin += kChunk) {
    const std::size_t end = std::min(sentences.size(), begin + kChunk);
    std::vector<std::vector<Pending>> pending(end - begin);
    internal::ParallelFor(end - begin, jobs, [&](std::size_t k) {
      const Sentence& s = sentences[begin + k];
      std::optional<AnalyzedSentence> analyzed;
      for (int pos = 1; pos <= s.size(); ++pos) {
        auto set = assignment.SetOf(s.at(pos).form);
        if (!set) continue;
        if (!analyzed) analyzed = Analyze(s);
        pending[k].push_back({pos, *set, Instantiate(types, *analyzed, pos)});
      }
    });
    for (std::size_t k = 0; k < pending.size(); ++k) {
      for (auto& p : pending[k]) {
        PredictionExample ex;
        ex.sentence = static_cast<int>(begin + k);
        ex.focus = p.focus;
        ex.gold = sentences[begin + k].at(p.focus).form;
        ex.set = p.set;
        ex.features.reserve(p.identities.size());
        for (const auto& id : p.identities) {
          if (auto f = lexicon.Intern(id, allocate)) ex.features.push_back(*f);
        }
        NormalizeActive(ex.features);
        examples.push_back(std::move(ex));
      }
    }
  }
  return examples;
}

void ApplyFeatureFloor(std::vector<PredictionExample>& examples,
                       const Lexicon& lexicon, std::uint64_t floor) {
  if (floor <= 1) return;
  for (auto& ex : examples) {
    std::erase_if(ex.features,
                  [&](FeatureId f) { return lexicon.Count(f) < floor; });
  }
}

WerResult EvaluateWer(std::span<const PredictionExample> examples,
                      const ConfusionAssignment& assignment,
                      const CandidateFn& candidates, const PredictFn& predict,
                      int jobs) {
  if (examples.empty()) throw DataError("cannot evaluate an empty example set");
  std::vector<char> wrong(examples.size(), 0);
  internal::ParallelFor(examples.size(), jobs, [&](std::size_t i) {
    const auto& ex = examples[i];
    wrong[i] = predict(ex, candidates(ex)) != ex.gold;
  });
  WerResult result;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    auto& cell = result.per_set[assignment.SetKey(examples[i].set)];
    ++cell.second;
    ++result.total;
    if (wrong[i]) {
      ++cell.first;
      ++result.mistakes;
    }
  }
  return result;
}

Network TrainNetwork(std::span<const PredictionExample> examples,
                     const ConfusionAssignment& assignment, TrainRegime regime,
                     const LearnerConfig& config, TrainStats* stats) {
  Network network(config);
  for (const auto& t : assignment.targets()) network.AddTarget(t);
  std::vector<std::vector<TargetId>> set_ids(assignment.sets().size());
  for (std::size_t i = 0; i < set_ids.size(); ++i) {
    for (const auto& m : assignment.sets()[i].members) {
      set_ids[i].push_back(*network.Find(m));
    }
  }
  std::vector<Example> train;
  train.reserve(examples.size());
  for (const auto& ex : examples) {
    Example e;
    e.active = ex.features;
    e.label = *network.Find(ex.gold);
    if (regime == TrainRegime::kPerSet) e.candidates = set_ids.at(ex.set);
    train.push_back(std::move(e));
  }
  TrainStats s = Train(network, train);
  if (stats != nullptr) *stats = s;
  return network;
}

namespace {

FrequencyTable AtFloor(const FrequencyTable& counts, std::uint64_t floor) {
  FrequencyTable out;
  for (const auto& [w, c] : counts) {
    if (c >= floor) out.emplace(w, c);
  }
  return out;
}

std::string FormatDouble(double v) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << v;
  return out.str();
}

}  // namespace

std::vector<ConfusionSet> BuildConfusionSets(const ExperimentData& data,
                                             const ExperimentOptions& options) {
  const FrequencyTable counts = CountTargets(data.train, options.target_pos_prefix);
  std::vector<ConfusionSet> sets;
  switch (options.source) {
    case ConfusionSource::kPairs:
      sets = EqualFrequencyPairs(counts, options.frequency_floor);
      break;
    case ConfusionSource::kAll: {
      auto eligible = AtFloor(counts, options.frequency_floor);
      if (eligible.size() < 2) {
        throw DataError("fewer than two target words reach the frequency floor");
      }
      sets.push_back(AllTargetsSet(eligible));
      break;
    }
    case ConfusionSource::kPhonetic:
      if (!data.pronunciations || !data.phonetic_classes) {
        throw DataError(
            "phonetic confusion sets need a pronunciation lexicon and a class map");
      }
      sets = PhoneticConfusionSets(AtFloor(counts, options.frequency_floor),
                                   *data.pronunciations, *data.phonetic_classes,
                                   options.baseline_cap);
      break;
    case ConfusionSource::kFile:
      sets = data.sets;
      for (auto& s : sets) {
        s.frequencies.assign(s.members.size(), 0);
        for (std::size_t i = 0; i < s.members.size(); ++i) {
          auto it = counts.find(s.members[i]);
          if (it != counts.end()) s.frequencies[i] = it->second;
        }
      }
      break;
  }
  if (sets.empty()) throw DataError("no confusion sets were produced");
  return sets;
}

EvaluationReport RunExperiment(const ExperimentData& data,
                               const ExperimentOptions& options) {
  options.learner.Validate();
  if (data.train.empty()) throw DataError("training split is empty");
  if (data.test.empty()) throw DataError("test split is empty");
  if (data.feature_sets.empty()) throw DataError("no feature sets given");
  if (options.learners.empty()) throw DataError("no learners selected");
  if (options.regimes.empty()) throw DataError("no regimes selected");

  const ConfusionAssignment assignment(BuildConfusionSets(data, options));
  const std::vector<std::string>& all_targets = assignment.targets();
  spdlog::info("{} confusion sets over {} targets", assignment.sets().size(),
               all_targets.size());

  const bool need_trigram =
      std::find(options.learners.begin(), options.learners.end(),
                Learner::kTrigram) != options.learners.end();
  std::optional<NgramTable> trigram;
  std::vector<std::vector<std::string>> test_words;
  if (need_trigram) {
    NgramTable::Builder builder(options.trigram_discount);
    std::vector<std::string> words;
    for (const auto& s : data.train) {
      words.clear();
      for (const auto& t : s.tokens) words.push_back(t.form);
      builder.AddSentence(words);
    }
    trigram = std::move(builder).Build();
    for (const auto& s : data.test) {
      auto& w = test_words.emplace_back();
      for (const auto& t : s.tokens) w.push_back(t.form);
    }
  }

  EvaluationReport report;
  report.title = "Word error rate (%)";
  for (Learner l : options.learners) report.columns.emplace_back(LearnerColumn(l));
  report.stats.emplace_back("train sentences", std::to_string(data.train.size()));
  report.stats.emplace_back("test sentences", std::to_string(data.test.size()));
  report.stats.emplace_back("confusion sets",
                            std::to_string(assignment.sets().size()));
  report.stats.emplace_back("targets", std::to_string(all_targets.size()));
  report.stats.emplace_back(
      "mean set size",
      FormatDouble(static_cast<double>(all_targets.size()) /
                   static_cast<double>(assignment.sets().size())));

  auto candidates_for = [&](TestRegime regime) -> CandidateFn {
    if (regime == TestRegime::kAll) {
      return [&](const PredictionExample&) {
        return std::span<const std::string>(all_targets);
      };
    }
    return [&](const PredictionExample& ex) {
      return std::span<const std::string>(assignment.sets()[ex.set].members);
    };
  };

  const bool label_by_set = data.feature_sets.size() > 1;
  const bool label_by_regime = options.regimes.size() > 1 || !label_by_set;
  for (const auto& fs : data.feature_sets) {
    Lexicon lexicon;
    auto train = GenerateExamples(data.train, assignment, fs.types, lexicon,
                                  /*allocate=*/true, options.jobs);
    ApplyFeatureFloor(train, lexicon, options.feature_floor);
    lexicon.Freeze();
    auto test = GenerateExamples(data.test, assignment, fs.types, lexicon,
                                 /*allocate=*/false, options.jobs);
    ApplyFeatureFloor(test, lexicon, options.feature_floor);
    if (train.empty()) throw DataError("no training examples for the targets");
    if (test.empty()) throw DataError("no test examples for the targets");
    report.stats.emplace_back("train examples [" + fs.label + "]",
                              std::to_string(train.size()));
    report.stats.emplace_back("test examples [" + fs.label + "]",
                              std::to_string(test.size()));
    report.stats.emplace_back("features [" + fs.label + "]",
                              std::to_string(lexicon.size()));

    FrequencyTable gold_counts;
    for (const auto& ex : train) ++gold_counts[ex.gold];

    std::map<std::pair<Learner, TrainRegime>, Network> networks;
    auto network_for = [&](Learner l, TrainRegime r) -> const Network& {
      auto key = std::make_pair(l, r);
      auto it = networks.find(key);
      if (it != networks.end()) return it->second;
      LearnerConfig config = options.learner;
      config.rule = l == Learner::kNaiveBayes ? UpdateRule::kNaiveBayes
                    : l == Learner::kWinnow   ? UpdateRule::kWinnow
                                              : UpdateRule::kPerceptron;
      TrainStats stats;
      Network net = TrainNetwork(train, assignment, r, config, &stats);
      spdlog::info("{} [{}] {}: {} mistakes over {} presentations", fs.label,
                   r == TrainRegime::kAll ? "train-all" : "train-per-set",
                   LearnerColumn(l), stats.mistakes, stats.presentations);
      return networks.emplace(key, std::move(net)).first->second;
    };

    for (const auto& regime : options.regimes) {
      ReportRow row;
      if (label_by_set && label_by_regime) {
        row.label = fs.label + " / " + RegimeLabel(regime, options.source);
      } else if (label_by_set) {
        row.label = fs.label;
      } else {
        row.label = RegimeLabel(regime, options.source);
      }
      const CandidateFn candidates = candidates_for(regime.test);
      for (Learner l : options.learners) {
        PredictFn predict;
        switch (l) {
          case Learner::kMle:
            predict = [&](const PredictionExample&,
                          std::span<const std::string> c) {
              return MlePredict(c, gold_counts);
            };
            break;
          case Learner::kTrigram:
            predict = [&](const PredictionExample& ex,
                          std::span<const std::string> c) {
              return TrigramPredict(c, test_words[ex.sentence], ex.focus, *trigram,
                                    options.trigram_right_context);
            };
            break;
          default: {
            const Network& net = network_for(l, regime.train);
            predict = [&net](const PredictionExample& ex,
                             std::span<const std::string> c) {
              return Predict(net, ex.features, c).label;
            };
            break;
          }
        }
        row.cells.push_back({std::string(LearnerColumn(l)),
                             EvaluateWer(test, assignment, candidates, predict,
                                         options.jobs)});
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

EvaluationReport RunExperiment(const ExperimentConfig& config) {
  auto load = [](const std::string& path) {
    CorpusParseResult parsed = ReadCorpusFile(path);
    for (const auto& d : parsed.diagnostics) {
      spdlog::warn("{}:{}: {}", path, d.line, d.message);
    }
    return std::move(parsed.sentences);
  };
  ExperimentData data;
  if (!config.corpus_path.empty()) {
    if (!config.train_path.empty() || !config.test_path.empty()) {
      throw DataError("give either a corpus to split or train and test files");
    }
    auto all = load(config.corpus_path);
    std::tie(data.train, data.test) = SplitCorpus(all, config.split_fraction);
  } else {
    if (config.train_path.empty() || config.test_path.empty()) {
      throw DataError("no corpus given");
    }
    data.train = load(config.train_path);
    data.test = load(config.test_path);
  }
  PredicateRegistry registry = PredicateRegistry::FromCorpus(data.train);
  const PredicateRegistry defaults = DefaultRegistry();
  for (const auto& r : defaults.relations()) registry.AddRelation(r);
  if (config.feature_files.empty()) throw DataError("no feature files given");
  for (const auto& [label, path] : config.feature_files) {
    data.feature_sets.push_back({label, ReadFeatureTypesFile(path, registry)});
  }
  if (!config.sets_path.empty()) {
    data.sets = ReadConfusionSetsFile(config.sets_path);
  } else if (config.options.source == ConfusionSource::kFile) {
    throw DataError("confusion source 'file' needs a sets file");
  }
  if (!config.pronunciations_path.empty()) {
    data.pronunciations = PronunciationLexicon::LoadFile(config.pronunciations_path);
  }
  if (!config.phonetic_classes_path.empty()) {
    data.phonetic_classes = PhoneticClassMap::LoadFile(config.phonetic_classes_path);
  }
  return RunExperiment(data, config.options);
}

}  // namespace snowpredict
