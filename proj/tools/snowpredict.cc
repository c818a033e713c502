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

// snowpredict: corpus preparation, confusion sets, feature extraction,
// training, evaluation, model inspection and synthetic corpora.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "snowpredict/baselines.h"
#include "snowpredict/confusion.h"
#include "snowpredict/corpus.h"
#include "snowpredict/error.h"
#include "snowpredict/experiment.h"
#include "snowpredict/features.h"
#include "snowpredict/lexicon.h"
#include "snowpredict/log.h"
#include "snowpredict/report.h"
#include "snowpredict/snow.h"
#include "snowpredict/synth.h"

namespace sp = snowpredict;

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

std::string DataDir() {
  if (const char* env = std::getenv("SNOWPREDICT_DATA")) return env;
  for (const char* dir : {SNOWPREDICT_INSTALL_DATA_DIR, SNOWPREDICT_SOURCE_DATA_DIR}) {
    if (std::filesystem::exists(std::filesystem::path(dir) / "features")) return dir;
  }
  return SNOWPREDICT_SOURCE_DATA_DIR;
}

std::vector<sp::Sentence> LoadCorpus(const std::string& path) {
  sp::CorpusParseResult parsed = sp::ReadCorpusFile(path);
  for (const auto& d : parsed.diagnostics) {
    spdlog::warn("{}:{}: {}", path, d.line, d.message);
  }
  return std::move(parsed.sentences);
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw sp::DataError("cannot write " + path);
  return out;
}

sp::PredicateRegistry RegistryFor(std::span<const sp::Sentence> sentences) {
  sp::PredicateRegistry registry = sp::PredicateRegistry::FromCorpus(sentences);
  const sp::PredicateRegistry defaults = sp::DefaultRegistry();
  for (const auto& r : defaults.relations()) registry.AddRelation(r);
  return registry;
}

struct LearnerFlags {
  std::string rule = "winnow";
  std::optional<double> promotion, demotion, threshold, init_weight, smoothing,
      learning_rate;
  std::optional<int> epochs;

  void Register(CLI::App* app) {
    app->add_option("--rule", rule, "Update rule: winnow, nb or perceptron")
        ->capture_default_str();
    app->add_option("--promotion", promotion, "Winnow promotion factor (alpha)");
    app->add_option("--demotion", demotion, "Winnow demotion factor (beta)");
    app->add_option("--threshold", threshold, "Target threshold (theta)");
    app->add_option("--init-weight", init_weight, "Initial link weight");
    app->add_option("--epochs", epochs, "Training passes");
    app->add_option("--smoothing", smoothing, "Naive Bayes smoothing (lambda)");
    app->add_option("--learning-rate", learning_rate, "Perceptron learning rate");
  }

  sp::LearnerConfig Build() const {
    sp::LearnerConfig config;
    auto parsed = sp::ParseUpdateRule(rule);
    if (!parsed) throw CLI::ValidationError("--rule", "unknown rule '" + rule + "'");
    config.rule = *parsed;
    if (promotion) config.winnow.promotion = *promotion;
    if (demotion) config.winnow.demotion = *demotion;
    if (smoothing) config.nb.smoothing = *smoothing;
    if (learning_rate) config.perceptron.learning_rate = *learning_rate;
    if (threshold) {
      config.winnow.threshold = *threshold;
      config.perceptron.threshold = *threshold;
    }
    if (init_weight) {
      config.winnow.init_weight = *init_weight;
      config.perceptron.init_weight = *init_weight;
    }
    if (epochs) {
      config.winnow.epochs = *epochs;
      config.perceptron.epochs = *epochs;
    }
    config.Validate();
    return config;
  }
};

std::string DefaultLexiconPath(const std::string& model) { return model + ".lex"; }

// ---------------------------------------------------------------------------
// prepare

struct PrepareFlags {
  std::string input;
  std::string output;
  std::string train_out;
  std::string test_out;
  double split = 0.8;
};

int RunPrepare(const PrepareFlags& f) {
  auto sentences = LoadCorpus(f.input);
  if (!f.output.empty()) sp::WriteCorpusFile(f.output, sentences);
  if (!f.train_out.empty()) {
    auto [train, test] = sp::SplitCorpus(sentences, f.split);
    sp::WriteCorpusFile(f.train_out, train);
    sp::WriteCorpusFile(f.test_out, test);
    std::cout << "train\t" << train.size() << "\ntest\t" << test.size() << '\n';
  }
  std::cout << "sentences\t" << sentences.size() << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// confusions

struct ConfusionFlags {
  std::string corpus;
  std::string output;
  std::string source = "pairs";
  std::string pos_prefix = "VB";
  std::uint64_t floor = sp::kDefaultFrequencyFloor;
  std::string pronunciations;
  std::string classes;
  std::optional<double> cap;
};

int RunConfusions(const ConfusionFlags& f) {
  sp::ExperimentData data;
  data.train = LoadCorpus(f.corpus);
  sp::ExperimentOptions options;
  auto source = sp::ParseConfusionSource(f.source);
  if (!source || *source == sp::ConfusionSource::kFile) {
    throw CLI::ValidationError("--source", "expected pairs, phonetic or all");
  }
  options.source = *source;
  options.target_pos_prefix = f.pos_prefix;
  options.frequency_floor = f.floor;
  options.baseline_cap = f.cap;
  if (options.source == sp::ConfusionSource::kPhonetic) {
    data.pronunciations = sp::PronunciationLexicon::LoadFile(
        f.pronunciations.empty() ? DataDir() + "/pronunciations.tsv" : f.pronunciations);
    data.phonetic_classes = sp::PhoneticClassMap::LoadFile(
        f.classes.empty() ? DataDir() + "/phonetic_classes.tsv" : f.classes);
  }
  auto sets = sp::BuildConfusionSets(data, options);
  if (f.output.empty()) {
    sp::WriteConfusionSets(std::cout, sets);
  } else {
    sp::WriteConfusionSetsFile(f.output, sets);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// extract

struct ExtractFlags {
  std::string corpus;
  std::string features;
  std::string sets;
  std::string output;
  std::string lexicon;
  int jobs = 1;
};

int RunExtract(const ExtractFlags& f) {
  auto sentences = LoadCorpus(f.corpus);
  auto types = sp::ReadFeatureTypesFile(f.features, RegistryFor(sentences));
  sp::ConfusionAssignment assignment(sp::ReadConfusionSetsFile(f.sets));
  sp::Lexicon lexicon;
  auto examples = sp::GenerateExamples(sentences, assignment, types, lexicon,
                                       /*allocate=*/true, f.jobs);
  std::ofstream file;
  if (!f.output.empty()) file = OpenOutput(f.output);
  std::ostream& out = f.output.empty() ? std::cout : file;
  for (const auto& ex : examples) {
    out << ex.sentence + 1 << '\t' << ex.focus << '\t' << ex.gold;
    for (sp::FeatureId id : ex.features) out << '\t' << lexicon.Identity(id);
    out << '\n';
  }
  if (!f.lexicon.empty()) lexicon.SaveFile(f.lexicon);
  spdlog::info("{} examples, {} features", examples.size(), lexicon.size());
  return 0;
}

// ---------------------------------------------------------------------------
// train

struct TrainFlags {
  std::string corpus;
  std::string features;
  std::string sets;
  std::string model;
  std::string lexicon;
  std::string regime = "per-set";
  std::uint64_t feature_floor = 1;
  LearnerFlags learner;
  int jobs = 1;
};

int RunTrain(const TrainFlags& f) {
  const sp::LearnerConfig config = f.learner.Build();
  auto regime = sp::ParseTrainRegime(f.regime);
  if (!regime) throw CLI::ValidationError("--regime", "expected all or per-set");
  auto sentences = LoadCorpus(f.corpus);
  auto types = sp::ReadFeatureTypesFile(f.features, RegistryFor(sentences));
  sp::ConfusionAssignment assignment(sp::ReadConfusionSetsFile(f.sets));
  sp::Lexicon lexicon;
  auto examples = sp::GenerateExamples(sentences, assignment, types, lexicon,
                                       /*allocate=*/true, f.jobs);
  if (examples.empty()) throw sp::DataError("no training examples for the targets");
  sp::ApplyFeatureFloor(examples, lexicon, f.feature_floor);
  sp::TrainStats stats;
  sp::Network network = sp::TrainNetwork(examples, assignment, *regime, config, &stats);
  std::vector<std::string> definitions;
  for (const auto& t : types) definitions.push_back(sp::FormatFeatureType(t));
  sp::SaveModelFile(f.model, network, definitions);
  lexicon.SaveFile(f.lexicon.empty() ? DefaultLexiconPath(f.model) : f.lexicon);
  std::cout << "examples\t" << examples.size() << "\nfeatures\t" << lexicon.size()
            << "\ntargets\t" << network.size() << "\nmistakes\t" << stats.mistakes
            << "\npresentations\t" << stats.presentations << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalFlags {
  std::string model;
  std::string lexicon;
  std::string test;
  std::string sets;
  std::string regime = "per-set";
  std::string tsv;
  std::uint64_t feature_floor = 1;
  int jobs = 1;
};

int RunEval(const EvalFlags& f) {
  auto test_regime = sp::ParseTestRegime(f.regime);
  if (!test_regime) throw CLI::ValidationError("--regime", "expected all or per-set");
  sp::Model model = sp::LoadModelFile(f.model);
  sp::Lexicon lexicon =
      sp::Lexicon::LoadFile(f.lexicon.empty() ? DefaultLexiconPath(f.model) : f.lexicon);
  lexicon.Freeze();
  std::vector<sp::FeatureType> types;
  const auto registry = sp::PredicateRegistry::Permissive();
  for (const auto& d : model.feature_definitions) {
    types.push_back(sp::ParseFeatureType(d, registry));
  }
  auto sentences = LoadCorpus(f.test);
  sp::ConfusionAssignment assignment(sp::ReadConfusionSetsFile(f.sets));
  auto examples = sp::GenerateExamples(sentences, assignment, types, lexicon,
                                       /*allocate=*/false, f.jobs);
  sp::ApplyFeatureFloor(examples, lexicon, f.feature_floor);

  const sp::Network& net = model.network;
  const auto& all = assignment.targets();
  sp::CandidateFn candidates = [&](const sp::PredictionExample& ex) {
    return *test_regime == sp::TestRegime::kAll
               ? std::span<const std::string>(all)
               : std::span<const std::string>(assignment.sets()[ex.set].members);
  };
  sp::FrequencyTable priors;
  for (std::size_t t = 0; t < net.size(); ++t) {
    priors[net.target(static_cast<sp::TargetId>(t)).label] =
        net.target(static_cast<sp::TargetId>(t)).prior;
  }
  sp::EvaluationReport report;
  report.title = "Word error rate (%)";
  const std::string column = net.config().rule == sp::UpdateRule::kWinnow
                                 ? "SNoW"
                             : net.config().rule == sp::UpdateRule::kNaiveBayes
                                 ? "NB"
                                 : "Perceptron";
  report.columns = {"Bline", column};
  sp::ReportRow row;
  row.label =
      *test_regime == sp::TestRegime::kAll ? std::string("Test All") : "Test Set";
  row.cells.push_back(
      {"Bline",
       sp::EvaluateWer(examples, assignment, candidates,
                       [&](const sp::PredictionExample&, std::span<const std::string> c) {
                         return sp::MlePredict(c, priors);
                       },
                       f.jobs)});
  row.cells.push_back(
      {column,
       sp::EvaluateWer(examples, assignment, candidates,
                       [&](const sp::PredictionExample& ex,
                           std::span<const std::string> c) {
                         return sp::Predict(net, ex.features, c).label;
                       },
                       f.jobs)});
  report.rows.push_back(std::move(row));
  report.stats.emplace_back("test examples", std::to_string(examples.size()));
  report.stats.emplace_back("features", std::to_string(lexicon.size()));
  report.stats.emplace_back("confusion sets", std::to_string(assignment.sets().size()));
  std::cout << sp::RenderText(report);
  if (!f.tsv.empty()) OpenOutput(f.tsv) << sp::RenderTsv(report);
  return 0;
}

// ---------------------------------------------------------------------------
// inspect

struct InspectFlags {
  std::string model;
  std::string lexicon;
  std::string target;
  int top = 20;
};

int RunInspect(const InspectFlags& f) {
  if (f.top < 0) throw CLI::ValidationError("--top", "must be non-negative");
  sp::Model model = sp::LoadModelFile(f.model);
  auto id = model.network.Find(f.target);
  if (!id) {
    std::string names;
    for (std::size_t t = 0; t < model.network.size(); ++t) {
      if (!names.empty()) names += ", ";
      names += model.network.target(static_cast<sp::TargetId>(t)).label;
    }
    throw sp::DataError("unknown target '" + f.target + "'; available: " + names);
  }
  sp::Lexicon lexicon =
      sp::Lexicon::LoadFile(f.lexicon.empty() ? DefaultLexiconPath(f.model) : f.lexicon);
  const sp::TargetNode& node = model.network.target(*id);
  std::vector<std::pair<sp::FeatureId, double>> links(node.weights.begin(),
                                                      node.weights.end());
  std::sort(links.begin(), links.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (links.size() > static_cast<std::size_t>(f.top)) links.resize(f.top);
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto [fid, w] = links[i];
    std::cout << i + 1 << '\t' << w << '\t'
              << (fid < lexicon.size() ? lexicon.Identity(fid) : "#" + std::to_string(fid))
              << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// synth

struct SynthFlags {
  sp::SynthConfig config;
  std::string output;
  std::string sets;
  std::string manifest;
};

int RunSynth(const SynthFlags& f) {
  sp::SynthCorpus corpus = sp::GenerateSyntheticCorpus(f.config);
  if (f.output.empty()) {
    sp::WriteCorpus(std::cout, corpus.sentences);
  } else {
    sp::WriteCorpusFile(f.output, corpus.sentences);
  }
  if (!f.sets.empty()) sp::WriteConfusionSetsFile(f.sets, corpus.pairs);
  if (!f.manifest.empty()) {
    auto out = OpenOutput(f.manifest);
    sp::WriteManifest(out, corpus);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// run

struct RunFlags {
  sp::ExperimentConfig config;
  std::vector<std::string> feature_sets;
  std::vector<std::string> learners;
  std::vector<std::string> regimes;
  std::string source = "pairs";
  std::string tsv;
  LearnerFlags learner;
  bool foa = false;
};

int RunRun(RunFlags f) {
  sp::ExperimentConfig& config = f.config;
  auto source = sp::ParseConfusionSource(f.source);
  if (!source) throw CLI::ValidationError("--source", "unknown source '" + f.source + "'");
  config.options.source = *source;
  config.options.learner = f.learner.Build();
  if (f.feature_sets.empty()) {
    f.feature_sets = {"Linear=" + DataDir() + "/features/linear.feat",
                      "Non Linear=" + DataDir() + "/features/nonlinear.feat"};
  }
  for (const auto& spec : f.feature_sets) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--feature-set", "expected LABEL=PATH, got '" + spec + "'");
    }
    config.feature_files.emplace_back(spec.substr(0, eq), spec.substr(eq + 1));
  }
  if (!f.learners.empty()) {
    config.options.learners.clear();
    for (const auto& name : f.learners) {
      auto l = sp::ParseLearner(name);
      if (!l) throw CLI::ValidationError("--learner", "unknown learner '" + name + "'");
      config.options.learners.push_back(*l);
    }
  }
  if (f.foa) {
    config.options.regimes = {{sp::TrainRegime::kAll, sp::TestRegime::kAll},
                              {sp::TrainRegime::kAll, sp::TestRegime::kPerSet},
                              {sp::TrainRegime::kPerSet, sp::TestRegime::kPerSet}};
  }
  if (!f.regimes.empty()) {
    config.options.regimes.clear();
    for (const auto& r : f.regimes) {
      auto slash = r.find('/');
      std::optional<sp::TrainRegime> train;
      std::optional<sp::TestRegime> test;
      if (slash != std::string::npos) {
        auto name = [](std::string s) { return s == "set" ? std::string("per-set") : s; };
        train = sp::ParseTrainRegime(name(r.substr(0, slash)));
        test = sp::ParseTestRegime(name(r.substr(slash + 1)));
      }
      if (!train || !test) {
        throw CLI::ValidationError("--regime", "expected TRAIN/TEST with all or set, got '" +
                                                   r + "'");
      }
      config.options.regimes.push_back({*train, *test});
    }
  }
  if (config.options.source == sp::ConfusionSource::kPhonetic) {
    if (config.pronunciations_path.empty()) {
      config.pronunciations_path = DataDir() + "/pronunciations.tsv";
    }
    if (config.phonetic_classes_path.empty()) {
      config.phonetic_classes_path = DataDir() + "/phonetic_classes.tsv";
    }
  }
  sp::EvaluationReport report = sp::RunExperiment(config);
  std::cout << sp::RenderText(report);
  if (!f.tsv.empty()) OpenOutput(f.tsv) << sp::RenderTsv(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  sp::InitLogging();
  CLI::App app{"Word prediction with sparse Winnow over relational features"};
  app.set_config("--config", "", "Read options from an INI file; flags override it");
  app.require_subcommand(1);
  std::function<int()> action;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--jobs", jobs, "Worker threads for extraction and evaluation")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  PrepareFlags prepare;
  auto* cmd = app.add_subcommand("prepare", "Validate and canonicalize a corpus; optionally split it");
  cmd->add_option("--input", prepare.input, "Corpus file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--output", prepare.output, "Canonical corpus output");
  cmd->add_option("--train-out", prepare.train_out, "Training split output");
  auto* test_out =
      cmd->add_option("--test-out", prepare.test_out, "Test split output");
  cmd->get_option("--train-out")->needs(test_out);
  test_out->needs(cmd->get_option("--train-out"));
  cmd->add_option("--split", prepare.split, "Training fraction")->capture_default_str();
  cmd->callback([&] { action = [&] { return RunPrepare(prepare); }; });

  ConfusionFlags confusions;
  cmd = app.add_subcommand("confusions", "Build confusion sets from a training corpus");
  cmd->add_option("--corpus", confusions.corpus, "Training corpus")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--output", confusions.output, "Sets file (default: standard output)");
  cmd->add_option("--source", confusions.source, "pairs, phonetic or all")
      ->capture_default_str();
  cmd->add_option("--pos-prefix", confusions.pos_prefix, "POS prefix of target words")
      ->capture_default_str();
  cmd->add_option("--floor", confusions.floor, "Minimum training frequency")
      ->capture_default_str();
  cmd->add_option("--pronunciations", confusions.pronunciations, "Pronunciation lexicon")
      ->check(CLI::ExistingFile);
  cmd->add_option("--classes", confusions.classes, "Phonetic class map")
      ->check(CLI::ExistingFile);
  cmd->add_option("--cap", confusions.cap, "Drop phonetic sets whose majority share reaches this");
  cmd->callback([&] { action = [&] { return RunConfusions(confusions); }; });

  ExtractFlags extract;
  cmd = app.add_subcommand("extract", "Print the active features of every target occurrence");
  cmd->add_option("--corpus", extract.corpus, "Corpus")->required()->check(CLI::ExistingFile);
  cmd->add_option("--features", extract.features, "Feature definitions")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--sets", extract.sets, "Confusion sets")->required()->check(CLI::ExistingFile);
  cmd->add_option("--output", extract.output, "Examples file (default: standard output)");
  cmd->add_option("--lexicon", extract.lexicon, "Also write the feature lexicon");
  cmd->callback([&] {
    extract.jobs = jobs;
    action = [&] { return RunExtract(extract); };
  });

  TrainFlags train;
  cmd = app.add_subcommand("train", "Train a network and save the model and lexicon");
  cmd->add_option("--corpus", train.corpus, "Training corpus")->required()->check(CLI::ExistingFile);
  cmd->add_option("--features", train.features, "Feature definitions")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--sets", train.sets, "Confusion sets")->required()->check(CLI::ExistingFile);
  cmd->add_option("--model", train.model, "Model output")->required();
  cmd->add_option("--lexicon", train.lexicon, "Lexicon output (default: MODEL.lex)");
  cmd->add_option("--regime", train.regime, "Training regime: all or per-set")
      ->capture_default_str();
  cmd->add_option("--feature-floor", train.feature_floor, "Drop features seen fewer times")
      ->capture_default_str();
  train.learner.Register(cmd);
  cmd->callback([&] {
    train.jobs = jobs;
    action = [&] { return RunTrain(train); };
  });

  EvalFlags eval;
  cmd = app.add_subcommand("eval", "Word error rate of a trained model on a test corpus");
  cmd->add_option("--model", eval.model, "Model file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--lexicon", eval.lexicon, "Lexicon (default: MODEL.lex)");
  cmd->add_option("--test", eval.test, "Test corpus")->required()->check(CLI::ExistingFile);
  cmd->add_option("--sets", eval.sets, "Confusion sets")->required()->check(CLI::ExistingFile);
  cmd->add_option("--regime", eval.regime, "Test regime: all or per-set")->capture_default_str();
  cmd->add_option("--tsv", eval.tsv, "Also write the report as TSV");
  cmd->add_option("--feature-floor", eval.feature_floor, "Floor used at training time")
      ->capture_default_str();
  cmd->callback([&] {
    eval.jobs = jobs;
    action = [&] { return RunEval(eval); };
  });

  InspectFlags inspect;
  cmd = app.add_subcommand("inspect", "List the heaviest features of a target");
  cmd->add_option("--model", inspect.model, "Model file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--lexicon", inspect.lexicon, "Lexicon (default: MODEL.lex)");
  cmd->add_option("--target", inspect.target, "Target word")->required();
  cmd->add_option("--top", inspect.top, "Number of features")->capture_default_str();
  cmd->callback([&] { action = [&] { return RunInspect(inspect); }; });

  SynthFlags synth;
  cmd = app.add_subcommand("synth", "Generate a synthetic corpus with planted verb cues");
  cmd->add_option("--verbs", synth.config.verbs, "Number of verbs (even)")->capture_default_str();
  cmd->add_option("--sentences", synth.config.sentences, "Number of sentences")
      ->capture_default_str();
  cmd->add_option("--seed", synth.config.seed, "Random seed")->capture_default_str();
  cmd->add_option("--aux-rate", synth.config.aux_rate, "Share of sentences with an auxiliary")->capture_default_str();
  cmd->add_option("--left-cue-rate", synth.config.left_cue_rate,
                  "Share of sentences with a left phrase")->capture_default_str();
  cmd->add_option("--right-cue-rate", synth.config.right_cue_rate,
                  "Share of sentences with a right cue")->capture_default_str();
  cmd->add_option("--left-cue-reliability", synth.config.left_cue_reliability,
                  "Chance the left phrase belongs to the gold verb")
      ->capture_default_str();
  cmd->add_option("--right-cue-reliability", synth.config.right_cue_reliability,
                  "Chance the right cue belongs to the gold verb")
      ->capture_default_str();
  cmd->add_option("--role-noise", synth.config.role_noise,
                  "Chance the subject comes from the wrong class")->capture_default_str();
  cmd->add_option("--fillers", synth.config.fillers,
                  "Filler vocabulary size")->capture_default_str();
  cmd->add_option("--output", synth.output, "Corpus output (default: standard output)");
  cmd->add_option("--sets", synth.sets, "Planted confusion pairs output");
  cmd->add_option("--manifest", synth.manifest, "Planted cue manifest output");
  cmd->callback([&] { action = [&] { return RunSynth(synth); }; });

  RunFlags run;
  cmd = app.add_subcommand("run", "Full experiment: split, sets, features, training, WER table");
  cmd->add_option("--corpus", run.config.corpus_path, "Corpus to split")->check(CLI::ExistingFile);
  auto* train_opt = cmd->add_option("--train", run.config.train_path, "Training corpus")
                        ->check(CLI::ExistingFile);
  auto* test_opt =
      cmd->add_option("--test", run.config.test_path, "Test corpus")->check(CLI::ExistingFile);
  train_opt->needs(test_opt);
  test_opt->needs(train_opt);
  cmd->get_option("--corpus")->excludes(train_opt)->excludes(test_opt);
  cmd->add_option("--split", run.config.split_fraction, "Training fraction")
      ->capture_default_str();
  cmd->add_option("--feature-set", run.feature_sets,
                  "LABEL=PATH, repeatable (default: the shipped Linear and Non Linear sets)");
  cmd->add_option("--learner", run.learners,
                  "mle, trigram, nb, winnow or perceptron; repeatable");
  cmd->add_option("--regime", run.regimes, "TRAIN/TEST with all or set, repeatable");
  cmd->add_flag("--foa", run.foa, "All three focus-of-attention regimes");
  cmd->add_option("--source", run.source, "Confusion sets: pairs, phonetic, all or file")
      ->capture_default_str();
  cmd->add_option("--sets", run.config.sets_path, "Confusion sets file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--pronunciations", run.config.pronunciations_path, "Pronunciation lexicon")
      ->check(CLI::ExistingFile);
  cmd->add_option("--classes", run.config.phonetic_classes_path, "Phonetic class map")->check(CLI::ExistingFile);
  cmd->add_option("--cap", run.config.options.baseline_cap, "Phonetic majority-share cap");
  cmd->add_option("--floor", run.config.options.frequency_floor, "Minimum target frequency")
      ->capture_default_str();
  cmd->add_option("--pos-prefix", run.config.options.target_pos_prefix,
                  "POS prefix of target words")
      ->capture_default_str();
  cmd->add_option("--feature-floor", run.config.options.feature_floor,
                  "Drop features seen fewer times")
      ->capture_default_str();
  cmd->add_flag("--trigram-right-context", run.config.options.trigram_right_context,
               "Also score the two words after the slot with the trigram");
  cmd->add_option("--tsv", run.tsv, "Also write the report as TSV");
  run.learner.Register(cmd);
  cmd->callback([&] {
    run.config.options.jobs = jobs;
    action = [&] { return RunRun(run); };
  });

  try {
    app.parse(argc, argv);
    return action ? action() : 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const sp::DataError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 2;
  }
}
