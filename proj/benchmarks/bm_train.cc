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

// Training throughput of the update rules on synthetic prediction examples.

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "snowpredict/experiment.h"
#include "snowpredict/synth.h"

namespace snowpredict {
namespace {

struct Fixture {
  std::vector<PredictionExample> examples;
  ConfusionAssignment sets{{}};
};

const Fixture& Data() {
  static const Fixture fixture = [] {
    SynthConfig config;
    config.sentences = 4000;
    const auto corpus = GenerateSyntheticCorpus(config);
    const PredicateRegistry registry = DefaultRegistry();
    const auto types = ReadFeatureTypesFile(SNOWPREDICT_BENCH_DATA_DIR "/features/linear.feat",
                                            registry);
    Fixture f{{}, ConfusionAssignment(corpus.pairs)};
    Lexicon lexicon;
    f.examples = GenerateExamples(corpus.sentences, f.sets, types, lexicon, true);
    return f;
  }();
  return fixture;
}

void BM_Train(benchmark::State& state) {
  const Fixture& data = Data();
  LearnerConfig config;
  config.rule = static_cast<UpdateRule>(state.range(0));
  const auto regime = static_cast<TrainRegime>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TrainNetwork(data.examples, data.sets, regime, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.examples.size()));
  state.SetLabel(std::string(UpdateRuleName(config.rule)) +
                 (regime == TrainRegime::kAll ? " train-all" : " train-per-set"));
}
BENCHMARK(BM_Train)
    ->ArgsProduct({{static_cast<int>(UpdateRule::kWinnow), static_cast<int>(UpdateRule::kNaiveBayes)},
                   {static_cast<int>(TrainRegime::kAll), static_cast<int>(TrainRegime::kPerSet)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace snowpredict
