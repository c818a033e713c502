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

// Feature instantiation throughput over a synthetic corpus.

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "snowpredict/features.h"
#include "snowpredict/synth.h"

namespace snowpredict {
namespace {

void InstantiateFile(benchmark::State& state, const char* file) {
  SynthConfig config;
  config.sentences = 500;
  const auto corpus = GenerateSyntheticCorpus(config);
  std::vector<AnalyzedSentence> analyzed;
  std::vector<int> foci;
  for (const auto& s : corpus.sentences) {
    analyzed.push_back(Analyze(s));
    for (const auto& t : s.tokens) {
      if (t.pos == "VB") foci.push_back(t.index);
    }
  }
  const PredicateRegistry registry = DefaultRegistry();
  const auto types = ReadFeatureTypesFile(
      std::string(SNOWPREDICT_BENCH_DATA_DIR "/features/") + file, registry);
  std::size_t features = 0;
  for (auto _ : state) {
    for (std::size_t i = 0; i < analyzed.size(); ++i) {
      features += Instantiate(types, analyzed[i], foci[i]).size();
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(analyzed.size()));
  state.counters["features/sentence"] =
      static_cast<double>(features) / static_cast<double>(state.iterations() * analyzed.size());
}

void BM_InstantiateLinear(benchmark::State& state) { InstantiateFile(state, "linear.feat"); }
void BM_InstantiateNonLinear(benchmark::State& state) {
  InstantiateFile(state, "nonlinear.feat");
}
BENCHMARK(BM_InstantiateLinear);
BENCHMARK(BM_InstantiateNonLinear);

}  // namespace
}  // namespace snowpredict
