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

// Activation cost against lexicon size and active-set size.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "snowpredict/snow.h"

namespace snowpredict {
namespace {

void BM_Activation(benchmark::State& state) {
  const auto links = static_cast<FeatureId>(state.range(0));
  const auto active_size = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  TargetNode node;
  for (FeatureId f = 0; f < links; ++f) node.weights[f] = 0.2;
  std::vector<FeatureId> active;
  for (std::size_t i = 0; i < active_size; ++i) active.push_back(rng() % links);
  NormalizeActive(active);
  for (auto _ : state) benchmark::DoNotOptimize(Activation(node, active));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(active.size()));
}
BENCHMARK(BM_Activation)->ArgsProduct({{1000, 100000, 400000}, {16, 256}});

void BM_PredictPair(benchmark::State& state) {
  Network net;
  std::mt19937_64 rng(2);
  for (const char* label : {"make", "sell"}) {
    TargetNode& node = net.mutable_target(net.AddTarget(label));
    for (int i = 0; i < state.range(0); ++i) node.weights[rng() % 400000] = 0.2;
  }
  std::vector<FeatureId> active;
  for (int i = 0; i < 64; ++i) active.push_back(rng() % 400000);
  NormalizeActive(active);
  const std::vector<std::string> candidates = {"make", "sell"};
  for (auto _ : state) benchmark::DoNotOptimize(Predict(net, active, candidates));
}
BENCHMARK(BM_PredictPair)->Arg(1000)->Arg(100000);

}  // namespace
}  // namespace snowpredict
