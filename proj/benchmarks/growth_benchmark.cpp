// Copyright 2026 The racgrowth Authors
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


#include <benchmark/benchmark.h>

#include "racgrowth/analysis.hpp"
#include "racgrowth/automaton.hpp"
#include "racgrowth/oracles.hpp"
#include "racgrowth/polynomial.hpp"
#include "racgrowth/spectral.hpp"
#include "support/reference.hpp"

namespace racgrowth {
namespace {

// The n-cycle: connected complement for n >= 5, clique count grows linearly.
DefiningGraph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    labels.push_back(std::to_string(v + 1));
    edges.emplace_back(v, (v + 1) % n);
  }
  return DefiningGraph::from_edges(labels, edges);
}

// Dense random graph on n vertices; state counts grow quickly.
DefiningGraph dense(std::size_t n) { return reference::graph_from_mask(n, 0x5bd1e995u * 2654435761u); }

void BM_BuildShortlex(benchmark::State& state) {
  auto g = dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_automaton(g, AutomatonKind::kShortlex));
}
BENCHMARK(BM_BuildShortlex)->Arg(8)->Arg(12)->Arg(16);

void BM_CountWords(benchmark::State& state) {
  auto m = prune(build_automaton(cycle(8), AutomatonKind::kGeodesic));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(m, n));
}
BENCHMARK(BM_CountWords)->Arg(50)->Arg(200);

void BM_SpectralRadius(benchmark::State& state) {
  auto m = prune(build_automaton(dense(12), AutomatonKind::kShortlex));
  const Rational tolerance = pow10_inverse(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m, tolerance));
}
BENCHMARK(BM_SpectralRadius)->Arg(10)->Arg(30);

void BM_CharPoly(benchmark::State& state) {
  auto m = prune(build_automaton(cycle(static_cast<std::size_t>(state.range(0))), AutomatonKind::kGeodesic));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(10)->Arg(20)->Arg(40);

void BM_CayleyLayers(benchmark::State& state) {
  GroupSpec spec{cycle(5), GroupKind::kRacg};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::cayley_layers(spec, n));
}
BENCHMARK(BM_CayleyLayers)->Arg(6)->Arg(10);

void BM_Analyze(benchmark::State& state) {
  GroupSpec spec{cycle(static_cast<std::size_t>(state.range(0))), GroupKind::kRacg};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(spec));
}
BENCHMARK(BM_Analyze)->Arg(5)->Arg(9);

}  // namespace
}  // namespace racgrowth

BENCHMARK_MAIN();
