// Copyright 2026 The bohrify Authors
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

// Serial reference kernels against their OpenMP counterparts. Each pair runs
// on identical inputs; the second argument selects the execution mode.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "bohrify/kernels.hpp"
#include "bohrify/model.hpp"
#include "bohrify/spectrum.hpp"
#include "bohrify/symmetry.hpp"

namespace {

using bohrify::Complex;
using bohrify::ComplexMatrix;
using bohrify::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::kSerial : Execution::kParallel;
}

std::vector<Complex> random_entries(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> out(n);
  for (auto& x : out) {
    const double re = u(rng);
    x = Complex{re, u(rng)};
  }
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 1);
  const auto b = random_entries(n * n, 2);
  std::vector<Complex> out(n * n);
  for (auto _ : state) {
    bohrify::kernels::multiply(a, b, out, n, mode(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "omp");
}
BENCHMARK(BM_Multiply)->ArgsProduct({{32, 64, 128}, {0, 1}});

void BM_CommutationTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ComplexMatrix> mats;
  for (std::uint64_t k = 0; k < 12; ++k) {
    // Half diagonal (commuting), half dense.
    mats.push_back(k % 2 == 0 ? ComplexMatrix::diagonal(random_entries(n, k))
                              : ComplexMatrix(n, random_entries(n * n, k)));
  }
  for (auto _ : state) {
    auto table = bohrify::kernels::commutation_table(mats, bohrify::kDefaultTolerance, mode(state));
    benchmark::DoNotOptimize(table.data());
  }
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "omp");
}
BENCHMARK(BM_CommutationTable)->ArgsProduct({{16, 64}, {0, 1}});

// Exhaustive closed/open sweep over the spectrum of a shipped fixture.
void BM_ClosedOpenDuality(benchmark::State& state) {
  static const auto spec =
      bohrify::load_model(std::filesystem::path(BOHRIFY_FIXTURE_DIR) / "q8_1edge.json");
  static const auto poset = bohrify::model_poset(spec);
  static const bohrify::ExternalSpectrum sigma(poset);
  const auto [below, above] = bohrify::duality_masks(sigma);
  for (auto _ : state) {
    auto sweep = bohrify::kernels::closed_open_duality(below, above, mode(state));
    benchmark::DoNotOptimize(sweep);
  }
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "omp");
}
BENCHMARK(BM_ClosedOpenDuality)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

// Gauge sweep over every context of the 3-edge star.
void BM_GaugeInvariance(benchmark::State& state) {
  static const auto spec =
      bohrify::load_model(std::filesystem::path(BOHRIFY_FIXTURE_DIR) / "z2_3edge.json");
  static const auto poset = bohrify::model_poset(spec);
  const auto gauges = bohrify::random_gauges(spec.model, 20, 3);
  for (auto _ : state) {
    auto r = bohrify::gauge_invariance(spec.model, poset, gauges, spec.tolerance, mode(state));
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "omp");
}
BENCHMARK(BM_GaugeInvariance)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
