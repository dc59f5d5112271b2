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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrify/kernels.hpp"
#include "bohrify/model.hpp"
#include "bohrify/spectrum.hpp"

namespace bohrify {

// Thresholds of the acceptance checks.
inline constexpr double kResidualBound = 1e-9;
inline constexpr std::size_t kRandomConfigurations = 50;
inline constexpr std::size_t kRandomGauges = 100;
inline constexpr std::size_t kLogicTriples = 200;
inline constexpr std::size_t kDualityContextLimit = 6;
inline constexpr std::size_t kExhaustivePointLimit = 20;
inline constexpr std::size_t kSampledFamilies = 100'000;
inline constexpr std::size_t kMaxChainDepth = 4;

struct CriterionResult {
  CriterionResult() = default;
  explicit CriterionResult(std::string a) : anchor(std::move(a)) {}

  std::string anchor;
  bool applicable = true;
  bool passed = true;
  std::vector<std::string> lines;

  void fail(std::string line) {
    passed = false;
    lines.push_back(std::move(line));
  }
  std::string verdict() const { return !applicable ? "n/a" : passed ? "pass" : "FAIL"; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  Execution exec = Execution::kParallel;
};

// Fixture-level checks, in report order.
CriterionResult check_weyl_unitarity(const ModelSpec& spec);
CriterionResult check_weyl_conjugation(const ModelSpec& spec, std::uint64_t seed);
CriterionResult check_flow_composition(const ModelSpec& spec);
CriterionResult check_mixed_context(const ModelSpec& spec, std::uint64_t seed);
CriterionResult check_closed_open_duality(const ExternalSpectrum& sigma, std::uint64_t seed,
                                          Execution exec);
CriterionResult check_point_closure(const ExternalSpectrum& sigma);
CriterionResult check_finite_sobriety(const ExternalSpectrum& sigma, std::uint64_t cap);
CriterionResult check_nonsober_chain(const ModelSpec& spec);
CriterionResult check_diffeomorphism_invariance(const ModelSpec& spec, const ContextPoset& poset,
                                                Execution exec);
CriterionResult check_gauge_invariance(const ModelSpec& spec, const ContextPoset& poset,
                                       std::uint64_t seed, Execution exec);
CriterionResult check_quantum_logic(const ModelSpec& spec, const ExternalSpectrum& sigma,
                                    std::uint64_t seed);

std::vector<CriterionResult> verify_model(const ModelSpec& spec, const VerifyOptions& options);

// Smallest closed superset of a point found without the closure formula:
// exhaustive over all families for small spectra, otherwise by saturating
// along covering restrictions.
PointSet brute_force_closure(const ExternalSpectrum& sigma, std::size_t p);

struct CriterionSummary {
  std::string anchor;
  bool passed = true;
  std::size_t applicable = 0;  // fixtures the criterion applies to
  std::size_t failed = 0;
};

struct VerifyAllResult {
  std::string report;
  bool passed = true;
  std::size_t fixtures = 0;
  std::vector<CriterionSummary> summary;
};

// Runs every fixture check twice, with parallel and serial kernels, and adds
// a determinism verdict comparing the two reports byte for byte.
VerifyAllResult verify_all(const std::vector<ModelSpec>& specs, std::uint64_t seed);

}  // namespace bohrify
