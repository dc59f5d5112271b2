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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohrify/context_poset.hpp"
#include "bohrify/holonomy.hpp"
#include "bohrify/spectrum.hpp"
#include "bohrify/symmetry.hpp"

namespace bohrify {

inline constexpr std::string_view kModelSchema = "bohrify-model/1";

struct NamedTable {
  std::string name;
  FunctionTable table;
};

struct NamedWeyl {
  std::string name;
  std::string surface;
  GroupField field;
};

struct NamedProjection {
  std::string name;
  ComplexMatrix matrix;
};

struct ChainSpec {
  std::vector<std::string> surfaces;
  GroupField field;
  std::vector<Complex> phases;
};

struct GaugeSpec {
  bool constants = false;
  std::size_t random_count = 0;
  std::uint64_t random_seed = 0;
  std::vector<GroupField> explicit_fields;
};

struct ModelSpec {
  std::string name;
  std::string digest;  // sha256 of the file bytes, hex
  HolonomyModel model;
  std::vector<NamedTable> configurations;
  std::vector<NamedWeyl> weyl;
  std::vector<NamedProjection> projections;
  std::optional<ChainSpec> chain;
  std::vector<GraphAutomorphism> automorphisms;
  GaugeSpec gauges;
  double tolerance = kDefaultTolerance;
  std::uint64_t sobriety_cap = kSobrietyCandidateCap;

  // Configuration generators first, then Weyl generators, in file order.
  std::vector<Generator> generators() const;
  std::vector<GroupField> gauge_fields(std::optional<std::uint64_t> seed_override = {}) const;
  const NamedProjection& projection(std::string_view name) const;
};

// Throws ValidationError (with the offending field path or id) on bad input
// and CapExceeded when the Hilbert dimension passes the cap.
ModelSpec parse_model(std::string_view text, std::string_view source = "<memory>");
ModelSpec load_model(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);

// Generators, ambient algebra and poset of a loaded model.
ContextPoset model_poset(const ModelSpec& spec, Execution exec = Execution::kParallel);

}  // namespace bohrify
