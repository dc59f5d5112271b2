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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "bohrify/holonomy.hpp"
#include "bohrify/model.hpp"

namespace bohrify::testing {

inline ModelSpec fixture(const std::string& name) {
  return load_model(std::filesystem::path(BOHRIFY_FIXTURE_DIR) / (name + ".json"));
}

inline std::vector<ModelSpec> all_fixtures() {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(BOHRIFY_FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<ModelSpec> out;
  for (const auto& p : paths) out.push_back(load_model(p));
  return out;
}

// Surface crossing only 'edge', leaving it at its source.
inline Surface source_surface(const Graph& graph, const std::string& id, std::size_t edge) {
  Surface s{id, std::vector<EdgeCrossing>(graph.edge_count())};
  s.crossings[edge].out = 1;
  return s;
}

// a -> b with edge e1 over Z2 and the surface S1 at the source.
inline HolonomyModel z2_one_edge() {
  Graph g({"a", "b"}, {"e1"}, {{"a", "b"}});
  auto s1 = source_surface(g, "S1", 0);
  return HolonomyModel(g, FiniteGroup::builtin("Z2"), {s1});
}

// Triangle a -> b -> c -> a, one source surface per edge.
inline HolonomyModel triangle(const std::string& group) {
  Graph g({"a", "b", "c"}, {"e1", "e2", "e3"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  std::vector<Surface> surfaces;
  for (std::size_t e = 0; e < 3; ++e) {
    surfaces.push_back(source_surface(g, "S" + std::to_string(e + 1), e));
  }
  return HolonomyModel(g, FiniteGroup::builtin(group), surfaces);
}

inline FunctionTable random_table(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FunctionTable f(n);
  for (auto& x : f) {
    const double re = u(rng);
    x = Complex{re, u(rng)};
  }
  return f;
}

}  // namespace bohrify::testing
