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

#include <optional>
#include <string>

#include "bohrify/context_poset.hpp"
#include "bohrify/spectrum.hpp"

namespace bohrify {

// Hasse diagram; boxes labelled with generator names and linear dimension,
// edges drawn from smaller to larger contexts.
std::string contexts_dot(const ContextPoset& poset);

struct DotCluster {
  std::string name;
  PointSet points;
};

// Spectrum points as ellipses, non-identity restriction arrows along covering
// pairs of the context order; an optional point set becomes a cluster and an
// optional subobject is drawn filled.
std::string spectrum_dot(const ExternalSpectrum& sigma,
                         const std::optional<DotCluster>& cluster = std::nullopt,
                         const std::optional<PointSet>& filled = std::nullopt);

}  // namespace bohrify
