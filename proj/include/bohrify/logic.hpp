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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bohrify/spectrum.hpp"

namespace bohrify {

// Projections of one context, in the canonical order of projections_of, with
// the order Q >= P iff P Q = P.
struct ProjectionLattice {
  std::size_t context = 0;
  std::vector<ComplexMatrix> projections;
  std::vector<std::uint8_t> order;  // order[i * n + j]: projections[j] >= projections[i]

  std::size_t size() const { return projections.size(); }
  bool dominates(std::size_t upper, std::size_t lower) const {
    return order[lower * size() + upper] != 0;
  }
};

ProjectionLattice projection_lattice(const StarAlgebra& context, std::size_t context_index = 0,
                                     double tol = kDefaultTolerance);

// Q >= P iff P Q = P.
bool dominates(const ComplexMatrix& q, const ComplexMatrix& p, double tol = kDefaultTolerance);

// Smallest projection of the context dominating p: the sum of the minimal
// projections that overlap p.
ComplexMatrix daseinise(const ComplexMatrix& p, const StarAlgebra& context,
                        double tol = kDefaultTolerance);

// Characters of the context (by index) that value p at 1. Throws
// PreconditionError if p is not a projection of the context.
boost::dynamic_bitset<> alpha_iso(const ComplexMatrix& p, const StarAlgebra& context,
                                  const std::vector<Character>& characters,
                                  double tol = kDefaultTolerance);

// A family of per-context character sets over the external spectrum, stored
// as a point set; valid subobjects are closed under restriction.
using Subobject = PointSet;

// Component at C is alpha(daseinise(p, C)).
Subobject daseinise_global(const ComplexMatrix& p, const ExternalSpectrum& sigma,
                           double tol = kDefaultTolerance);

bool is_subobject(const ExternalSpectrum& sigma, const Subobject& s);
Subobject top(const ExternalSpectrum& sigma);
Subobject bottom(const ExternalSpectrum& sigma);
Subobject meet(const Subobject& s, const Subobject& t);
Subobject join(const Subobject& s, const Subobject& t);
// lambda in (S => T)_C iff for every D <= C, lambda|D in S_D implies lambda|D in T_D.
Subobject implies(const ExternalSpectrum& sigma, const Subobject& s, const Subobject& t);
Subobject negate(const ExternalSpectrum& sigma, const Subobject& s);
bool leq(const Subobject& s, const Subobject& t);

struct ExcludedMiddleResult {
  std::string label;
  Subobject subobject;
  bool excluded_middle = true;   // S v not S == top
  bool double_negation = true;   // not not S <= S
};

std::vector<ExcludedMiddleResult> excluded_middle_search(
    const ExternalSpectrum& sigma, const std::vector<std::pair<std::string, ComplexMatrix>>& props,
    double tol = kDefaultTolerance);

}  // namespace bohrify
