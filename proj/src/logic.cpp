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
#include "bohrify/logic.hpp"

#include "bohrify/error.hpp"

namespace bohrify {

bool dominates(const ComplexMatrix& q, const ComplexMatrix& p, double tol) {
  return approx_equal(p * q, p, tol);
}

ProjectionLattice projection_lattice(const StarAlgebra& context, std::size_t context_index,
                                     double tol) {
  ProjectionLattice lattice;
  lattice.context = context_index;
  lattice.projections = projections_of(context, tol);
  const std::size_t n = lattice.size();
  lattice.order.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lattice.order[i * n + j] = dominates(lattice.projections[j], lattice.projections[i], tol);
  return lattice;
}

ComplexMatrix daseinise(const ComplexMatrix& p, const StarAlgebra& context, double tol) {
  if (p.dim() != context.ambient_dim()) throw DimensionError("daseinise: dimension mismatch");
  if (!is_projection(p, tol)) throw PreconditionError("daseinise: operator is not a projection");
  ComplexMatrix out = ComplexMatrix::zero(p.dim());
  for (const auto& q : minimal_projections(context, tol)) {
    if ((q * p).frobenius_norm() > tol * std::max(1.0, p.frobenius_norm())) out += q;
  }
  return out;
}

boost::dynamic_bitset<> alpha_iso(const ComplexMatrix& p, const StarAlgebra& context,
                                  const std::vector<Character>& characters, double tol) {
  if (!is_projection(p, tol) || !context.contains(p, tol)) {
    throw PreconditionError("alpha: operator is not a projection of the context");
  }
  boost::dynamic_bitset<> out(characters.size());
  for (std::size_t k = 0; k < characters.size(); ++k) {
    const Complex v = characters[k].evaluate(p);
    if (std::abs(v - Complex{1.0, 0.0}) <= kCharacterMatchTolerance) {
      out.set(k);
    } else if (std::abs(v) > kCharacterMatchTolerance) {
      throw NumericalError("alpha: character value of a projection is neither 0 nor 1");
    }
  }
  return out;
}

Subobject daseinise_global(const ComplexMatrix& p, const ExternalSpectrum& sigma, double tol) {
  Subobject out = sigma.empty_set();
  const auto& poset = sigma.poset();
  for (std::size_t c = 0; c < poset.size(); ++c) {
    const auto& algebra = poset.context(c).algebra;
    const auto component = alpha_iso(daseinise(p, algebra, tol), algebra, sigma.characters(c), tol);
    for (auto k = component.find_first(); k != boost::dynamic_bitset<>::npos;
         k = component.find_next(k))
      out.set(sigma.point_index(c, k));
  }
  if (!is_subobject(sigma, out)) {
    throw NumericalError("daseinisation: components are not closed under restriction");
  }
  return out;
}

bool is_subobject(const ExternalSpectrum& sigma, const Subobject& s) { return is_closed(sigma, s); }

Subobject top(const ExternalSpectrum& sigma) { return sigma.full_set(); }
Subobject bottom(const ExternalSpectrum& sigma) { return sigma.empty_set(); }
Subobject meet(const Subobject& s, const Subobject& t) { return s & t; }
Subobject join(const Subobject& s, const Subobject& t) { return s | t; }
bool leq(const Subobject& s, const Subobject& t) { return s.is_subset_of(t); }

Subobject implies(const ExternalSpectrum& sigma, const Subobject& s, const Subobject& t) {
  Subobject out = sigma.empty_set();
  const auto& poset = sigma.poset();
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const std::size_t c = sigma.point(p).context;
    bool holds = true;
    for (std::size_t d = 0; d < poset.size() && holds; ++d) {
      if (!poset.leq(d, c)) continue;
      const std::size_t q = sigma.restrict_point(p, d);
      if (s.test(q) && !t.test(q)) holds = false;
    }
    if (holds) out.set(p);
  }
  return out;
}

Subobject negate(const ExternalSpectrum& sigma, const Subobject& s) {
  return implies(sigma, s, bottom(sigma));
}

std::vector<ExcludedMiddleResult> excluded_middle_search(
    const ExternalSpectrum& sigma, const std::vector<std::pair<std::string, ComplexMatrix>>& props,
    double tol) {
  std::vector<ExcludedMiddleResult> out;
  for (const auto& [label, p] : props) {
    ExcludedMiddleResult r;
    r.label = label;
    r.subobject = daseinise_global(p, sigma, tol);
    const auto neg = negate(sigma, r.subobject);
    r.excluded_middle = join(r.subobject, neg) == top(sigma);
    r.double_negation = leq(negate(sigma, neg), r.subobject);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bohrify
