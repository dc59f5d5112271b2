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
#include "bohrify/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bohrify/error.hpp"

namespace bohrify {
namespace {

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<std::size_t> members(const PointSet& s) {
  std::vector<std::size_t> out;
  for (auto p = s.find_first(); p != PointSet::npos; p = s.find_next(p)) out.push_back(p);
  return out;
}

}  // namespace

Complex Character::evaluate(const ComplexMatrix& a) const {
  return (projection * a).trace() / projection.trace();
}

std::vector<Character> gelfand_spectrum(const StarAlgebra& context, std::size_t context_index,
                                        double tol) {
  if (!is_commutative_algebra(context, tol)) {
    throw PreconditionError("gelfand spectrum: context is not commutative");
  }
  const auto minimal = minimal_projections(context, tol);
  std::vector<Character> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Character c;
    c.context = context_index;
    c.index = k;
    c.projection = minimal[k];
    for (const auto& b : context.basis()) c.values.push_back(c.evaluate(b));
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t restrict_character(const Character& lambda, const StarAlgebra& sub,
                               const std::vector<Character>& sub_characters) {
  std::vector<Complex> values;
  values.reserve(sub.dim());
  for (const auto& b : sub.basis()) values.push_back(lambda.evaluate(b));
  const double scale = std::max(1.0, max_abs(values));
  std::optional<std::size_t> match;
  for (const auto& cand : sub_characters) {
    if (cand.values.size() != values.size()) {
      throw DimensionError("restrict character: subcontext characters do not match its basis");
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      diff = std::max(diff, std::abs(values[i] - cand.values[i]));
    if (diff <= kCharacterMatchTolerance * scale) {
      if (match) throw NumericalError("restrict character: restriction matches two characters");
      match = cand.index;
    }
  }
  if (!match) throw NumericalError("restrict character: restriction matches no character");
  return *match;
}

ExternalSpectrum::ExternalSpectrum(const ContextPoset& poset, Execution exec) : poset_(&poset) {
  const std::size_t n = poset.size();
  characters_.resize(n);
  const auto count = static_cast<std::int64_t>(n);
  auto compute = [&](std::int64_t c) {
    characters_[c] = gelfand_spectrum(poset.context(c).algebra, c, poset.tolerance());
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c) compute(c);
  } else {
    for (std::int64_t c = 0; c < count; ++c) compute(c);
  }
  for (std::size_t c = 0; c < n; ++c) {
    offsets_.push_back(points_.size());
    for (std::size_t k = 0; k < characters_[c].size(); ++k) points_.push_back({c, k});
  }
  restriction_.resize(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      if (!poset.leq(d, c)) continue;
      auto& table = restriction_[c * n + d];
      for (const auto& lambda : characters_[c]) {
        table.push_back(c == d ? lambda.index
                               : restrict_character(lambda, poset.context(d).algebra,
                                                    characters_[d]));
      }
    }
  }
}

std::size_t ExternalSpectrum::restrict_point(std::size_t p, std::size_t context) const {
  const auto& pt = points_.at(p);
  const std::size_t n = poset_->size();
  if (!poset_->leq(context, pt.context)) {
    throw PreconditionError("restrict point: target context is not below the point's context");
  }
  return offsets_[context] + restriction_[pt.context * n + context][pt.character];
}

std::vector<std::pair<std::size_t, std::size_t>> ExternalSpectrum::arrows() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t d = 0; d < poset_->size(); ++d)
      if (d != points_[p].context && poset_->leq(d, points_[p].context))
        out.emplace_back(p, restrict_point(p, d));
  return out;
}

bool ExternalSpectrum::composition_closed() const {
  const std::size_t n = poset_->size();
  for (std::size_t p = 0; p < size(); ++p) {
    const std::size_t c = points_[p].context;
    for (std::size_t d = 0; d < n; ++d) {
      if (!poset_->leq(d, c)) continue;
      const std::size_t q = restrict_point(p, d);
      for (std::size_t e = 0; e < n; ++e)
        if (poset_->leq(e, d) && restrict_point(q, e) != restrict_point(p, e)) return false;
    }
  }
  return true;
}

std::string ExternalSpectrum::point_label(std::size_t p) const {
  const auto& pt = points_.at(p);
  return "(" + poset_->context(pt.context).label + ", l" + std::to_string(pt.character) + ")";
}

std::string ExternalSpectrum::describe(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : members(s)) {
    out += (first ? "" : ", ") + point_label(p);
    first = false;
  }
  return out + "}";
}

ExternalSpectrum external_spectrum(const ContextPoset& poset, Execution exec) {
  return ExternalSpectrum(poset, exec);
}

bool is_closed(const ExternalSpectrum& sigma, const PointSet& s) {
  const auto& poset = sigma.poset();
  for (auto p = s.find_first(); p != PointSet::npos; p = s.find_next(p)) {
    const std::size_t c = sigma.point(p).context;
    for (std::size_t d = 0; d < poset.size(); ++d)
      if (poset.leq(d, c) && !s.test(sigma.restrict_point(p, d))) return false;
  }
  return true;
}

bool is_open(const ExternalSpectrum& sigma, const PointSet& s) {
  const auto& poset = sigma.poset();
  for (std::size_t upper = 0; upper < poset.size(); ++upper) {
    for (std::size_t k = 0; k < sigma.characters(upper).size(); ++k) {
      const std::size_t q = sigma.point_index(upper, k);
      if (s.test(q)) continue;
      // q is outside U; no restriction of q may lie in U.
      for (std::size_t lower = 0; lower < poset.size(); ++lower)
        if (poset.leq(lower, upper) && s.test(sigma.restrict_point(q, lower))) return false;
    }
  }
  return true;
}

PointSet point_closure(const ExternalSpectrum& sigma, std::size_t p) {
  PointSet out = sigma.empty_set();
  const auto& poset = sigma.poset();
  const std::size_t c = sigma.point(p).context;
  for (std::size_t d = 0; d < poset.size(); ++d)
    if (poset.leq(d, c)) out.set(sigma.restrict_point(p, d));
  return out;
}

bool is_irreducible(const ExternalSpectrum& sigma, const PointSet& s) {
  if (!is_closed(sigma, s)) throw PreconditionError("irreducibility: set is not closed");
  const auto& poset = sigma.poset();
  std::vector<std::size_t> occupied;
  for (std::size_t c = 0; c < poset.size(); ++c) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < sigma.characters(c).size(); ++k)
      count += s.test(sigma.point_index(c, k));
    if (count > 1) return false;
    if (count == 1) occupied.push_back(c);
  }
  if (occupied.empty()) return false;
  for (std::size_t a : occupied) {
    for (std::size_t b : occupied) {
      bool bounded = false;
      for (std::size_t u : occupied) bounded = bounded || (poset.leq(a, u) && poset.leq(b, u));
      if (!bounded) return false;
    }
  }
  return true;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> duality_masks(
    const ExternalSpectrum& sigma) {
  if (sigma.size() > 64) throw CapExceeded("duality masks: more than 64 points");
  std::vector<std::uint64_t> below(sigma.size(), 0);
  std::vector<std::uint64_t> above(sigma.size(), 0);
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const auto closure = point_closure(sigma, p);
    for (std::size_t q : members(closure)) {
      below[p] |= 1ULL << q;
      above[q] |= 1ULL << p;
    }
  }
  return {below, above};
}

namespace {

std::vector<std::size_t> witnesses_of(const ExternalSpectrum& sigma, const PointSet& s) {
  std::vector<std::size_t> out;
  for (std::size_t p : members(s))
    if (point_closure(sigma, p) == s) out.push_back(p);
  return out;
}

// Backtracking over contexts in decreasing dimension: each context holds no
// character or one, and any character forced by a larger chosen context must
// be the one held.
struct ClosedFamilySearch {
  const ExternalSpectrum& sigma;
  std::vector<std::size_t> order;
  std::vector<std::optional<std::size_t>> chosen;  // per context, a point index
  std::uint64_t cap;
  std::uint64_t visited = 0;
  std::vector<PointSet> found;

  void run(std::size_t depth) {
    if (++visited > cap) throw CapExceeded("sobriety: candidate cap exceeded");
    if (depth == order.size()) {
      PointSet s = sigma.empty_set();
      for (const auto& c : chosen)
        if (c) s.set(*c);
      if (s.any() && is_irreducible(sigma, s)) found.push_back(s);
      return;
    }
    const std::size_t c = order[depth];
    const auto& poset = sigma.poset();
    std::optional<std::size_t> forced;
    for (std::size_t u = 0; u < poset.size(); ++u) {
      if (u == c || !chosen[u] || !poset.leq(c, u)) continue;
      const std::size_t r = sigma.restrict_point(*chosen[u], c);
      if (forced && *forced != r) return;
      forced = r;
    }
    if (forced) {
      chosen[c] = forced;
      run(depth + 1);
    } else {
      chosen[c].reset();
      run(depth + 1);
      for (std::size_t k = 0; k < sigma.characters(c).size(); ++k) {
        chosen[c] = sigma.point_index(c, k);
        run(depth + 1);
      }
    }
    chosen[c].reset();
  }
};

}  // namespace

SobrietyReport sobriety_check(const ExternalSpectrum& sigma, bool partial, std::uint64_t cap) {
  SobrietyReport r;
  r.partial = partial;
  std::vector<PointSet> sets;
  if (!partial) {
    const auto& poset = sigma.poset();
    ClosedFamilySearch search{sigma, {}, std::vector<std::optional<std::size_t>>(poset.size()),
                              cap, 0, {}};
    search.order.resize(poset.size());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
      return poset.context(a).algebra.dim() > poset.context(b).algebra.dim();
    });
    search.run(0);
    r.candidates_visited = search.visited;
    sets = std::move(search.found);
  } else {
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      const auto cp = point_closure(sigma, p);
      for (std::size_t q = p; q < sigma.size(); ++q) {
        ++r.candidates_visited;
        if (r.candidates_visited > cap) throw CapExceeded("sobriety: candidate cap exceeded");
        const auto s = cp | point_closure(sigma, q);
        if (is_irreducible(sigma, s) && std::find(sets.begin(), sets.end(), s) == sets.end())
          sets.push_back(s);
      }
    }
  }
  std::sort(sets.begin(), sets.end(), [](const PointSet& a, const PointSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });
  for (auto& s : sets) {
    SobrietyWitness w{s, witnesses_of(sigma, s)};
    if (w.witnesses.size() != 1 && !r.counterexample) {
      r.sober = false;
      r.counterexample = r.irreducible_sets.size();
    }
    r.irreducible_sets.push_back(std::move(w));
  }
  return r;
}

bool ChainReport::passed() const {
  if (!strictly_ascending || !distinct_witnesses || steps.empty()) return false;
  for (const auto& s : steps) {
    if (!s.closed || !s.irreducible || s.witnesses.size() != 1 || !s.witness_is_top ||
        !s.witness_escapes)
      return false;
  }
  return true;
}

ChainReport nonsober_chain(const HolonomyModel& model, const std::vector<Surface>& surfaces,
                           const GroupField& d, const std::vector<Complex>& phases, double tol) {
  const std::size_t n = surfaces.size();
  if (n < 2) throw PreconditionError("chain: at least two surfaces are required");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!surfaces_disjoint(surfaces[i], surfaces[j])) {
        throw PreconditionError("chain: surfaces '" + surfaces[i].id + "' and '" + surfaces[j].id +
                                "' share a flagged edge");
      }
  model.validate_field(d);

  ChainReport r;
  std::vector<Generator> gens;
  std::vector<ComplexMatrix> mats;
  std::vector<Context> contexts;
  contexts.push_back(Context{StarAlgebra::scalars(model.hilbert_dim()), {}, "V0"});
  r.dims.push_back(1);
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(make_weyl_generator(model, "w_" + surfaces[i].id, surfaces[i], d));
    mats.push_back(gens.back().matrix);
    Context c;
    c.algebra = generate_star_algebra(mats, model.hilbert_dim(), tol);
    c.generators.resize(i + 1);
    std::iota(c.generators.begin(), c.generators.end(), 0);
    c.label = "V" + std::to_string(i + 1);
    r.dims.push_back(c.algebra.dim());
    contexts.push_back(std::move(c));
  }
  r.strictly_ascending = true;
  for (std::size_t i = 0; i + 1 < r.dims.size(); ++i)
    r.strictly_ascending = r.strictly_ascending && r.dims[i + 1] > r.dims[i];
  if (!r.strictly_ascending) return r;

  StarAlgebra ambient = contexts.back().algebra;
  r.poset = ContextPoset::from_contexts(std::move(ambient), gens, std::move(contexts), tol);
  const ExternalSpectrum sigma(r.poset);

  // lambda_0 is the unique character of span{I}.
  r.top_points.push_back(sigma.point_index(0, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    ChainStep step;
    step.depth = k;
    step.dim = r.dims[k];
    if (k - 1 < phases.size()) step.requested = phases[k - 1];
    const auto& w = gens[k - 1].matrix;
    std::vector<std::size_t> compatible;
    for (std::size_t c = 0; c < sigma.characters(k).size(); ++c) {
      const std::size_t p = sigma.point_index(k, c);
      if (sigma.restrict_point(p, k - 1) == r.top_points.back()) {
        compatible.push_back(p);
        step.available.push_back(sigma.character(p).evaluate(w));
      }
    }
    if (std::abs(std::abs(step.requested) - 1.0) > tol) {
      std::ostringstream msg;
      msg << "chain: phase at depth " << k << " is off the unit circle; compatible values:";
      for (const auto& v : step.available) msg << " (" << v.real() << "," << v.imag() << ")";
      throw ValidationError(msg.str());
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < compatible.size(); ++i)
      if (std::abs(step.available[i] - step.requested) <
          std::abs(step.available[best] - step.requested) - kCharacterMatchTolerance)
        best = i;
    step.realized = step.available.at(best);
    r.top_points.push_back(compatible.at(best));
    r.steps.push_back(std::move(step));
  }

  // X*_k = {(C, lambda) | V_m <= C <= V_{m+1}, lambda = lambda_{m+1}|C, m < k}
  // evaluated over the chain poset.
  for (auto& step : r.steps) {
    PointSet x = sigma.empty_set();
    for (std::size_t m = 0; m < step.depth; ++m) {
      for (std::size_t c = 0; c < r.poset.size(); ++c) {
        if (r.poset.leq(m, c) && r.poset.leq(c, m + 1))
          x.set(sigma.restrict_point(r.top_points[m + 1], c));
      }
    }
    step.truncated = x;
    step.closed = is_closed(sigma, x);
    step.irreducible = step.closed && is_irreducible(sigma, x);
    step.witnesses = witnesses_of(sigma, x);
    step.witness_is_top =
        step.witnesses.size() == 1 && step.witnesses[0] == r.top_points[step.depth];
  }
  for (auto& step : r.steps) {
    step.witness_escapes = true;
    for (const auto& earlier : r.steps)
      if (earlier.depth < step.depth && earlier.truncated.test(r.top_points[step.depth]))
        step.witness_escapes = false;
  }
  r.distinct_witnesses = true;
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    for (std::size_t j = i + 1; j < r.steps.size(); ++j)
      if (r.steps[i].witnesses == r.steps[j].witnesses) r.distinct_witnesses = false;
  return r;
}

}  // namespace bohrify
