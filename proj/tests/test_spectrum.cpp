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

#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bohrify/error.hpp"
#include "bohrify/spectrum.hpp"
#include "support.hpp"

namespace bohrify {
namespace {

PointSet from_mask(std::size_t n, std::uint64_t mask) {
  PointSet s(n);
  for (std::size_t p = 0; p < n; ++p) s[p] = (mask >> p & 1) != 0;
  return s;
}

std::uint64_t to_mask(const PointSet& s) {
  std::uint64_t m = 0;
  for (std::size_t p = 0; p < s.size(); ++p) m |= std::uint64_t{s[p]} << p;
  return m;
}

// Down-closure under restriction, read straight off restrict_point.
bool closed_by_definition(const ExternalSpectrum& sigma, std::uint64_t mask) {
  const auto& poset = sigma.poset();
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    if (!(mask >> p & 1)) continue;
    for (std::size_t d = 0; d < poset.size(); ++d) {
      if (poset.leq(d, sigma.point(p).context) && !(mask >> sigma.restrict_point(p, d) & 1)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> closed_masks(const ExternalSpectrum& sigma) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << sigma.size()); ++m) {
    if (closed_by_definition(sigma, m)) out.push_back(m);
  }
  return out;
}

// Topological irreducibility: nonempty and not a union of two proper closed
// subsets.
bool irreducible_by_definition(const std::vector<std::uint64_t>& closed, std::uint64_t s) {
  if (s == 0) return false;
  std::vector<std::uint64_t> proper;
  for (auto c : closed) {
    if ((c & ~s) == 0 && c != s) proper.push_back(c);
  }
  for (std::size_t i = 0; i < proper.size(); ++i) {
    for (std::size_t j = i; j < proper.size(); ++j) {
      if ((proper[i] | proper[j]) == s) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Z2 two-generator spectrum") {
  const auto spec = testing::fixture("z2_1edge");
  const auto poset = model_poset(spec);
  const ExternalSpectrum sigma(poset);
  CHECK(sigma.size() == 5);
  CHECK(sigma.characters(0).size() == 1);
  CHECK(sigma.characters(1).size() == 2);
  CHECK(sigma.characters(2).size() == 2);
  CHECK(sigma.arrows().size() == 4);
  CHECK(sigma.composition_closed());
  CHECK(sigma.point_label(3) == "({w}, l0)");

  // Characters value the generators at +-1 and the identity at 1.
  const auto& t = poset.generators()[0].matrix;
  Complex sum{0.0, 0.0};
  for (const auto& c : sigma.characters(1)) {
    CHECK(std::abs(std::abs(c.evaluate(t)) - 1.0) < 1e-12);
    CHECK(std::abs(c.evaluate(ComplexMatrix::identity(2)) - Complex{1.0, 0.0}) < 1e-12);
    sum += c.evaluate(t);
  }
  CHECK(std::abs(sum) < 1e-12);

  for (std::size_t p = 1; p < 5; ++p) {
    const auto closure = point_closure(sigma, p);
    CHECK(closure.count() == 2);
    CHECK(closure[0]);
    CHECK(closure[p]);
  }
}

TEST_CASE("characters are multiplicative on their context") {
  for (const char* name : {"s3_1edge", "q8_1edge"}) {
    CAPTURE(name);
    const auto poset = model_poset(testing::fixture(name));
    const ExternalSpectrum sigma(poset);
    for (std::size_t c = 0; c < poset.size(); ++c) {
      const auto& basis = poset.context(c).algebra.basis();
      for (const auto& lambda : sigma.characters(c)) {
        for (const auto& a : basis) {
          for (const auto& b : basis) {
            const auto lhs = lambda.evaluate(a * b);
            const auto rhs = lambda.evaluate(a) * lambda.evaluate(b);
            CHECK(std::abs(lhs - rhs) < 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("restriction agrees with evaluating on the subcontext") {
  const auto poset = model_poset(testing::fixture("z2_2edge"));
  const ExternalSpectrum sigma(poset);
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const auto& lambda = sigma.character(p);
    for (std::size_t d = 0; d < poset.size(); ++d) {
      if (!poset.leq(d, sigma.point(p).context)) {
        CHECK_THROWS_AS(sigma.restrict_point(p, d), PreconditionError);
        continue;
      }
      const auto& mu = sigma.character(sigma.restrict_point(p, d));
      for (const auto& b : poset.context(d).algebra.basis()) {
        CHECK(std::abs(lambda.evaluate(b) - mu.evaluate(b)) < 1e-9);
      }
    }
  }
}

TEST_CASE("closed sets and open complements") {
  for (const char* name : {"z2_1edge", "z2_2edge", "s3_1edge"}) {
    CAPTURE(name);
    const auto poset = model_poset(testing::fixture(name));
    const ExternalSpectrum sigma(poset);
    const auto n = sigma.size();
    std::size_t closed = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto s = from_mask(n, m);
      const bool by_def = closed_by_definition(sigma, m);
      CHECK(is_closed(sigma, s) == by_def);
      CHECK(is_open(sigma, ~s) == by_def);
      closed += by_def;
    }
    const auto [below, above] = duality_masks(sigma);
    const auto sweep = kernels::closed_open_duality(below, above, Execution::kSerial);
    CHECK(sweep.closed == closed);
    CHECK(sweep == kernels::closed_open_duality(below, above, Execution::kParallel));
  }
}

TEST_CASE("point closures are the smallest closed supersets") {
  for (const char* name : {"z2_1edge", "z2_2edge", "s3_1edge"}) {
    CAPTURE(name);
    const auto poset = model_poset(testing::fixture(name));
    const ExternalSpectrum sigma(poset);
    const auto closed = closed_masks(sigma);
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      std::uint64_t smallest = ~std::uint64_t{0};
      for (auto c : closed) {
        if ((c >> p & 1) && std::popcount(c) < std::popcount(smallest)) smallest = c;
      }
      CHECK(to_mask(point_closure(sigma, p)) == smallest);
    }
  }
}

TEST_CASE("irreducibility conditions match the topological definition") {
  for (const char* name : {"z2_1edge", "z2_2edge"}) {
    CAPTURE(name);
    const auto poset = model_poset(testing::fixture(name));
    const ExternalSpectrum sigma(poset);
    const auto closed = closed_masks(sigma);
    std::size_t irreducible = 0;
    for (auto c : closed) {
      const bool expected = irreducible_by_definition(closed, c);
      CHECK(is_irreducible(sigma, from_mask(sigma.size(), c)) == expected);
      irreducible += expected;
    }
    // Sober: exactly one irreducible closed set per point.
    CHECK(irreducible == sigma.size());
  }
  const auto poset = model_poset(testing::fixture("z2_1edge"));
  const ExternalSpectrum sigma(poset);
  CHECK_THROWS_AS(is_irreducible(sigma, from_mask(5, 0b00010)), PreconditionError);
}

TEST_CASE("sobriety search") {
  SUBCASE("Z2 two-generator model is sober with five witnesses") {
    const auto poset = model_poset(testing::fixture("z2_1edge"));
    const ExternalSpectrum sigma(poset);
    const auto r = sobriety_check(sigma);
    CHECK(r.sober);
    CHECK_FALSE(r.partial);
    REQUIRE(r.irreducible_sets.size() == 5);
    for (const auto& s : r.irreducible_sets) {
      REQUIRE(s.witnesses.size() == 1);
      CHECK(point_closure(sigma, s.witnesses[0]) == s.set);
    }
    CHECK_FALSE(r.counterexample.has_value());
  }
  SUBCASE("every fixture is sober, serial or parallel spectrum") {
    for (const auto& spec : testing::all_fixtures()) {
      CAPTURE(spec.name);
      const auto poset = model_poset(spec);
      const ExternalSpectrum par(poset, Execution::kParallel);
      const ExternalSpectrum ser(poset, Execution::kSerial);
      CHECK(par.points() == ser.points());
      CHECK(par.arrows() == ser.arrows());
      const auto r = sobriety_check(par);
      CHECK(r.sober);
      CHECK(r.irreducible_sets.size() == par.size());
      const auto partial = sobriety_check(par, true);
      CHECK(partial.partial);
      CHECK(partial.sober);
    }
  }
  SUBCASE("cap") {
    const auto poset = model_poset(testing::fixture("z2_3edge"));
    const ExternalSpectrum sigma(poset);
    CHECK_THROWS_AS(sobriety_check(sigma, false, 3), CapExceeded);
    // Partial mode visits the 29 * 30 / 2 pairs and is capped as well.
    CHECK_THROWS_AS(sobriety_check(sigma, true, 3), CapExceeded);
    CHECK(sobriety_check(sigma, true, 435).sober);
  }
}

TEST_CASE("truncated non-sober chain") {
  const auto spec = testing::fixture("z2_3edge");
  const auto& model = spec.model;
  std::vector<Surface> surfaces{model.surface("S1"), model.surface("S2"), model.surface("S3")};
  const auto d = model.constant_field(1);
  const auto r = nonsober_chain(model, surfaces, d, {-1.0, 1.0, -1.0});
  CHECK(r.dims == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(r.strictly_ascending);
  CHECK(r.distinct_witnesses);
  CHECK(r.passed());
  REQUIRE(r.steps.size() == 3);
  for (const auto& step : r.steps) {
    CAPTURE(step.depth);
    CHECK(step.closed);
    CHECK(step.irreducible);
    REQUIRE(step.witnesses.size() == 1);
    CHECK(step.witness_is_top);
    CHECK(step.witness_escapes);
    CHECK(step.truncated.count() == step.depth + 1);
    CHECK(step.realized == step.requested);
  }

  // Unreachable phase: snapped to the nearest compatible value.
  const auto snapped = nonsober_chain(model, surfaces, d, {Complex{0.0, 1.0}});
  CHECK(std::abs(std::abs(snapped.steps[0].realized) - 1.0) < 1e-12);
  CHECK(snapped.steps[0].available.size() == 2);
  CHECK(snapped.passed());

  CHECK_THROWS_AS(nonsober_chain(model, surfaces, d, {2.0}), ValidationError);
  CHECK_THROWS_AS(nonsober_chain(model, {surfaces[0]}, d, {}), PreconditionError);
  CHECK_THROWS_AS(nonsober_chain(model, {surfaces[0], surfaces[0]}, d, {}), PreconditionError);
}

}  // namespace bohrify
