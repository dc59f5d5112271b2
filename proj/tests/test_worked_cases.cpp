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

// Small hand-computed cases, one per operation. Expected values are written
// out by hand rather than produced by the library.

#include <doctest.h>

#include <string>
#include <vector>

#include "bohrify/error.hpp"
#include "bohrify/logic.hpp"
#include "bohrify/symmetry.hpp"
#include "support.hpp"

namespace bohrify {
namespace {

const ComplexMatrix kI = ComplexMatrix::identity(2);
const ComplexMatrix kX(2, {0.0, 1.0, 1.0, 0.0});
const ComplexMatrix kZ(2, {1.0, 0.0, 0.0, -1.0});
const ComplexMatrix kE11 = ComplexMatrix::unit(2, 0, 0);
const ComplexMatrix kE22 = ComplexMatrix::unit(2, 1, 1);

bool same_set(std::vector<ComplexMatrix> got, const std::vector<ComplexMatrix>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    const auto it = std::find_if(got.begin(), got.end(),
                                 [&](const ComplexMatrix& g) { return approx_equal(g, w); });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

// Scalars, diag and span{I, X} as a three-context poset.
ContextPoset two_by_two_poset() {
  return ContextPoset::from_contexts(
      generate_star_algebra({kX, kZ}, 2), {},
      {Context{StarAlgebra::scalars(2), {}, "1"}, Context{generate_star_algebra({kZ}, 2), {}, "D"},
       Context{generate_star_algebra({kX}, 2), {}, "X"}});
}

ContextPoset scalars_only(std::size_t dim) {
  return ContextPoset::from_contexts(StarAlgebra::scalars(dim), {},
                                     {Context{StarAlgebra::scalars(dim), {}, "1"}});
}

}  // namespace

TEST_CASE("algebra core worked cases") {
  CHECK(generate_star_algebra({kI}, 2).dim() == 1);
  const auto e11 = generate_star_algebra({kE11}, 2);
  CHECK(e11.dim() == 2);
  CHECK(e11.contains(kE22));  // I - e11
  CHECK(generate_star_algebra({kX, kZ}, 2).dim() == 4);

  CHECK(commutes(kI, kX));
  CHECK(commutes(kE11, kE22));
  CHECK_FALSE(commutes(kX, kZ));

  const auto diag = generate_star_algebra({kZ}, 2);
  const auto span_x = generate_star_algebra({kX}, 2);
  const auto full = generate_star_algebra({kX, kZ}, 2);
  CHECK(is_commutative_algebra(StarAlgebra::scalars(2)));
  CHECK(is_commutative_algebra(diag));
  CHECK_FALSE(is_commutative_algebra(full));

  const ComplexMatrix zero(2);
  CHECK(same_set(projections_of(StarAlgebra::scalars(2)), {zero, kI}));
  CHECK(same_set(projections_of(diag), {zero, kE11, kE22, kI}));
  CHECK(same_set(projections_of(span_x), {zero, (kI + kX) * 0.5, (kI - kX) * 0.5, kI}));

  CHECK(subalgebra_leq(StarAlgebra::scalars(2), diag));
  CHECK(subalgebra_leq(diag, full));
  CHECK_FALSE(subalgebra_leq(diag, span_x));
}

TEST_CASE("holonomy worked cases") {
  const auto model = testing::z2_one_edge();
  const auto& g = model.graph();
  CHECK(holonomy(model, Connection{{1}}, PathWord::empty(g, 0)) == 0);
  CHECK(holonomy(model, Connection{{1}}, PathWord::make(g, {{0, false}})) == 1);
  CHECK_THROWS_AS(PathWord::make(g, {{0, false}, {0, true}}), ValidationError);

  SUBCASE("restriction to subgraphs") {
    const auto star = testing::fixture("z2_3edge").model;
    const auto& full = star.graph();
    const Graph two({"o", "x", "y"}, {"e1", "e2"}, {{"o", "x"}, {"o", "y"}});
    const Graph one({"o", "x"}, {"e1"}, {{"o", "x"}});
    for (std::size_t i = 0; i < star.hilbert_dim(); ++i) {
      const auto c = star.connection_at(i);
      CHECK(restrict_connection(full, c, full) == c);
      const auto c2 = restrict_connection(full, c, two);
      CHECK(c2.values == std::vector<GroupElement>{c.values[0], c.values[1]});
      CHECK(restrict_connection(two, c2, one) == restrict_connection(full, c, one));
    }
  }

  SUBCASE("translations") {
    const auto s3 = testing::fixture("s3_1edge").model;
    const auto& grp = s3.group();
    const auto& surface = s3.surface("S1");
    for (std::size_t i = 0; i < s3.hilbert_dim(); ++i) {
      const auto c = s3.connection_at(i);
      CHECK(theta_translate(s3, surface, s3.constant_field(grp.identity()), c) == c);
    }
    const auto two = testing::fixture("z2_2edge").model;
    const auto flip = two.constant_field(1);
    for (std::size_t i = 0; i < two.hilbert_dim(); ++i) {
      const auto c = two.connection_at(i);
      // S1 does not meet e2.
      CHECK(theta_translate(two, two.surface("S1"), flip, c).values[1] == c.values[1]);
    }
    // Z2: d1 = d2 = a at the source, so the double swap is the identity.
    const auto a = model.constant_field(1);
    CHECK(theta_compose_check(model, model.surface("S1"), a, a));
    CHECK(pointwise_product(model.group(), a, a) == model.constant_field(0));
    CHECK(theta_compose_check(s3, surface, s3.constant_field(grp.index_of("(123)")),
                              s3.constant_field(grp.identity())));
    CHECK(theta_compose_check(s3, surface, s3.constant_field(grp.index_of("(123)")),
                              s3.constant_field(grp.index_of("(132)"))));
  }

  SUBCASE("operators") {
    CHECK(config_operator(model, {1.0, 1.0}) == kI);
    CHECK(config_operator(model, {2.0, 3.0}) == ComplexMatrix(2, {2.0, 0.0, 0.0, 3.0}));
    const auto ind = config_operator(model, {0.0, 1.0});
    CHECK(ind == kE22);
    CHECK(weyl_operator(model, "S1", model.constant_field(0)) == kI);
    CHECK(weyl_operator(model, "S1", model.constant_field(1)) == kX);
    CHECK(weyl_conjugation_check(model, model.surface("S1"), model.constant_field(1), {4.0, 4.0}));
    const auto s3 = testing::fixture("s3_1edge").model;
    for (GroupElement d = 0; d < 6; ++d) {
      CHECK(weyl_conjugation_check(s3, s3.surface("S1"), s3.constant_field(d),
                                   testing::random_table(6, d)));
    }
  }

  SUBCASE("Weyl algebras") {
    CHECK(build_weyl_algebra(model, {}, {}).dim() == 1);
    CHECK(build_weyl_algebra(model, {{1.0, -1.0}}, {{model.surface("S1"), model.constant_field(1)}})
              .dim() == 4);
    const auto two = testing::fixture("z2_2edge").model;
    const auto w = build_weyl_algebra(two, {}, {{two.surface("S1"), two.constant_field(1)},
                                                {two.surface("S2"), two.constant_field(1)}});
    CHECK(is_commutative_algebra(w));
    CHECK(w.dim() == 4);
  }
}

TEST_CASE("context poset worked cases") {
  const auto model = testing::z2_one_edge();
  const auto empty = build_context_poset(StarAlgebra::scalars(2), {});
  CHECK(empty.size() == 1);
  const auto acc = ascending_chain_check(empty);
  CHECK(acc.satisfies_acc);
  CHECK(acc.longest_chain == std::vector<std::size_t>{0});

  // w1 and w2 on the two-edge model commute: {w1, w2} sits above both.
  const auto poset = model_poset(testing::fixture("z2_2edge"));
  std::size_t w1 = 0, w2 = 0, both = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& l = poset.context(i).label;
    if (l == "{w1}") w1 = i;
    if (l == "{w2}") w2 = i;
    if (l == "{w1, w2}") both = i;
  }
  REQUIRE(both != 0);
  CHECK(poset.leq(w1, both));
  CHECK(poset.leq(w2, both));

  const auto d = model.constant_field(1);
  const auto r = mixed_context_search(model, model.surface("S1"), d,
                                      {{"cc", {0.5, 0.5}}, {"sign", {1.0, -1.0}}});
  CHECK(r[0].invariant);
  CHECK(r[0].commutes);
  CHECK_FALSE(r[1].invariant);
  CHECK_FALSE(r[1].commutes);

  // S3: f constant on the orbits of h -> (123) h, i.e. on cosets of A3 from the left.
  const auto s3 = testing::fixture("s3_1edge").model;
  const auto& grp = s3.group();
  const auto rot = s3.constant_field(grp.index_of("(123)"));
  FunctionTable orbit(6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto h = s3.connection_at(i).values[0];
    const auto r1 = grp.multiply(grp.index_of("(123)"), h);
    const auto r2 = grp.multiply(grp.index_of("(123)"), r1);
    orbit[i] = static_cast<double>(std::min({h, r1, r2})) + 1.0;
  }
  const auto s3r = mixed_context_search(s3, s3.surface("S1"), rot, {{"orbit", orbit}});
  CHECK(s3r[0].invariant);
  CHECK(s3r[0].commutes);
}

TEST_CASE("chain poset grows strictly") {
  const auto spec = testing::fixture("z2_4edge");
  const auto& m = spec.model;
  std::vector<Surface> surfaces;
  for (const char* id : {"S1", "S2", "S3", "S4"}) surfaces.push_back(m.surface(id));
  for (std::size_t n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const std::vector<Surface> first(surfaces.begin(), surfaces.begin() + n);
    const auto r = nonsober_chain(m, first, m.constant_field(1), {});
    const auto acc = ascending_chain_check(r.poset);
    CHECK(acc.longest_chain.size() == n + 1);
    for (std::size_t k = 1; k < r.dims.size(); ++k) CHECK(r.dims[k] > r.dims[k - 1]);
    // Closure of the top of V1 < V2 has three points.
    const ExternalSpectrum sigma(r.poset);
    CHECK(point_closure(sigma, r.top_points[2]).count() == 3);
  }
}

TEST_CASE("spectrum worked cases") {
  for (std::size_t dim : {1, 3, 8}) {
    const auto chars = gelfand_spectrum(StarAlgebra::scalars(dim));
    REQUIRE(chars.size() == 1);
    CHECK(std::abs(chars[0].evaluate(ComplexMatrix::identity(dim)) - 1.0) < 1e-12);
  }
  const auto diag = gelfand_spectrum(generate_star_algebra({kZ}, 2));
  REQUIRE(diag.size() == 2);
  const ComplexMatrix x12(2, {7.0, 0.0, 0.0, -3.0});
  std::vector<double> values{diag[0].evaluate(x12).real(), diag[1].evaluate(x12).real()};
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<double>{-3.0, 7.0});
  const auto span_x = generate_star_algebra({kX}, 2);
  const auto pm = gelfand_spectrum(span_x);
  REQUIRE(pm.size() == 2);
  CHECK(std::abs(pm[0].evaluate(kX) + pm[1].evaluate(kX)) < 1e-12);
  CHECK(std::abs(std::abs(pm[0].evaluate(kX)) - 1.0) < 1e-12);
  const auto scalars = StarAlgebra::scalars(2);
  const auto bottom = gelfand_spectrum(scalars);
  for (const auto& c : pm) CHECK(restrict_character(c, scalars, bottom) == 0);

  const auto single = scalars_only(2);
  const ExternalSpectrum one(single);
  CHECK(one.size() == 1);
  CHECK(one.arrows().empty());
  CHECK(sobriety_check(one).sober);

  const auto poset = two_by_two_poset();
  const ExternalSpectrum sigma(poset);
  CHECK(sigma.size() == 5);
  const auto arrows = sigma.arrows();
  CHECK(arrows.size() == 4);
  for (const auto& [from, to] : arrows) CHECK(to == 0);

  CHECK(is_closed(sigma, sigma.full_set()));
  auto lone = sigma.empty_set();
  lone[1] = true;
  CHECK_FALSE(is_closed(sigma, lone));
  lone[0] = true;
  CHECK(is_closed(sigma, lone));
  CHECK(point_closure(sigma, 1) == lone);
  CHECK(point_closure(sigma, 0).count() == 1);
  for (std::size_t p = 0; p < 5; ++p) {
    CHECK(is_closed(sigma, point_closure(sigma, p)));
    CHECK(is_irreducible(sigma, point_closure(sigma, p)));
  }
  // Two characters at one context.
  CHECK_FALSE(is_irreducible(sigma, point_closure(sigma, 1) | point_closure(sigma, 2)));
  // Incomparable contexts with no common upper bound.
  CHECK_FALSE(is_irreducible(sigma, point_closure(sigma, 1) | point_closure(sigma, 3)));
  const auto sob = sobriety_check(sigma);
  CHECK(sob.sober);
  CHECK(sob.irreducible_sets.size() == 5);
}

TEST_CASE("symmetry worked cases") {
  const auto spec = testing::fixture("z2_2edge");
  const auto& m = spec.model;
  const auto id = identity_automorphism(m.graph());
  const auto lift = lift_to_connections(m, id);
  for (std::size_t i = 0; i < lift.size(); ++i) CHECK(lift[i] == i);
  CHECK(alpha_operator(m, id) == ComplexMatrix::identity(4));

  const auto swap = *std::find_if(spec.automorphisms.begin(), spec.automorphisms.end(),
                                  [](const GraphAutomorphism& phi) {
                                    return phi.edge_image == std::vector<std::size_t>{1, 0} &&
                                           phi.flipped == std::vector<std::uint8_t>{0, 0};
                                  });
  const auto sl = lift_to_connections(m, swap);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto c = m.connection_at(i).values;
    CHECK(m.connection_at(sl[i]).values == std::vector<GroupElement>{c[1], c[0]});
  }
  // Connections 00, 01, 10, 11: the swap exchanges 01 and 10.
  const std::vector<std::size_t> image{0, 2, 1, 3};
  CHECK(alpha_operator(m, swap) == ComplexMatrix::from_row_permutation(image));

  const auto& s12 = m.surface("S12");
  const auto flip = m.constant_field(1);
  CHECK(weyl_alpha_commutation_check(m, id, s12, flip));
  CHECK(weyl_alpha_commutation_check(m, swap, s12, flip));
  GroupField lopsided = m.constant_field(0);
  lopsided.values[m.graph().vertex_index("a")] = 1;
  CHECK_THROWS_AS(weyl_alpha_commutation_check(m, swap, s12, lopsided), PreconditionError);
  CHECK_FALSE(weyl_alpha_commute(m, swap, s12, lopsided));

  const auto gens = spec.generators();
  for (const auto& gen : gens) CHECK(apply_diffeo_to_generator(m, id, gen) == gen.matrix);
  const auto& w1 = gens[1];
  REQUIRE(w1.label == "w1");
  const auto moved = apply_diffeo_to_generator(m, swap, w1);
  CHECK(approx_equal(moved, weyl_operator(m, "S2", flip)));
  const auto alpha = alpha_operator(m, swap);
  CHECK(approx_equal(moved, alpha * w1.matrix * alpha.adjoint()));

  const auto poset = model_poset(spec);
  const auto report = diffeomorphism_invariance(m, poset, {id, swap});
  CHECK(report.passed());
  // The configuration generator T1 has no partner T2, so its images leave the poset.
  CHECK(report.images_in_poset < report.checked);

  SUBCASE("gauge") {
    const auto s3 = testing::fixture("s3_1edge").model;
    const auto& grp = s3.group();
    for (std::size_t i = 0; i < s3.hilbert_dim(); ++i) {
      const auto c = s3.connection_at(i);
      CHECK(gauge_transform(s3, s3.constant_field(grp.identity()), c) == c);
    }
    const auto g = s3.constant_field(grp.index_of("(123)"));
    const auto t = grp.index_of("(12)");
    const auto w = make_weyl_generator(s3, "w", s3.surface("S1"), s3.constant_field(t));
    const auto expect = weyl_operator(s3, "S1", s3.constant_field(grp.conjugate(g.values[0], t)));
    CHECK(apply_gauge_to_generator(s3, g, w) == expect);
    const auto u = gauge_unitary(s3, g);
    CHECK(approx_equal(u * w.matrix * u.adjoint(), expect));
  }
}

TEST_CASE("logic worked cases") {
  const auto poset = two_by_two_poset();
  const ExternalSpectrum sigma(poset);
  const auto& diag = poset.context(1).algebra;
  const auto& span_x = poset.context(2).algebra;

  CHECK(daseinise(ComplexMatrix(2), diag) == ComplexMatrix(2));
  CHECK(approx_equal(daseinise(kE11, diag), kE11));
  CHECK(approx_equal(daseinise(kE11, span_x), kI));

  CHECK(alpha_iso(kI, diag, sigma.characters(1)).count() == 2);
  CHECK(alpha_iso(ComplexMatrix(2), diag, sigma.characters(1)).none());
  const auto a11 = alpha_iso(kE11, diag, sigma.characters(1));
  REQUIRE(a11.count() == 1);
  const auto hit = a11.find_first();
  CHECK(std::abs(sigma.characters(1)[hit].evaluate(kE11) - 1.0) < 1e-12);

  CHECK(daseinise_global(kI, sigma) == top(sigma));
  CHECK(daseinise_global(ComplexMatrix(2), sigma) == bottom(sigma));
  const auto s = daseinise_global(kE11, sigma);
  CHECK(s[0]);
  CHECK(s[sigma.point_index(1, hit)]);
  CHECK_FALSE(s[sigma.point_index(1, 1 - hit)]);
  CHECK(s[3]);
  CHECK(s[4]);
  CHECK_FALSE(excluded_middle_search(sigma, {{"e11", kE11}})[0].excluded_middle);
}

}  // namespace bohrify
