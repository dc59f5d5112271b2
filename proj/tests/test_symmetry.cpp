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

#include <string>
#include <vector>

#include "bohrify/error.hpp"
#include "bohrify/symmetry.hpp"
#include "support.hpp"

namespace bohrify {
namespace {

// The rotation a -> b -> c -> a of the triangle.
GraphAutomorphism rotation(const Graph& g) {
  for (auto& phi : enumerate_automorphisms(g, false)) {
    if (phi.vertex_image == std::vector<std::size_t>{1, 2, 0}) return phi;
  }
  FAIL("rotation not found");
  return {};
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& x) {
  return u * x * u.adjoint();
}

}  // namespace

TEST_CASE("automorphism groups") {
  SUBCASE("single edge: identity and reversal") {
    const auto model = testing::z2_one_edge();
    const auto all = enumerate_automorphisms(model.graph());
    REQUIRE(all.size() == 2);
    CHECK(all[0].is_identity());
    CHECK(all[0].label == "phi0");
    CHECK(all[1].flipped[0] == 1);
    CHECK(enumerate_automorphisms(model.graph(), false).size() == 1);
  }
  SUBCASE("two disjoint edges") {
    CHECK(testing::fixture("z2_2edge").automorphisms.size() == 8);
  }
  SUBCASE("stars") {
    CHECK(testing::fixture("z2_3edge").automorphisms.size() == 6);
    CHECK(testing::fixture("z2_4edge").automorphisms.size() == 24);
  }
  SUBCASE("directed triangle") {
    const auto model = testing::triangle("Z2");
    // Rotations preserve orientation; reflections reverse all three edges.
    CHECK(enumerate_automorphisms(model.graph(), false).size() == 3);
    CHECK(enumerate_automorphisms(model.graph(), true).size() == 6);
  }
}

TEST_CASE("group laws on automorphisms and lifts") {
  const auto model = testing::triangle("Z3");
  const auto all = enumerate_automorphisms(model.graph());
  for (const auto& a : all) {
    validate_automorphism(model.graph(), a);
    CHECK(compose(a, inverse(a)).is_identity());
    const auto la = lift_to_connections(model, a);
    CHECK(is_permutation(la));
    for (const auto& b : all) {
      const auto ab = compose(a, b);
      validate_automorphism(model.graph(), ab);
      // (a o b)_A = a_A o b_A on connection indices.
      const auto lb = lift_to_connections(model, b);
      const auto lab = lift_to_connections(model, ab);
      for (std::size_t i = 0; i < lab.size(); ++i) CHECK(lab[i] == la[lb[i]]);
    }
  }
  GraphAutomorphism broken = all[1];
  std::swap(broken.vertex_image[0], broken.vertex_image[1]);
  CHECK_THROWS_AS(validate_automorphism(model.graph(), broken), ValidationError);
}

TEST_CASE("lift of the single-edge reversal inverts the holonomy") {
  const auto model = testing::triangle("S3");
  const auto& g = model.group();
  for (const auto& phi : enumerate_automorphisms(model.graph())) {
    const auto lift = lift_to_connections(model, phi);
    for (std::size_t i = 0; i < model.hilbert_dim(); i += 7) {
      const auto a = model.connection_at(i);
      const auto b = model.connection_at(lift[i]);
      for (std::size_t e = 0; e < 3; ++e) {
        const auto v = b.values[phi.edge_image[e]];
        CHECK(v == (phi.flipped[e] ? g.inverse(a.values[e]) : a.values[e]));
      }
    }
  }
}

TEST_CASE("intertwining identity and transported Weyl operators") {
  for (const char* group : {"Z2", "S3"}) {
    CAPTURE(group);
    const auto model = testing::triangle(group);
    const auto& grp = model.group();
    const GroupField d{{grp.size() - 1, 1 % grp.size(), 0}};
    for (const auto& phi : enumerate_automorphisms(model.graph())) {
      const auto alpha = alpha_operator(model, phi);
      CHECK(is_unitary(alpha));
      for (const auto& s : model.surfaces()) {
        CHECK(intertwining_check(model, phi, s, d));
        const auto ws = weyl_operator(model, transport_surface(model, phi, s),
                                      transport_field(phi, d));
        CHECK(approx_equal(ws, conjugate(alpha, weyl_operator(model, s, d))));
      }
    }
  }
}

TEST_CASE("alpha commutes with w under the hypotheses") {
  const auto spec = testing::fixture("z2_2edge");
  const auto& model = spec.model;
  const auto& s12 = model.surface("S12");
  const auto d = model.constant_field(1);
  std::size_t preserving = 0;
  for (const auto& phi : spec.automorphisms) {
    const bool fixes = transport_surface(model, phi, s12).same_data(s12);
    if (fixes) {
      ++preserving;
      CHECK(weyl_alpha_commutation_check(model, phi, s12, d));
    } else {
      CHECK_THROWS_AS(weyl_alpha_commutation_check(model, phi, s12, d), PreconditionError);
    }
  }
  // The edge swap fixes S12, the reversals do not.
  CHECK(preserving == 2);
}

TEST_CASE("configuration operators move by conjugation") {
  const auto model = testing::triangle("Z2");
  for (const auto& phi : enumerate_automorphisms(model.graph())) {
    const auto alpha = alpha_operator(model, phi);
    const auto gen = make_configuration_generator(model, "f", testing::random_table(8, 21));
    const auto image = apply_diffeo_to_generator(model, phi, gen);
    CHECK(approx_equal(image, conjugate(alpha, gen.matrix)));
  }
}

// The literal reading T_f -> T_{f o phi_A} disagrees with the Weyl transport
// once phi_A is not an involution, so it breaks w T_f w^-1 = T_{f o Theta}.
TEST_CASE("literal action on configurations fails on a 3-cycle") {
  const auto model = testing::triangle("Z2");
  const auto phi = rotation(model.graph());
  const auto& s = model.surface("S1");
  const auto d = model.constant_field(1);
  const auto wgen = make_weyl_generator(model, "w", s, d);
  const auto theta = theta_permutation(model, s, d);
  std::size_t literal_breaks = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = testing::random_table(8, seed);
    const auto tf = make_configuration_generator(model, "f", f);
    const auto tf_theta = make_configuration_generator(model, "g", pullback(f, theta));
    for (auto action : {ConfigurationAction::kConjugation, ConfigurationAction::kLiteral}) {
      const auto w = apply_diffeo_to_generator(model, phi, wgen, action);
      const auto lhs = w * apply_diffeo_to_generator(model, phi, tf, action) * w.adjoint();
      const auto rhs = apply_diffeo_to_generator(model, phi, tf_theta, action);
      if (action == ConfigurationAction::kConjugation) {
        CHECK(approx_equal(lhs, rhs));
      } else if (!approx_equal(lhs, rhs)) {
        ++literal_breaks;
      }
    }
  }
  CHECK(literal_breaks == 10);

  // The same split shows up as invariance failures on the fixture-style sweep.
  const std::vector<Generator> gens{
      make_configuration_generator(model, "T", testing::random_table(8, 1)), wgen};
  std::vector<ComplexMatrix> mats{gens[0].matrix, gens[1].matrix};
  const auto ambient = generate_star_algebra(mats, 8);
  const auto poset = build_context_poset(ambient, gens);
  const std::vector<GraphAutomorphism> group{identity_automorphism(model.graph()), phi};
  CHECK(diffeomorphism_invariance(model, poset, group).passed());
  CHECK_FALSE(diffeomorphism_invariance(model, poset, group, kDefaultTolerance,
                                        Execution::kParallel, ConfigurationAction::kLiteral)
                  .passed());
}

TEST_CASE("gauge transformations") {
  const auto model = testing::triangle("S3");
  const auto& g = model.group();
  const GroupField gauge{{g.index_of("(12)"), g.index_of("(123)"), g.index_of("e")}};
  const auto c = model.connection_at(100);
  const auto moved = gauge_transform(model, gauge, c);
  const auto& edges = model.graph().edges();
  for (std::size_t e = 0; e < 3; ++e) {
    const auto expect = g.multiply(g.multiply(g.inverse(gauge.values[edges[e].source]), c.values[e]),
                                   gauge.values[edges[e].target]);
    CHECK(moved.values[e] == expect);
  }
  // Loop holonomies only change by conjugation at the base point.
  const std::vector<std::string> loop{"e1", "e2", "e3"};
  const auto word = PathWord::parse(model.graph(), loop);
  CHECK(holonomy(model, moved, word) ==
        g.conjugate(g.inverse(gauge.values[0]), holonomy(model, c, word)));

  const auto u = gauge_unitary(model, gauge);
  CHECK(is_unitary(u));
  const auto tgen = make_configuration_generator(model, "T", testing::random_table(216, 4));
  CHECK(approx_equal(apply_gauge_to_generator(model, gauge, tgen), conjugate(u, tgen.matrix)));
  const GroupField d{{g.index_of("(13)"), g.index_of("e"), g.index_of("(23)")}};
  const auto wgen = make_weyl_generator(model, "w", model.surface("S1"), d);
  CHECK(approx_equal(apply_gauge_to_generator(model, gauge, wgen), conjugate(u, wgen.matrix)));
}

TEST_CASE("gauge lists are deterministic") {
  const auto model = testing::triangle("S3");
  CHECK(constant_gauges(model).size() == 6);
  CHECK(random_gauges(model, 5, 9) == random_gauges(model, 5, 9));
  CHECK(random_gauges(model, 5, 9) != random_gauges(model, 5, 10));
  CHECK(field_label(model, model.constant_field(0)) == "{a:e, b:e, c:e}");
}

TEST_CASE("invariance sweeps on the fixtures, serial and parallel") {
  for (const auto& spec : testing::all_fixtures()) {
    CAPTURE(spec.name);
    const auto poset = model_poset(spec);
    const auto gauges = spec.gauge_fields();
    const auto dp = diffeomorphism_invariance(spec.model, poset, spec.automorphisms);
    const auto ds = diffeomorphism_invariance(spec.model, poset, spec.automorphisms,
                                              kDefaultTolerance, Execution::kSerial);
    CHECK(dp.passed());
    CHECK(dp.checked == ds.checked);
    CHECK(dp.images_in_poset == ds.images_in_poset);
    const auto gp = gauge_invariance(spec.model, poset, gauges);
    const auto gs = gauge_invariance(spec.model, poset, gauges, kDefaultTolerance,
                                     Execution::kSerial);
    CHECK(gp.passed());
    CHECK(gp.checked == gs.checked);
    CHECK(gp.checked == poset.size() * gauges.size());
  }
}

}  // namespace bohrify
