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
#include <optional>
#include <string>
#include <vector>

#include "bohrify/context_poset.hpp"
#include "bohrify/holonomy.hpp"
#include "bohrify/kernels.hpp"

namespace bohrify {

inline constexpr std::size_t kMaxAutomorphismEdges = 10;

// A graph automorphism, possibly reversing some edges. Edge e is carried onto
// edge_image[e]; when flipped[e] is set the image runs backwards.
struct GraphAutomorphism {
  std::string label;
  std::vector<std::size_t> vertex_image;
  std::vector<std::size_t> edge_image;
  std::vector<std::uint8_t> flipped;

  bool is_identity() const;
};

GraphAutomorphism identity_automorphism(const Graph& graph);
// Throws ValidationError when the maps are not bijections or break incidence.
void validate_automorphism(const Graph& graph, const GraphAutomorphism& phi);
// (a o b)(x) = a(b(x))
GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b);
GraphAutomorphism inverse(const GraphAutomorphism& phi);

// Full automorphism group by backtracking over edge images; the identity
// comes first, the rest in search order. Labels are "phi0", "phi1", ...
std::vector<GraphAutomorphism> enumerate_automorphisms(const Graph& graph,
                                                       bool allow_flips = true);
// "a->b b->a | e1->-e1"
std::string describe_automorphism(const Graph& graph, const GraphAutomorphism& phi);

// phi_A(A)(phi(e)) = A(e), inverted when phi reverses e. Entry i is the
// index of phi_A(connection i).
ConnectionPermutation lift_to_connections(const HolonomyModel& model,
                                          const GraphAutomorphism& phi);

// (alpha f)(A) = f(phi_A^{-1}(A)), a permutation matrix.
ComplexMatrix alpha_operator(const HolonomyModel& model, const GraphAutomorphism& phi);

// Crossing data carried along phi, (out, in) swapped on reversed edges.
Surface transport_surface(const HolonomyModel& model, const GraphAutomorphism& phi,
                          const Surface& surface);
// (phi d)(phi(v)) = d(v)
GroupField transport_field(const GraphAutomorphism& phi, const GroupField& d);

// Theta_{phi d}^{phi S} == phi_A o Theta_d^S o phi_A^{-1} on every connection.
bool intertwining_check(const HolonomyModel& model, const GraphAutomorphism& phi,
                        const Surface& surface, const GroupField& d);

// w alpha == alpha w, without checking any hypothesis.
bool weyl_alpha_commute(const HolonomyModel& model, const GraphAutomorphism& phi,
                        const Surface& surface, const GroupField& d,
                        double tol = kDefaultTolerance);
// Same identity under its hypotheses phi(S) = S and d = d o phi^{-1}; throws
// PreconditionError naming each failed hypothesis.
bool weyl_alpha_commutation_check(const HolonomyModel& model, const GraphAutomorphism& phi,
                                  const Surface& surface, const GroupField& d,
                                  double tol = kDefaultTolerance);

// How configuration operators are carried along phi. kConjugation maps T_f to
// T_{f o phi_A^{-1}} = alpha T_f alpha^{-1}; kLiteral maps it to T_{f o phi_A}.
enum class ConfigurationAction { kConjugation, kLiteral };

// A_phi on a tagged generator. Weyl operators become w_{phi d}^{phi S}.
ComplexMatrix apply_diffeo_to_generator(const HolonomyModel& model, const GraphAutomorphism& phi,
                                        const Generator& generator,
                                        ConfigurationAction action = ConfigurationAction::kConjugation);

struct InvarianceViolation {
  std::string context;
  std::string transform;
  std::string first;   // generator labels of a non-commuting image pair
  std::string second;
};

struct InvarianceReport {
  std::size_t checked = 0;              // (context, transform) pairs
  std::size_t images_in_poset = 0;      // image algebra equals a poset context
  std::size_t conjugation_mismatches = 0;  // image generator != U X U^{-1}
  std::vector<InvarianceViolation> violations;

  bool passed() const { return violations.empty() && conjugation_mismatches == 0; }
};

// For every context and every phi, the algebra generated by the images of the
// context's generators must be commutative.
InvarianceReport diffeomorphism_invariance(
    const HolonomyModel& model, const ContextPoset& poset,
    const std::vector<GraphAutomorphism>& automorphisms, double tol = kDefaultTolerance,
    Execution exec = Execution::kParallel,
    ConfigurationAction action = ConfigurationAction::kConjugation);

// A_g(e) = g(s)^{-1} A(e) g(t)
Connection gauge_transform(const HolonomyModel& model, const GroupField& g,
                           const Connection& connection);
ConnectionPermutation gauge_permutation(const HolonomyModel& model, const GroupField& g);
// (U f)(A) = f(A_g)
ComplexMatrix gauge_unitary(const HolonomyModel& model, const GroupField& g);

// B_g(T_f) = T_{f(A_g)}, B_g(w_d) = w_{g d g^{-1}}.
ComplexMatrix apply_gauge_to_generator(const HolonomyModel& model, const GroupField& g,
                                       const Generator& generator);

InvarianceReport gauge_invariance(const HolonomyModel& model, const ContextPoset& poset,
                                  const std::vector<GroupField>& gauges,
                                  double tol = kDefaultTolerance,
                                  Execution exec = Execution::kParallel);

std::vector<GroupField> constant_gauges(const HolonomyModel& model);
std::vector<GroupField> random_gauges(const HolonomyModel& model, std::size_t count,
                                      std::uint64_t seed);
std::string field_label(const HolonomyModel& model, const GroupField& g);

}  // namespace bohrify
