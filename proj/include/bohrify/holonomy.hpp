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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bohrify/group.hpp"
#include "bohrify/matrix.hpp"
#include "bohrify/star_algebra.hpp"

namespace bohrify {

struct Edge {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Graph {
 public:
  Graph() = default;
  // Throws ValidationError on duplicate ids or dangling endpoints.
  Graph(std::vector<std::string> vertices, std::vector<std::string> edge_ids,
        std::vector<std::pair<std::string, std::string>> endpoints);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;  // throws
  std::size_t edge_index(std::string_view id) const;    // throws

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// One letter of a path word: an edge or its formal inverse.
struct PathStep {
  std::size_t edge = 0;
  bool inverted = false;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

// A freely reduced, composable edge word. Retraced pairs e e^-1 are rejected.
class PathWord {
 public:
  static PathWord empty(const Graph& graph, std::size_t vertex);
  static PathWord make(const Graph& graph, std::vector<PathStep> steps);
  // Parses "e1 -e2 e3" style words (a leading '-' marks an inverse).
  static PathWord parse(const Graph& graph, std::span<const std::string> letters,
                        std::optional<std::size_t> start = std::nullopt);

  const std::vector<PathStep>& steps() const { return steps_; }
  std::size_t start() const { return start_; }
  std::size_t end() const { return end_; }
  bool is_loop() const { return start_ == end_; }

 private:
  std::vector<PathStep> steps_;
  std::size_t start_ = 0;
  std::size_t end_ = 0;
};

// Edge -> group element, aligned with the graph's edge order.
struct Connection {
  std::vector<GroupElement> values;
  friend bool operator==(const Connection&, const Connection&) = default;
};

// Vertex -> group element, aligned with the graph's vertex order.
struct GroupField {
  std::vector<GroupElement> values;
  friend bool operator==(const GroupField&, const GroupField&) = default;
};

// Intersection data of a surface with one edge: out = sigma(e), in =
// sigma(e^-1). interior marks edges lying inside the surface, which the
// translation leaves unchanged.
struct EdgeCrossing {
  int out = 0;
  int in = 0;
  bool interior = false;
  friend bool operator==(const EdgeCrossing&, const EdgeCrossing&) = default;
};

struct Surface {
  std::string id;
  std::vector<EdgeCrossing> crossings;  // one per graph edge

  bool flags(std::size_t edge) const {
    const auto& c = crossings[edge];
    return c.out != 0 || c.in != 0 || c.interior;
  }
  // Same intersection data (ids are ignored).
  bool same_data(const Surface& other) const { return crossings == other.crossings; }
};

void validate_surface(const Graph& graph, const Surface& surface);

// No edge is flagged by both surfaces.
bool surfaces_disjoint(const Surface& a, const Surface& b);

using FunctionTable = std::vector<Complex>;  // one value per connection
using ConnectionPermutation = std::vector<std::size_t>;

// Graph + finite group + registered surfaces. Connections are enumerated
// lexicographically over (edge order, group element order), the first edge
// being the most significant digit.
class HolonomyModel {
 public:
  HolonomyModel() = default;
  HolonomyModel(Graph graph, FiniteGroup group, std::vector<Surface> surfaces = {});

  const Graph& graph() const { return graph_; }
  const FiniteGroup& group() const { return group_; }
  const std::vector<Surface>& surfaces() const { return surfaces_; }
  const Surface& surface(std::string_view id) const;  // throws ValidationError
  std::optional<std::size_t> find_surface_with_data(const Surface& s) const;

  std::size_t hilbert_dim() const { return hilbert_dim_; }
  std::size_t index_of(const Connection& c) const;
  Connection connection_at(std::size_t index) const;

  GroupField constant_field(GroupElement g) const {
    return GroupField{std::vector<GroupElement>(graph_.vertex_count(), g)};
  }
  void validate_field(const GroupField& field) const;

 private:
  Graph graph_;
  FiniteGroup group_;
  std::vector<Surface> surfaces_;
  std::size_t hilbert_dim_ = 1;
};

// h_A(gamma) = product along the word, gamma_1 traversed first on the left.
GroupElement holonomy(const HolonomyModel& model, const Connection& connection,
                      const PathWord& path);

// Restriction of a connection to a subgraph whose edges (matched by id, with
// equal endpoints) are among the model graph's edges.
Connection restrict_connection(const Graph& graph, const Connection& connection,
                               const Graph& subgraph);

// h(e) -> d(s)^{out} h(e) d(t)^{-in}, interior edges untouched.
Connection theta_translate(const HolonomyModel& model, const Surface& surface,
                           const GroupField& d, const Connection& connection);
// i -> index of theta(connection_at(i)).
ConnectionPermutation theta_permutation(const HolonomyModel& model, const Surface& surface,
                                        const GroupField& d);

GroupField pointwise_product(const FiniteGroup& group, const GroupField& a, const GroupField& b);
bool pointwise_commute(const FiniteGroup& group, const GroupField& a, const GroupField& b);

// Theta_{d2} o Theta_{d1} == Theta_{d1 d2} on every connection.
bool theta_compose_check(const HolonomyModel& model, const Surface& surface, const GroupField& d1,
                         const GroupField& d2);

// (f o perm)(i) = f(perm(i))
FunctionTable pullback(const FunctionTable& f, const ConnectionPermutation& perm);
bool is_permutation(const ConnectionPermutation& perm);
ConnectionPermutation inverse_permutation(const ConnectionPermutation& perm);

ComplexMatrix config_operator(const HolonomyModel& model, const FunctionTable& f);
// Pullback (w f)(A) = f(Theta_d(A)); a permutation matrix.
ComplexMatrix weyl_operator(const HolonomyModel& model, const Surface& surface,
                            const GroupField& d);
ComplexMatrix weyl_operator(const HolonomyModel& model, std::string_view surface_id,
                            const GroupField& d);

// w T_f w^-1 == T_{f o Theta} within tol.
bool weyl_conjugation_check(const HolonomyModel& model, const Surface& surface,
                            const GroupField& d, const FunctionTable& f,
                            double tol = kDefaultTolerance);

struct WeylSpec {
  Surface surface;
  GroupField field;
};

StarAlgebra build_weyl_algebra(const HolonomyModel& model,
                               const std::vector<FunctionTable>& config_fns,
                               const std::vector<WeylSpec>& weyl_specs,
                               double tol = kDefaultTolerance);

}  // namespace bohrify
