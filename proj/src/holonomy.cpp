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
#include "bohrify/holonomy.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bohrify/error.hpp"

namespace bohrify {

Graph::Graph(std::vector<std::string> vertices, std::vector<std::string> edge_ids,
             std::vector<std::pair<std::string, std::string>> endpoints)
    : vertices_(std::move(vertices)) {
  if (edge_ids.size() != endpoints.size()) {
    throw ValidationError("graph: edge ids and endpoint lists differ in length");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j]) {
        throw ValidationError("graph: duplicate vertex id '" + vertices_[i] + "'");
      }
  for (std::size_t e = 0; e < edge_ids.size(); ++e) {
    if (find_edge(edge_ids[e])) {
      throw ValidationError("graph: duplicate edge id '" + edge_ids[e] + "'");
    }
    const auto s = find_vertex(endpoints[e].first);
    const auto t = find_vertex(endpoints[e].second);
    if (!s || !t) {
      throw ValidationError("graph: edge '" + edge_ids[e] + "' references unknown vertex '" +
                            (s ? endpoints[e].second : endpoints[e].first) + "'");
    }
    edges_.push_back(Edge{edge_ids[e], *s, *t});
  }
}

std::optional<std::size_t> Graph::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Graph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw ValidationError("unknown vertex '" + std::string(id) + "'");
}

std::size_t Graph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw ValidationError("unknown edge '" + std::string(id) + "'");
}

PathWord PathWord::empty(const Graph& graph, std::size_t vertex) {
  if (vertex >= graph.vertex_count()) throw ValidationError("path: vertex out of range");
  PathWord p;
  p.start_ = p.end_ = vertex;
  return p;
}

PathWord PathWord::make(const Graph& graph, std::vector<PathStep> steps) {
  if (steps.empty()) throw ValidationError("path: an empty word needs an explicit start vertex");
  PathWord p;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].edge >= graph.edge_count()) throw ValidationError("path: edge out of range");
    const Edge& e = graph.edges()[steps[i].edge];
    const std::size_t from = steps[i].inverted ? e.target : e.source;
    const std::size_t to = steps[i].inverted ? e.source : e.target;
    if (i == 0) {
      p.start_ = from;
    } else {
      if (from != p.end_) {
        throw ValidationError("path: step " + std::to_string(i) + " (" + e.id +
                              ") does not start where the previous step ends");
      }
      if (steps[i].edge == steps[i - 1].edge && steps[i].inverted != steps[i - 1].inverted) {
        throw ValidationError("path: retraced pair at step " + std::to_string(i) + " (" + e.id +
                              "); words must be freely reduced");
      }
    }
    p.end_ = to;
  }
  p.steps_ = std::move(steps);
  return p;
}

PathWord PathWord::parse(const Graph& graph, std::span<const std::string> letters,
                         std::optional<std::size_t> start) {
  if (letters.empty()) {
    if (!start) throw ValidationError("path: empty word without a start vertex");
    return empty(graph, *start);
  }
  std::vector<PathStep> steps;
  for (const auto& letter : letters) {
    const bool inv = !letter.empty() && letter.front() == '-';
    steps.push_back(PathStep{graph.edge_index(inv ? letter.substr(1) : letter), inv});
  }
  PathWord p = make(graph, std::move(steps));
  if (start && *start != p.start_) throw ValidationError("path: word does not begin at the start vertex");
  return p;
}

void validate_surface(const Graph& graph, const Surface& surface) {
  if (surface.crossings.size() != graph.edge_count()) {
    throw ValidationError("surface '" + surface.id + "' has " +
                          std::to_string(surface.crossings.size()) + " crossing entries for " +
                          std::to_string(graph.edge_count()) + " edges");
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& c = surface.crossings[e];
    auto in_range = [](int s) { return s == -1 || s == 0 || s == 1; };
    if (!in_range(c.out) || !in_range(c.in)) {
      throw ValidationError("surface '" + surface.id + "': sigma values on edge '" +
                            graph.edges()[e].id + "' must lie in {-1, 0, 1}");
    }
    if (c.interior && (c.out != 0 || c.in != 0)) {
      throw ValidationError("surface '" + surface.id + "': edge '" + graph.edges()[e].id +
                            "' lies inside the surface and must have zero sigma values");
    }
  }
}

bool surfaces_disjoint(const Surface& a, const Surface& b) {
  const std::size_t n = std::min(a.crossings.size(), b.crossings.size());
  for (std::size_t e = 0; e < n; ++e)
    if (a.flags(e) && b.flags(e)) return false;
  return true;
}

HolonomyModel::HolonomyModel(Graph graph, FiniteGroup group, std::vector<Surface> surfaces)
    : graph_(std::move(graph)), group_(std::move(group)), surfaces_(std::move(surfaces)) {
  const std::size_t cap = dimension_cap();
  hilbert_dim_ = 1;
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    if (hilbert_dim_ > cap / group_.size()) {
      throw CapExceeded("Hilbert space dimension |G|^#edges = " + std::to_string(group_.size()) +
                        "^" + std::to_string(graph_.edge_count()) + " exceeds the cap " +
                        std::to_string(cap) + " (set BOHRIFY_CAP_DIM to override)");
    }
    hilbert_dim_ *= group_.size();
  }
  for (std::size_t i = 0; i < surfaces_.size(); ++i) {
    validate_surface(graph_, surfaces_[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (surfaces_[j].id == surfaces_[i].id) {
        throw ValidationError("duplicate surface id '" + surfaces_[i].id + "'");
      }
  }
}

const Surface& HolonomyModel::surface(std::string_view id) const {
  for (const auto& s : surfaces_)
    if (s.id == id) return s;
  throw ValidationError("unknown surface '" + std::string(id) + "'");
}

std::optional<std::size_t> HolonomyModel::find_surface_with_data(const Surface& s) const {
  for (std::size_t i = 0; i < surfaces_.size(); ++i)
    if (surfaces_[i].same_data(s)) return i;
  return std::nullopt;
}

std::size_t HolonomyModel::index_of(const Connection& c) const {
  if (c.values.size() != graph_.edge_count()) {
    throw DimensionError("connection has " + std::to_string(c.values.size()) + " entries for " +
                         std::to_string(graph_.edge_count()) + " edges");
  }
  std::size_t index = 0;
  for (GroupElement g : c.values) {
    if (g >= group_.size()) throw ValidationError("connection value out of group range");
    index = index * group_.size() + g;
  }
  return index;
}

Connection HolonomyModel::connection_at(std::size_t index) const {
  if (index >= hilbert_dim_) throw DimensionError("connection index out of range");
  Connection c;
  c.values.resize(graph_.edge_count());
  for (std::size_t e = graph_.edge_count(); e-- > 0;) {
    c.values[e] = index % group_.size();
    index /= group_.size();
  }
  return c;
}

void HolonomyModel::validate_field(const GroupField& field) const {
  if (field.values.size() != graph_.vertex_count()) {
    throw DimensionError("group-valued field has " + std::to_string(field.values.size()) +
                         " entries for " + std::to_string(graph_.vertex_count()) + " vertices");
  }
  for (GroupElement g : field.values)
    if (g >= group_.size()) throw ValidationError("group-valued field entry out of range");
}

GroupElement holonomy(const HolonomyModel& model, const Connection& connection,
                      const PathWord& path) {
  const auto& group = model.group();
  GroupElement h = group.identity();
  for (const auto& step : path.steps()) {
    const GroupElement g = connection.values.at(step.edge);
    h = group.multiply(h, step.inverted ? group.inverse(g) : g);
  }
  return h;
}

Connection restrict_connection(const Graph& graph, const Connection& connection,
                               const Graph& subgraph) {
  if (connection.values.size() != graph.edge_count()) {
    throw DimensionError("restrict_connection: connection does not match the graph");
  }
  Connection out;
  out.values.reserve(subgraph.edge_count());
  for (const auto& e : subgraph.edges()) {
    const auto idx = graph.find_edge(e.id);
    if (!idx) throw ValidationError("subgraph edge '" + e.id + "' is not in the graph");
    const Edge& big = graph.edges()[*idx];
    if (graph.vertices()[big.source] != subgraph.vertices()[e.source] ||
        graph.vertices()[big.target] != subgraph.vertices()[e.target]) {
      throw ValidationError("subgraph edge '" + e.id + "' has different endpoints in the graph");
    }
    out.values.push_back(connection.values[*idx]);
  }
  return out;
}

Connection theta_translate(const HolonomyModel& model, const Surface& surface,
                           const GroupField& d, const Connection& connection) {
  model.validate_field(d);
  if (surface.crossings.size() != model.graph().edge_count()) {
    throw ValidationError("surface '" + surface.id + "' does not match the model graph");
  }
  const auto& group = model.group();
  Connection out = connection;
  for (std::size_t e = 0; e < model.graph().edge_count(); ++e) {
    const auto& c = surface.crossings[e];
    if (c.interior) continue;
    const Edge& edge = model.graph().edges()[e];
    const GroupElement left = group.power(d.values[edge.source], c.out);
    const GroupElement right = group.power(d.values[edge.target], -c.in);
    out.values[e] = group.multiply(group.multiply(left, connection.values[e]), right);
  }
  return out;
}

ConnectionPermutation theta_permutation(const HolonomyModel& model, const Surface& surface,
                                        const GroupField& d) {
  ConnectionPermutation perm(model.hilbert_dim());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = model.index_of(theta_translate(model, surface, d, model.connection_at(i)));
  }
  return perm;
}

GroupField pointwise_product(const FiniteGroup& group, const GroupField& a, const GroupField& b) {
  if (a.values.size() != b.values.size()) throw DimensionError("field sizes differ");
  GroupField out;
  out.values.resize(a.values.size());
  for (std::size_t v = 0; v < a.values.size(); ++v)
    out.values[v] = group.multiply(a.values[v], b.values[v]);
  return out;
}

bool pointwise_commute(const FiniteGroup& group, const GroupField& a, const GroupField& b) {
  if (a.values.size() != b.values.size()) throw DimensionError("field sizes differ");
  for (std::size_t v = 0; v < a.values.size(); ++v)
    if (!group.commute(a.values[v], b.values[v])) return false;
  return true;
}

bool theta_compose_check(const HolonomyModel& model, const Surface& surface, const GroupField& d1,
                         const GroupField& d2) {
  const auto product = pointwise_product(model.group(), d1, d2);
  for (std::size_t i = 0; i < model.hilbert_dim(); ++i) {
    const Connection a = model.connection_at(i);
    const Connection lhs =
        theta_translate(model, surface, d2, theta_translate(model, surface, d1, a));
    if (lhs != theta_translate(model, surface, product, a)) return false;
  }
  return true;
}

FunctionTable pullback(const FunctionTable& f, const ConnectionPermutation& perm) {
  if (f.size() != perm.size()) throw DimensionError("pullback: table length mismatch");
  FunctionTable out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[perm[i]];
  return out;
}

bool is_permutation(const ConnectionPermutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

ConnectionPermutation inverse_permutation(const ConnectionPermutation& perm) {
  ConnectionPermutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv.at(perm[i]) = i;
  return inv;
}

ComplexMatrix config_operator(const HolonomyModel& model, const FunctionTable& f) {
  if (f.size() != model.hilbert_dim()) {
    throw DimensionError("configuration table has " + std::to_string(f.size()) +
                         " values for Hilbert dimension " + std::to_string(model.hilbert_dim()));
  }
  return ComplexMatrix::diagonal(f);
}

ComplexMatrix weyl_operator(const HolonomyModel& model, const Surface& surface,
                            const GroupField& d) {
  return ComplexMatrix::from_row_permutation(theta_permutation(model, surface, d));
}

ComplexMatrix weyl_operator(const HolonomyModel& model, std::string_view surface_id,
                            const GroupField& d) {
  return weyl_operator(model, model.surface(surface_id), d);
}

bool weyl_conjugation_check(const HolonomyModel& model, const Surface& surface,
                            const GroupField& d, const FunctionTable& f, double tol) {
  const auto w = weyl_operator(model, surface, d);
  const auto lhs = w * config_operator(model, f) * w.adjoint();
  const auto rhs = config_operator(model, pullback(f, theta_permutation(model, surface, d)));
  return approx_equal(lhs, rhs, tol);
}

StarAlgebra build_weyl_algebra(const HolonomyModel& model,
                               const std::vector<FunctionTable>& config_fns,
                               const std::vector<WeylSpec>& weyl_specs, double tol) {
  std::vector<ComplexMatrix> generators;
  for (const auto& f : config_fns) generators.push_back(config_operator(model, f));
  for (const auto& spec : weyl_specs)
    generators.push_back(weyl_operator(model, spec.surface, spec.field));
  return generate_star_algebra(generators, model.hilbert_dim(), tol);
}

}  // namespace bohrify
