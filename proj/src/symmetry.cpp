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
#include "bohrify/symmetry.hpp"

#include <algorithm>
#include <random>

#include "bohrify/error.hpp"

namespace bohrify {
namespace {

struct AutomorphismSearch {
  const Graph& graph;
  bool allow_flips;
  std::vector<std::optional<std::size_t>> vertex_image;
  std::vector<std::uint8_t> vertex_used;
  std::vector<std::size_t> edge_image;
  std::vector<std::uint8_t> flipped;
  std::vector<std::uint8_t> edge_used;
  std::vector<GraphAutomorphism> found;

  bool bind(std::size_t v, std::size_t image, std::vector<std::size_t>& bound) {
    if (vertex_image[v]) return *vertex_image[v] == image;
    if (vertex_used[image]) return false;
    vertex_image[v] = image;
    vertex_used[image] = 1;
    bound.push_back(v);
    return true;
  }

  void unbind(const std::vector<std::size_t>& bound) {
    for (std::size_t v : bound) {
      vertex_used[*vertex_image[v]] = 0;
      vertex_image[v].reset();
    }
  }

  void finish() {
    // Vertices without edges can only go to vertices without edges.
    std::vector<std::size_t> free_vertices;
    std::vector<std::size_t> free_images;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      if (!vertex_image[v]) free_vertices.push_back(v);
      if (!vertex_used[v]) free_images.push_back(v);
    }
    do {
      GraphAutomorphism phi;
      phi.vertex_image.resize(graph.vertex_count());
      for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        if (vertex_image[v]) phi.vertex_image[v] = *vertex_image[v];
      for (std::size_t i = 0; i < free_vertices.size(); ++i)
        phi.vertex_image[free_vertices[i]] = free_images[i];
      phi.edge_image = edge_image;
      phi.flipped = flipped;
      phi.label = "phi" + std::to_string(found.size());
      found.push_back(std::move(phi));
    } while (std::next_permutation(free_images.begin(), free_images.end()));
  }

  void run(std::size_t e) {
    if (e == graph.edge_count()) {
      finish();
      return;
    }
    const Edge& edge = graph.edges()[e];
    for (std::size_t target = 0; target < graph.edge_count(); ++target) {
      if (edge_used[target]) continue;
      const Edge& image = graph.edges()[target];
      for (int flip = 0; flip <= (allow_flips ? 1 : 0); ++flip) {
        const std::size_t s = flip ? image.target : image.source;
        const std::size_t t = flip ? image.source : image.target;
        std::vector<std::size_t> bound;
        if (bind(edge.source, s, bound) && bind(edge.target, t, bound)) {
          edge_used[target] = 1;
          edge_image[e] = target;
          flipped[e] = static_cast<std::uint8_t>(flip);
          run(e + 1);
          edge_used[target] = 0;
        }
        unbind(bound);
      }
    }
  }
};

GroupField conjugate_field(const FiniteGroup& group, const GroupField& g, const GroupField& d) {
  GroupField out = d;
  for (std::size_t v = 0; v < d.values.size(); ++v)
    out.values[v] = group.conjugate(g.values[v], d.values[v]);
  return out;
}

const char* kind_of(const Generator& g) {
  if (std::holds_alternative<ConfigurationTag>(g.tag)) return "configuration";
  if (std::holds_alternative<WeylTag>(g.tag)) return "weyl";
  return "untagged";
}

template <typename Transform, typename Conjugate>
InvarianceReport invariance_sweep(const ContextPoset& poset,
                                  const std::vector<std::string>& transform_labels,
                                  Transform&& image_of, Conjugate&& conjugate, double tol,
                                  Execution exec) {
  const std::size_t nc = poset.size();
  const std::size_t nt = transform_labels.size();
  const std::size_t ng = poset.generators().size();
  // Generator images once per transform, then every (context, transform) pair.
  std::vector<std::vector<ComplexMatrix>> images(nt);
  std::vector<std::size_t> mismatches(nt, 0);
  const auto tcount = static_cast<std::int64_t>(nt);
  auto image_pass = [&](std::int64_t t) {
    images[t].resize(ng);
    for (std::size_t k = 0; k < ng; ++k) {
      images[t][k] = image_of(t, poset.generators()[k]);
      if (!approx_equal(images[t][k], conjugate(t, poset.generators()[k].matrix), tol))
        ++mismatches[t];
    }
  };
  struct PairResult {
    bool in_poset = false;
    std::optional<InvarianceViolation> violation;
  };
  std::vector<PairResult> results(nc * nt);
  auto pair_pass = [&](std::int64_t idx) {
    const std::size_t c = static_cast<std::size_t>(idx) / nt;
    const std::size_t t = static_cast<std::size_t>(idx) % nt;
    const auto& ctx = poset.context(c);
    std::vector<ComplexMatrix> gens;
    for (std::size_t k : ctx.generators) gens.push_back(images[t][k]);
    for (std::size_t a = 0; a < gens.size() && !results[idx].violation; ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        if (!commutes(gens[a], gens[b], tol)) {
          results[idx].violation = InvarianceViolation{
              ctx.label, transform_labels[t], poset.generators()[ctx.generators[a]].label,
              poset.generators()[ctx.generators[b]].label};
          break;
        }
      }
    }
    const auto algebra = generate_star_algebra(gens, poset.ambient().ambient_dim(), tol);
    if (!results[idx].violation && !is_commutative_algebra(algebra, tol)) {
      results[idx].violation = InvarianceViolation{ctx.label, transform_labels[t], "-", "-"};
    }
    results[idx].in_poset = poset.find(algebra).has_value();
  };
  const auto pcount = static_cast<std::int64_t>(nc * nt);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < tcount; ++t) image_pass(t);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < pcount; ++i) pair_pass(i);
  } else {
    for (std::int64_t t = 0; t < tcount; ++t) image_pass(t);
    for (std::int64_t i = 0; i < pcount; ++i) pair_pass(i);
  }
  InvarianceReport r;
  r.checked = nc * nt;
  for (std::size_t m : mismatches) r.conjugation_mismatches += m;
  for (auto& res : results) {
    r.images_in_poset += res.in_poset;
    if (res.violation) r.violations.push_back(std::move(*res.violation));
  }
  return r;
}

}  // namespace

bool GraphAutomorphism::is_identity() const {
  for (std::size_t v = 0; v < vertex_image.size(); ++v)
    if (vertex_image[v] != v) return false;
  for (std::size_t e = 0; e < edge_image.size(); ++e)
    if (edge_image[e] != e || flipped[e]) return false;
  return true;
}

GraphAutomorphism identity_automorphism(const Graph& graph) {
  GraphAutomorphism phi;
  phi.label = "id";
  phi.vertex_image.resize(graph.vertex_count());
  phi.edge_image.resize(graph.edge_count());
  phi.flipped.assign(graph.edge_count(), 0);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) phi.vertex_image[v] = v;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) phi.edge_image[e] = e;
  return phi;
}

void validate_automorphism(const Graph& graph, const GraphAutomorphism& phi) {
  const std::string name = "automorphism '" + phi.label + "'";
  if (phi.vertex_image.size() != graph.vertex_count() ||
      phi.edge_image.size() != graph.edge_count() || phi.flipped.size() != graph.edge_count()) {
    throw ValidationError(name + ": maps do not cover the graph");
  }
  if (!is_permutation(phi.vertex_image)) throw ValidationError(name + ": vertex map is not a bijection");
  if (!is_permutation(phi.edge_image)) throw ValidationError(name + ": edge map is not a bijection");
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edges()[e];
    const Edge& image = graph.edges()[phi.edge_image[e]];
    const std::size_t s = phi.flipped[e] ? image.target : image.source;
    const std::size_t t = phi.flipped[e] ? image.source : image.target;
    if (phi.vertex_image[edge.source] != s || phi.vertex_image[edge.target] != t) {
      throw ValidationError(name + ": edge '" + edge.id + "' is not carried onto '" + image.id +
                            "' with matching endpoints");
    }
  }
}

GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b) {
  GraphAutomorphism out;
  out.label = a.label + "*" + b.label;
  out.vertex_image.resize(b.vertex_image.size());
  out.edge_image.resize(b.edge_image.size());
  out.flipped.resize(b.flipped.size());
  for (std::size_t v = 0; v < b.vertex_image.size(); ++v)
    out.vertex_image[v] = a.vertex_image[b.vertex_image[v]];
  for (std::size_t e = 0; e < b.edge_image.size(); ++e) {
    out.edge_image[e] = a.edge_image[b.edge_image[e]];
    out.flipped[e] = b.flipped[e] ^ a.flipped[b.edge_image[e]];
  }
  return out;
}

GraphAutomorphism inverse(const GraphAutomorphism& phi) {
  GraphAutomorphism out;
  out.label = phi.label + "^-1";
  out.vertex_image = inverse_permutation(phi.vertex_image);
  out.edge_image = inverse_permutation(phi.edge_image);
  out.flipped.resize(phi.flipped.size());
  for (std::size_t e = 0; e < phi.edge_image.size(); ++e)
    out.flipped[phi.edge_image[e]] = phi.flipped[e];
  return out;
}

std::vector<GraphAutomorphism> enumerate_automorphisms(const Graph& graph, bool allow_flips) {
  if (graph.edge_count() > kMaxAutomorphismEdges) {
    throw CapExceeded("automorphisms: graph has " + std::to_string(graph.edge_count()) +
                      " edges, cap is " + std::to_string(kMaxAutomorphismEdges));
  }
  AutomorphismSearch search{graph,
                            allow_flips,
                            std::vector<std::optional<std::size_t>>(graph.vertex_count()),
                            std::vector<std::uint8_t>(graph.vertex_count(), 0),
                            std::vector<std::size_t>(graph.edge_count(), 0),
                            std::vector<std::uint8_t>(graph.edge_count(), 0),
                            std::vector<std::uint8_t>(graph.edge_count(), 0),
                            {}};
  search.run(0);
  return search.found;
}

std::string describe_automorphism(const Graph& graph, const GraphAutomorphism& phi) {
  std::string out;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (v) out += ' ';
    out += graph.vertices()[v] + "->" + graph.vertices()[phi.vertex_image[v]];
  }
  out += " |";
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    out += ' ' + graph.edges()[e].id + "->" + (phi.flipped[e] ? "-" : "") +
           graph.edges()[phi.edge_image[e]].id;
  }
  return out;
}

ConnectionPermutation lift_to_connections(const HolonomyModel& model,
                                          const GraphAutomorphism& phi) {
  validate_automorphism(model.graph(), phi);
  const auto& group = model.group();
  ConnectionPermutation perm(model.hilbert_dim());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Connection a = model.connection_at(i);
    Connection image = a;
    for (std::size_t e = 0; e < a.values.size(); ++e) {
      image.values[phi.edge_image[e]] = phi.flipped[e] ? group.inverse(a.values[e]) : a.values[e];
    }
    perm[i] = model.index_of(image);
  }
  return perm;
}

ComplexMatrix alpha_operator(const HolonomyModel& model, const GraphAutomorphism& phi) {
  const auto lift = lift_to_connections(model, phi);
  return ComplexMatrix::from_row_permutation(inverse_permutation(lift));
}

Surface transport_surface(const HolonomyModel& model, const GraphAutomorphism& phi,
                          const Surface& surface) {
  validate_automorphism(model.graph(), phi);
  if (surface.crossings.size() != model.graph().edge_count()) {
    throw ValidationError("surface '" + surface.id + "' does not match the model graph");
  }
  Surface out;
  out.crossings.resize(surface.crossings.size());
  for (std::size_t e = 0; e < surface.crossings.size(); ++e) {
    EdgeCrossing c = surface.crossings[e];
    if (phi.flipped[e]) std::swap(c.out, c.in);
    out.crossings[phi.edge_image[e]] = c;
  }
  const auto match = model.find_surface_with_data(out);
  out.id = match ? model.surfaces()[*match].id : phi.label + "(" + surface.id + ")";
  return out;
}

GroupField transport_field(const GraphAutomorphism& phi, const GroupField& d) {
  GroupField out = d;
  for (std::size_t v = 0; v < d.values.size(); ++v) out.values[phi.vertex_image[v]] = d.values[v];
  return out;
}

bool intertwining_check(const HolonomyModel& model, const GraphAutomorphism& phi,
                        const Surface& surface, const GroupField& d) {
  const auto lift = lift_to_connections(model, phi);
  const auto lift_inv = inverse_permutation(lift);
  const auto theta = theta_permutation(model, surface, d);
  const auto moved = theta_permutation(model, transport_surface(model, phi, surface),
                                       transport_field(phi, d));
  for (std::size_t i = 0; i < lift.size(); ++i)
    if (moved[i] != lift[theta[lift_inv[i]]]) return false;
  return true;
}

bool weyl_alpha_commute(const HolonomyModel& model, const GraphAutomorphism& phi,
                        const Surface& surface, const GroupField& d, double tol) {
  const auto w = weyl_operator(model, surface, d);
  const auto alpha = alpha_operator(model, phi);
  return approx_equal(w * alpha, alpha * w, tol);
}

bool weyl_alpha_commutation_check(const HolonomyModel& model, const GraphAutomorphism& phi,
                                  const Surface& surface, const GroupField& d, double tol) {
  std::vector<std::string> failed;
  if (!transport_surface(model, phi, surface).same_data(surface)) {
    failed.push_back("phi(S) != S for surface '" + surface.id + "'");
  }
  if (transport_field(phi, d) != d) failed.push_back("d != d o phi^-1");
  if (!failed.empty()) {
    std::string msg = "weyl/alpha commutation: hypothesis failed:";
    for (const auto& f : failed) msg += " [" + f + "]";
    throw PreconditionError(msg);
  }
  return weyl_alpha_commute(model, phi, surface, d, tol);
}

ComplexMatrix apply_diffeo_to_generator(const HolonomyModel& model, const GraphAutomorphism& phi,
                                        const Generator& generator, ConfigurationAction action) {
  if (const auto* config = std::get_if<ConfigurationTag>(&generator.tag)) {
    const auto lift = lift_to_connections(model, phi);
    const auto& perm = action == ConfigurationAction::kConjugation ? inverse_permutation(lift)
                                                                   : lift;
    return config_operator(model, pullback(config->table, perm));
  }
  if (const auto* weyl = std::get_if<WeylTag>(&generator.tag)) {
    return weyl_operator(model, transport_surface(model, phi, weyl->surface),
                         transport_field(phi, weyl->field));
  }
  throw PreconditionError("generator '" + generator.label + "' carries no " + kind_of(generator) +
                          " tag; its image under a diffeomorphism is undefined");
}

InvarianceReport diffeomorphism_invariance(const HolonomyModel& model, const ContextPoset& poset,
                                           const std::vector<GraphAutomorphism>& automorphisms,
                                           double tol, Execution exec,
                                           ConfigurationAction action) {
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> alphas;
  std::vector<ComplexMatrix> alpha_invs;
  for (const auto& phi : automorphisms) {
    labels.push_back(phi.label);
    alphas.push_back(alpha_operator(model, phi));
    alpha_invs.push_back(alphas.back().adjoint());
  }
  return invariance_sweep(
      poset, labels,
      [&](std::int64_t t, const Generator& g) {
        return apply_diffeo_to_generator(model, automorphisms[t], g, action);
      },
      [&](std::int64_t t, const ComplexMatrix& m) { return alphas[t] * m * alpha_invs[t]; }, tol,
      exec);
}

Connection gauge_transform(const HolonomyModel& model, const GroupField& g,
                           const Connection& connection) {
  model.validate_field(g);
  const auto& group = model.group();
  Connection out = connection;
  for (std::size_t e = 0; e < model.graph().edge_count(); ++e) {
    const Edge& edge = model.graph().edges()[e];
    out.values[e] = group.multiply(
        group.multiply(group.inverse(g.values[edge.source]), connection.values[e]),
        g.values[edge.target]);
  }
  return out;
}

ConnectionPermutation gauge_permutation(const HolonomyModel& model, const GroupField& g) {
  ConnectionPermutation perm(model.hilbert_dim());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = model.index_of(gauge_transform(model, g, model.connection_at(i)));
  return perm;
}

ComplexMatrix gauge_unitary(const HolonomyModel& model, const GroupField& g) {
  return ComplexMatrix::from_row_permutation(gauge_permutation(model, g));
}

ComplexMatrix apply_gauge_to_generator(const HolonomyModel& model, const GroupField& g,
                                       const Generator& generator) {
  if (const auto* config = std::get_if<ConfigurationTag>(&generator.tag)) {
    return config_operator(model, pullback(config->table, gauge_permutation(model, g)));
  }
  if (const auto* weyl = std::get_if<WeylTag>(&generator.tag)) {
    return weyl_operator(model, weyl->surface, conjugate_field(model.group(), g, weyl->field));
  }
  throw PreconditionError("generator '" + generator.label + "' carries no " + kind_of(generator) +
                          " tag; its gauge image is undefined");
}

InvarianceReport gauge_invariance(const HolonomyModel& model, const ContextPoset& poset,
                                  const std::vector<GroupField>& gauges, double tol,
                                  Execution exec) {
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> us;
  std::vector<ComplexMatrix> u_invs;
  for (const auto& g : gauges) {
    labels.push_back(field_label(model, g));
    us.push_back(gauge_unitary(model, g));
    u_invs.push_back(us.back().adjoint());
  }
  return invariance_sweep(
      poset, labels,
      [&](std::int64_t t, const Generator& gen) {
        return apply_gauge_to_generator(model, gauges[t], gen);
      },
      [&](std::int64_t t, const ComplexMatrix& m) { return us[t] * m * u_invs[t]; }, tol, exec);
}

std::vector<GroupField> constant_gauges(const HolonomyModel& model) {
  std::vector<GroupField> out;
  for (GroupElement g = 0; g < model.group().size(); ++g) out.push_back(model.constant_field(g));
  return out;
}

std::vector<GroupField> random_gauges(const HolonomyModel& model, std::size_t count,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, model.group().size() - 1);
  std::vector<GroupField> out;
  for (std::size_t i = 0; i < count; ++i) {
    GroupField g = model.constant_field(0);
    for (auto& v : g.values) v = pick(rng);
    out.push_back(std::move(g));
  }
  return out;
}

std::string field_label(const HolonomyModel& model, const GroupField& g) {
  std::string out = "{";
  for (std::size_t v = 0; v < g.values.size(); ++v) {
    out += (v ? ", " : "") + model.graph().vertices()[v] + ":" + model.group().label(g.values[v]);
  }
  return out + "}";
}

}  // namespace bohrify
