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
#include "bohrify/context_poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bohrify/error.hpp"

namespace bohrify {
namespace {

std::string subset_label(const std::vector<Generator>& gens, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return "1";
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + gens[idx[i]].label;
  return s + "}";
}

// All cliques of the commutation graph, in lexicographic order of their
// sorted index lists; includes the empty set.
void enumerate_cliques(const std::vector<std::uint8_t>& commute, std::size_t n,
                       std::vector<std::size_t>& current,
                       std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  const std::size_t from = current.empty() ? 0 : current.back() + 1;
  for (std::size_t k = from; k < n; ++k) {
    bool ok = true;
    for (std::size_t j : current) ok = ok && commute[j * n + k];
    if (!ok) continue;
    current.push_back(k);
    enumerate_cliques(commute, n, current, out);
    current.pop_back();
  }
}

}  // namespace

Generator make_configuration_generator(const HolonomyModel& model, std::string label,
                                       FunctionTable table) {
  Generator g;
  g.label = std::move(label);
  g.matrix = config_operator(model, table);
  g.tag = ConfigurationTag{std::move(table)};
  return g;
}

Generator make_weyl_generator(const HolonomyModel& model, std::string label, Surface surface,
                              GroupField field) {
  Generator g;
  g.label = std::move(label);
  g.matrix = weyl_operator(model, surface, field);
  g.tag = WeylTag{std::move(surface), std::move(field)};
  return g;
}

ContextPoset ContextPoset::from_contexts(StarAlgebra ambient, std::vector<Generator> generators,
                                         std::vector<Context> contexts, double tol) {
  ContextPoset p;
  p.tol_ = tol;
  p.ambient_ = std::move(ambient);
  p.generators_ = std::move(generators);
  p.contexts_ = std::move(contexts);
  const std::size_t n = p.contexts_.size();
  if (n == 0 || p.contexts_[0].algebra.dim() != 1) {
    throw ValidationError("context poset: the first context must be the scalars span{I}");
  }
  const auto id = ComplexMatrix::identity(p.ambient_.ambient_dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = p.contexts_[i];
    if (c.algebra.ambient_dim() != p.ambient_.ambient_dim()) {
      throw DimensionError("context '" + c.label + "' lives in a different matrix dimension");
    }
    if (!is_commutative_algebra(c.algebra, tol)) {
      throw ValidationError("context '" + c.label + "' is not commutative");
    }
    if (!c.algebra.contains(id, tol)) throw ValidationError("context '" + c.label + "' is not unital");
    if (i > 0 && c.algebra.dim() == 1) {
      throw ValidationError("context poset: more than one context of dimension 1");
    }
  }
  p.order_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.order_[i * n + j] = i == j || subalgebra_leq(p.contexts_[i].algebra,
                                                     p.contexts_[j].algebra, tol);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq(0, i)) throw ValidationError("context poset: bottom is not below every context");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq(i, j) && p.leq(j, i)) {
        throw ValidationError("context poset: contexts '" + p.contexts_[i].label + "' and '" +
                              p.contexts_[j].label + "' span the same subspace");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) {
          throw NumericalError("context poset: inclusion order is not transitive");
        }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> ContextPoset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size() && covered; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::size_t> ContextPoset::find(const StarAlgebra& algebra) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (same_subspace(contexts_[i].algebra, algebra, tol_)) return i;
  return std::nullopt;
}

ContextPoset build_context_poset(StarAlgebra ambient, std::vector<Generator> generators,
                                 double tol, Execution exec) {
  const std::size_t n = generators.size();
  if (n > kMaxPosetGenerators) {
    throw CapExceeded("context poset: " + std::to_string(n) + " generators exceed the cap of " +
                      std::to_string(kMaxPosetGenerators));
  }
  std::vector<ComplexMatrix> mats;
  for (const auto& g : generators) {
    if (g.matrix.dim() != ambient.ambient_dim() || !ambient.contains(g.matrix, tol)) {
      throw ValidationError("generator '" + g.label + "' does not lie in the ambient algebra");
    }
    mats.push_back(g.matrix);
  }
  const auto commute = kernels::commutation_table(mats, tol, exec);

  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> current;
  enumerate_cliques(commute, n, current, cliques);

  std::vector<StarAlgebra> algebras(cliques.size());
  const auto count = static_cast<std::int64_t>(cliques.size());
  auto build = [&](std::int64_t c) {
    std::vector<ComplexMatrix> gens;
    for (std::size_t k : cliques[c]) gens.push_back(mats[k]);
    algebras[c] = generate_star_algebra(gens, ambient.ambient_dim(), tol);
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c) build(c);
  } else {
    for (std::int64_t c = 0; c < count; ++c) build(c);
  }

  // Deduplicate, keeping the first generating subset in enumeration order.
  std::vector<Context> contexts;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    bool seen = false;
    for (const auto& ctx : contexts)
      if (same_subspace(ctx.algebra, algebras[c], tol)) {
        seen = true;
        break;
      }
    if (!seen) {
      contexts.push_back(Context{std::move(algebras[c]), cliques[c], {}});
    }
  }
  std::stable_sort(contexts.begin(), contexts.end(), [](const Context& a, const Context& b) {
    return a.algebra.dim() < b.algebra.dim();
  });
  for (auto& ctx : contexts) ctx.label = subset_label(generators, ctx.generators);
  return ContextPoset::from_contexts(std::move(ambient), std::move(generators),
                                     std::move(contexts), tol);
}

AscendingChainReport ascending_chain_check(const ContextPoset& poset) {
  const std::size_t n = poset.size();
  // Longest strictly ascending chain starting at each context.
  std::vector<std::size_t> height(n, 1);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.context(a).algebra.dim() > poset.context(b).algebra.dim();
  });
  for (std::size_t i : order)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && poset.leq(i, j)) height[i] = std::max(height[i], height[j] + 1);

  AscendingChainReport r;
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (height[i] > height[start]) start = i;
  r.longest_chain.push_back(start);
  while (height[r.longest_chain.back()] > 1) {
    const std::size_t cur = r.longest_chain.back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != cur && poset.leq(cur, j) && height[j] + 1 == height[cur]) {
        r.longest_chain.push_back(j);
        break;
      }
    }
  }
  return r;
}

std::vector<MixedCandidate> mixed_context_search(
    const HolonomyModel& model, const Surface& surface, const GroupField& d,
    const std::vector<std::pair<std::string, FunctionTable>>& config_fns, double tol) {
  const auto perm = theta_permutation(model, surface, d);
  const auto w = ComplexMatrix::from_row_permutation(perm);
  std::vector<MixedCandidate> out;
  for (const auto& [label, f] : config_fns) {
    const FunctionTable moved = pullback(f, perm);
    double scale = 1.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      scale = std::max(scale, std::abs(f[i]));
      diff = std::max(diff, std::abs(moved[i] - f[i]));
    }
    MixedCandidate c;
    c.label = label;
    c.invariant = diff <= tol * scale;
    c.commutes = commutes(w, config_operator(model, f), tol);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bohrify
