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
#include "bohrify/verify.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <random>
#include <sstream>

#include "bohrify/error.hpp"
#include "bohrify/logic.hpp"
#include "bohrify/symmetry.hpp"

namespace bohrify {
namespace {

std::string sci(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(1) << x;
  return out.str();
}

std::string cplx(Complex z) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << "(" << z.real() << "," << z.imag() << ")";
  return out.str();
}

std::vector<GroupField> fields_of(const ModelSpec& spec) {
  std::vector<GroupField> out;
  auto add = [&](const GroupField& d) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  };
  for (const auto& w : spec.weyl) add(w.field);
  if (spec.chain) add(spec.chain->field);
  for (const auto& d : constant_gauges(spec.model)) add(d);
  return out;
}

FunctionTable random_table(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FunctionTable f(n);
  for (auto& x : f) {
    const double re = u(rng);
    x = Complex{re, u(rng)};
  }
  return f;
}

double residual(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

// One-step restriction masks along covering pairs of the context order.
std::vector<std::uint64_t> covering_masks(const ExternalSpectrum& sigma) {
  std::vector<std::uint64_t> out(sigma.size(), 0);
  for (const auto& [lower, upper] : sigma.poset().covering_pairs()) {
    for (std::size_t k = 0; k < sigma.characters(upper).size(); ++k) {
      const std::size_t p = sigma.point_index(upper, k);
      out[p] |= 1ULL << sigma.restrict_point(p, lower);
    }
  }
  return out;
}

PointSet from_mask(std::size_t n, std::uint64_t mask) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1ULL) s.set(i);
  return s;
}

PointSet random_subobject(const ExternalSpectrum& sigma, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  PointSet s = sigma.empty_set();
  for (std::size_t p = 0; p < sigma.size(); ++p)
    if (coin(rng)) s |= point_closure(sigma, p);
  return s;
}

}  // namespace

CriterionResult check_weyl_unitarity(const ModelSpec& spec) {
  CriterionResult r{"weyl-unitarity"};
  const auto& model = spec.model;
  const auto id = ComplexMatrix::identity(model.hilbert_dim());
  double worst = 0.0;
  std::size_t count = 0;
  auto check = [&](const std::string& what, const Surface& s, const GroupField& d) {
    const auto w = weyl_operator(model, s, d);
    const double res = std::max(residual(w.adjoint() * w, id), residual(w * w.adjoint(), id));
    worst = std::max(worst, res);
    ++count;
    if (res > kResidualBound) r.fail("not unitary: " + what + " residual " + sci(res));
  };
  for (const auto& w : spec.weyl) check(w.name, model.surface(w.surface), w.field);
  for (const auto& s : model.surfaces())
    for (const auto& d : fields_of(spec)) check(s.id + " " + field_label(model, d), s, d);
  if (count == 0) r.applicable = false;
  r.lines.push_back(std::to_string(count) + " Weyl operators, max |W*W - I|, |WW* - I| = " +
                    sci(worst));
  return r;
}

CriterionResult check_weyl_conjugation(const ModelSpec& spec, std::uint64_t seed) {
  CriterionResult r{"weyl-conjugation"};
  const auto& model = spec.model;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& w : spec.weyl) {
    const auto& s = model.surface(w.surface);
    const auto op = weyl_operator(model, s, w.field);
    const auto perm = theta_permutation(model, s, w.field);
    for (std::size_t i = 0; i < kRandomConfigurations; ++i) {
      const auto f = random_table(model.hilbert_dim(), rng);
      const double res =
          residual(op * config_operator(model, f) * op.adjoint(), config_operator(model, pullback(f, perm)));
      worst = std::max(worst, res);
      ++count;
      if (res > kResidualBound) r.fail(w.name + ": conjugation residual " + sci(res));
    }
  }
  if (count == 0) r.applicable = false;
  r.lines.push_back(std::to_string(count) + " random configurations (seed " +
                    std::to_string(seed) + "), max residual " + sci(worst));
  return r;
}

CriterionResult check_flow_composition(const ModelSpec& spec) {
  CriterionResult r{"flow-composition"};
  const auto& model = spec.model;
  const auto& group = model.group();
  const auto fields = fields_of(spec);
  std::size_t commuting = 0;
  std::size_t other = 0;
  std::size_t other_failing = 0;
  double worst = 0.0;
  for (const auto& s : model.surfaces()) {
    for (const auto& d1 : fields) {
      for (const auto& d2 : fields) {
        const bool law = theta_compose_check(model, s, d1, d2);
        if (!pointwise_commute(group, d1, d2)) {
          ++other;
          other_failing += !law;
          continue;
        }
        ++commuting;
        const auto w1 = weyl_operator(model, s, d1);
        const auto w2 = weyl_operator(model, s, d2);
        const auto w12 = weyl_operator(model, s, pointwise_product(group, d1, d2));
        const double res = std::max(residual(w1 * w2, w12), residual(w2 * w1, w12));
        worst = std::max(worst, res);
        if (res > kResidualBound || !law) {
          r.fail(s.id + " " + field_label(model, d1) + " " + field_label(model, d2) +
                 ": composition fails");
        }
      }
    }
  }
  if (commuting == 0) r.applicable = false;
  r.lines.push_back(std::to_string(commuting) + " commuting field pairs, max |w1 w2 - w12| = " +
                    sci(worst) + ", translation law exhaustive");
  r.lines.push_back(std::to_string(other) + " non-commuting pairs (not covered), " +
                    std::to_string(other_failing) + " break the translation law");
  return r;
}

CriterionResult check_mixed_context(const ModelSpec& spec, std::uint64_t seed) {
  CriterionResult r{"mixed-context"};
  const auto& model = spec.model;
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::size_t invariant = 0;
  std::size_t controls = 0;
  for (const auto& w : spec.weyl) {
    const auto& s = model.surface(w.surface);
    const auto perm = theta_permutation(model, s, w.field);
    std::vector<std::pair<std::string, FunctionTable>> candidates;
    for (const auto& c : spec.configurations) candidates.emplace_back(c.name, c.table);
    // Indicators of translation orbits are invariant by construction.
    std::vector<std::uint8_t> seen(perm.size(), 0);
    std::size_t orbit = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      FunctionTable f(perm.size(), 0.0);
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = 1;
        f[j] = 1.0;
      }
      candidates.emplace_back("orbit" + std::to_string(orbit++), std::move(f));
    }
    for (std::size_t i = 0; i < 10; ++i)
      candidates.emplace_back("random" + std::to_string(i), random_table(perm.size(), rng));
    for (const auto& c : mixed_context_search(model, s, w.field, candidates, spec.tolerance)) {
      if (c.invariant) {
        ++invariant;
        if (!c.commutes) r.fail(w.name + "/" + c.label + ": invariant but does not commute");
      } else {
        ++controls;
        if (c.commutes) r.fail(w.name + "/" + c.label + ": not invariant yet commutes");
      }
    }
  }
  if (spec.weyl.empty()) r.applicable = false;
  if (r.applicable && controls == 0) r.fail("no non-invariant configuration among the candidates");
  r.lines.push_back(std::to_string(invariant) + " invariant configurations commute, " +
                    std::to_string(controls) + " non-invariant controls fail to commute");
  return r;
}

CriterionResult check_closed_open_duality(const ExternalSpectrum& sigma, std::uint64_t seed,
                                          Execution exec) {
  CriterionResult r{"closed-open-duality"};
  const std::size_t n = sigma.size();
  const bool exhaustive = sigma.poset().size() <= kDualityContextLimit && n <= kExhaustivePointLimit;
  if (exhaustive) {
    const auto [below, above] = duality_masks(sigma);
    const auto sweep = kernels::closed_open_duality(below, above, exec);
    std::uint64_t library_closed = 0;
    std::uint64_t library_mismatch = 0;
    for (std::uint64_t f = 0; f < sweep.families; ++f) {
      const PointSet s = from_mask(n, f);
      const bool closed = is_closed(sigma, s);
      library_closed += closed;
      library_mismatch += closed != is_open(sigma, ~s);
    }
    r.lines.push_back("exhaustive over " + std::to_string(sweep.families) + " families: " +
                      std::to_string(sweep.closed) + " closed, " +
                      std::to_string(sweep.open_complements) + " open complements");
    if (sweep.mismatches != 0 || library_mismatch != 0 || library_closed != sweep.closed) {
      r.fail("closed and open-complement disagree (kernel " + std::to_string(sweep.mismatches) +
             ", direct " + std::to_string(library_mismatch) + ")");
    }
    return r;
  }
  std::mt19937_64 rng(seed ^ 0xd0a1ULL);
  std::bernoulli_distribution coin(0.5);
  std::size_t mismatch = 0;
  std::size_t closed = 0;
  for (std::size_t i = 0; i < kSampledFamilies; ++i) {
    PointSet s = sigma.empty_set();
    if (i % 2 == 0) {
      for (std::size_t p = 0; p < n; ++p)
        if (coin(rng)) s.set(p);
    } else {
      // Unions of closures, so closed families are well represented.
      for (std::size_t p = 0; p < n; ++p)
        if (coin(rng) && coin(rng) && coin(rng)) s |= point_closure(sigma, p);
    }
    const bool c = is_closed(sigma, s);
    closed += c;
    mismatch += c != is_open(sigma, ~s);
  }
  r.lines.push_back("sampled (" + std::to_string(sigma.poset().size()) + " contexts, " +
                    std::to_string(n) + " points): " + std::to_string(kSampledFamilies) +
                    " families, " + std::to_string(closed) + " closed");
  if (mismatch != 0) r.fail(std::to_string(mismatch) + " sampled families disagree");
  return r;
}

PointSet brute_force_closure(const ExternalSpectrum& sigma, std::size_t p) {
  const std::size_t n = sigma.size();
  const auto step = covering_masks(sigma);
  if (n <= kExhaustivePointLimit) {
    std::uint64_t best = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    for (std::uint64_t f = 0; f < (1ULL << n); ++f) {
      if (!(f >> p & 1ULL)) continue;
      bool closed = true;
      for (std::uint64_t rest = f; rest != 0 && closed; rest &= rest - 1)
        if (step[std::countr_zero(rest)] & ~f) closed = false;
      if (closed) best &= f;
    }
    return from_mask(n, best);
  }
  std::uint64_t s = 1ULL << p;
  for (;;) {
    std::uint64_t next = s;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) next |= step[std::countr_zero(rest)];
    if (next == s) break;
    s = next;
  }
  return from_mask(n, s);
}

CriterionResult check_point_closure(const ExternalSpectrum& sigma) {
  CriterionResult r{"point-closure"};
  if (sigma.size() > 64) throw CapExceeded("point closure check: more than 64 points");
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const auto formula = point_closure(sigma, p);
    const auto brute = brute_force_closure(sigma, p);
    if (formula != brute) {
      r.fail(sigma.point_label(p) + ": formula " + sigma.describe(formula) + " vs search " +
             sigma.describe(brute));
    }
  }
  r.lines.push_back(std::to_string(sigma.size()) + " points, closure by " +
                    (sigma.size() <= kExhaustivePointLimit ? "exhaustive search" : "saturation"));
  return r;
}

CriterionResult check_finite_sobriety(const ExternalSpectrum& sigma, std::uint64_t cap) {
  CriterionResult r{"finite-sobriety"};
  const auto report = sobriety_check(sigma, false, cap);
  const auto acc = ascending_chain_check(sigma.poset());
  r.lines.push_back("sober: " + std::string(report.sober ? "true" : "false") + ", " +
                    std::to_string(report.irreducible_sets.size()) + " witnesses, " +
                    std::to_string(report.candidates_visited) + " candidates");
  r.lines.push_back("ascending chain condition holds, longest chain length " +
                    std::to_string(acc.longest_chain.size()));
  if (!report.sober) {
    r.fail("irreducible closed set without a unique witness: " +
           sigma.describe(report.irreducible_sets[*report.counterexample].set));
  }
  if (report.irreducible_sets.size() != sigma.size()) {
    r.fail("expected one irreducible closed set per point, found " +
           std::to_string(report.irreducible_sets.size()));
  }
  return r;
}

CriterionResult check_nonsober_chain(const ModelSpec& spec) {
  CriterionResult r{"nonsober-chain"};
  if (!spec.chain || spec.chain->surfaces.size() < 2) {
    r.applicable = false;
    return r;
  }
  const auto& model = spec.model;
  std::vector<Surface> all;
  for (const auto& id : spec.chain->surfaces) all.push_back(model.surface(id));
  const std::size_t deepest = std::min(kMaxChainDepth, all.size());
  for (std::size_t n = 2; n <= deepest; ++n) {
    const std::vector<Surface> surfaces(all.begin(), all.begin() + n);
    const auto report = nonsober_chain(model, surfaces, spec.chain->field, spec.chain->phases,
                                       spec.tolerance);
    std::string dims;
    for (std::size_t i = 1; i < report.dims.size(); ++i) dims += (i > 1 ? ", " : "") + std::to_string(report.dims[i]);
    r.lines.push_back("depth " + std::to_string(n) + ": dims (" + dims + ")" +
                      (report.strictly_ascending ? " strictly ascending" : " NOT ascending"));
    if (!report.strictly_ascending) {
      r.fail("depth " + std::to_string(n) + ": chain does not grow");
      continue;
    }
    for (const auto& step : report.steps) {
      const bool ok = step.closed && step.irreducible && step.witnesses.size() == 1 &&
                      step.witness_is_top && step.witness_escapes;
      std::string line = "  X*_" + std::to_string(step.depth) + ": closed " +
                         (step.closed ? "yes" : "no") + ", irreducible " +
                         (step.irreducible ? "yes" : "no") + ", witnesses " +
                         std::to_string(step.witnesses.size()) + ", top " +
                         (step.witness_is_top ? "yes" : "no") + ", escapes " +
                         (step.witness_escapes ? "yes" : "no") + ", phase " +
                         cplx(step.requested) + " -> " + cplx(step.realized);
      if (ok) {
        r.lines.push_back(line);
      } else {
        r.fail(line);
      }
    }
    if (!report.distinct_witnesses) r.fail("depth " + std::to_string(n) + ": witnesses repeat");
  }
  return r;
}

CriterionResult check_diffeomorphism_invariance(const ModelSpec& spec, const ContextPoset& poset,
                                                Execution exec) {
  CriterionResult r{"diffeomorphism-invariance"};
  const auto& model = spec.model;
  const auto group = enumerate_automorphisms(model.graph(), true);
  const auto report = diffeomorphism_invariance(model, poset, group, spec.tolerance, exec);
  std::size_t intertwined = 0;
  for (const auto& phi : group)
    for (const auto& s : model.surfaces())
      for (const auto& d : fields_of(spec)) {
        ++intertwined;
        if (!intertwining_check(model, phi, s, d)) {
          r.fail(phi.label + " " + s.id + " " + field_label(model, d) + ": intertwining fails");
        }
      }
  r.lines.push_back(std::to_string(group.size()) + " automorphisms x " +
                    std::to_string(poset.size()) + " contexts: " +
                    std::to_string(report.violations.size()) + " violations, " +
                    std::to_string(report.images_in_poset) + "/" + std::to_string(report.checked) +
                    " images among the contexts");
  r.lines.push_back(std::to_string(intertwined) + " intertwining identities checked exhaustively");
  for (const auto& v : report.violations)
    r.fail(v.context + " under " + v.transform + ": " + v.first + " and " + v.second + " do not commute");
  if (report.conjugation_mismatches != 0) {
    r.fail(std::to_string(report.conjugation_mismatches) +
           " generator images differ from conjugation by alpha");
  }
  return r;
}

CriterionResult check_gauge_invariance(const ModelSpec& spec, const ContextPoset& poset,
                                       std::uint64_t seed, Execution exec) {
  CriterionResult r{"gauge-invariance"};
  const auto& model = spec.model;
  auto gauges = constant_gauges(model);
  const auto random = random_gauges(model, kRandomGauges, seed);
  gauges.insert(gauges.end(), random.begin(), random.end());
  const auto report = gauge_invariance(model, poset, gauges, spec.tolerance, exec);
  r.lines.push_back(std::to_string(model.group().size()) + " constant + " +
                    std::to_string(kRandomGauges) + " random gauges (seed " +
                    std::to_string(seed) + ") x " + std::to_string(poset.size()) +
                    " contexts: " + std::to_string(report.violations.size()) + " violations, " +
                    std::to_string(report.images_in_poset) + "/" + std::to_string(report.checked) +
                    " images among the contexts");
  for (const auto& v : report.violations)
    r.fail(v.context + " under " + v.transform + ": " + v.first + " and " + v.second + " do not commute");
  if (report.conjugation_mismatches != 0) {
    r.fail(std::to_string(report.conjugation_mismatches) +
           " generator images differ from conjugation by the gauge unitary");
  }
  return r;
}

CriterionResult check_quantum_logic(const ModelSpec& spec, const ExternalSpectrum& sigma,
                                    std::uint64_t seed) {
  CriterionResult r{"quantum-logic"};
  const auto& poset = sigma.poset();
  const double tol = spec.tolerance;
  std::size_t pairs = 0;
  std::size_t fixed = 0;
  for (std::size_t c = 0; c < poset.size(); ++c) {
    const auto& algebra = poset.context(c).algebra;
    const auto lattice = projection_lattice(algebra, c, tol);
    std::vector<boost::dynamic_bitset<>> images;
    for (const auto& p : lattice.projections)
      images.push_back(alpha_iso(p, algebra, sigma.characters(c), tol));
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        ++pairs;
        if (lattice.dominates(j, i) != images[i].is_subset_of(images[j])) {
          r.fail(poset.context(c).label + ": alpha is not an order isomorphism");
        }
      }
      if (!approx_equal(daseinise(lattice.projections[i], algebra, tol), lattice.projections[i], tol)) {
        r.fail(poset.context(c).label + ": daseinisation moves a projection of the context");
      }
      ++fixed;
    }
  }
  r.lines.push_back(std::to_string(pairs) + " projection pairs order-isomorphic under alpha, " +
                    std::to_string(fixed) + " context projections fixed by daseinisation");

  std::mt19937_64 rng(seed ^ 0x10a1cULL);
  std::size_t distributive = 0;
  std::size_t adjunction = 0;
  for (std::size_t i = 0; i < kLogicTriples; ++i) {
    const auto x = random_subobject(sigma, rng);
    const auto y = random_subobject(sigma, rng);
    const auto z = random_subobject(sigma, rng);
    if (meet(x, join(y, z)) == join(meet(x, y), meet(x, z))) {
      ++distributive;
    } else {
      r.fail("distributivity fails on " + sigma.describe(x));
    }
    if (leq(x, implies(sigma, y, z)) == leq(meet(x, y), z)) {
      ++adjunction;
    } else {
      r.fail("Heyting adjunction fails on " + sigma.describe(x));
    }
  }
  r.lines.push_back(std::to_string(distributive) + "/" + std::to_string(kLogicTriples) +
                    " triples distributive, " + std::to_string(adjunction) + "/" +
                    std::to_string(kLogicTriples) + " satisfy the Heyting adjunction");

  std::vector<std::pair<std::string, ComplexMatrix>> props;
  for (const auto& p : spec.projections) props.emplace_back(p.name, p.matrix);
  std::size_t em_failures = 0;
  for (const auto& res : excluded_middle_search(sigma, props, tol)) {
    em_failures += !res.excluded_middle;
    r.lines.push_back("  " + res.label + ": x or not x " +
                      (res.excluded_middle ? "= top" : "!= top") + "; not not x <= x: " +
                      (res.double_negation ? "yes" : "no"));
  }
  if (poset.size() == 3 && spec.model.group().size() == 2 && em_failures == 0) {
    r.fail("no daseinised projection violates excluded middle on the three-context poset");
  }
  return r;
}

std::vector<CriterionResult> verify_model(const ModelSpec& spec, const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(check_weyl_unitarity(spec));
  out.push_back(check_weyl_conjugation(spec, options.seed));
  out.push_back(check_flow_composition(spec));
  out.push_back(check_mixed_context(spec, options.seed));
  const auto poset = model_poset(spec, options.exec);
  const ExternalSpectrum sigma(poset, options.exec);
  out.push_back(check_closed_open_duality(sigma, options.seed, options.exec));
  out.push_back(check_point_closure(sigma));
  out.push_back(check_finite_sobriety(sigma, spec.sobriety_cap));
  out.push_back(check_nonsober_chain(spec));
  out.push_back(check_diffeomorphism_invariance(spec, poset, options.exec));
  out.push_back(check_gauge_invariance(spec, poset, options.seed, options.exec));
  out.push_back(check_quantum_logic(spec, sigma, options.seed));
  return out;
}

namespace {

struct Pass {
  std::string text;
  std::vector<std::string> anchors;
  std::vector<std::size_t> applicable;
  std::vector<std::size_t> failed;
};

Pass run_pass(const std::vector<ModelSpec>& specs, std::uint64_t seed, Execution exec) {
  Pass pass;
  std::ostringstream out;
  for (const auto& spec : specs) {
    out << "fixture " << spec.name << " sha256:" << spec.digest << "\n";
    const auto results = verify_model(spec, {seed, exec});
    if (pass.anchors.empty()) {
      for (const auto& res : results) {
        pass.anchors.push_back(res.anchor);
        pass.applicable.push_back(0);
        pass.failed.push_back(0);
      }
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& res = results[i];
      out << "  " << res.anchor << ": " << res.verdict() << "\n";
      for (const auto& line : res.lines) out << "    " << line << "\n";
      if (res.applicable) {
        ++pass.applicable[i];
        if (!res.passed) ++pass.failed[i];
      }
    }
  }
  pass.text = out.str();
  return pass;
}

}  // namespace

VerifyAllResult verify_all(const std::vector<ModelSpec>& specs, std::uint64_t seed) {
  VerifyAllResult result;
  const Pass parallel = run_pass(specs, seed, Execution::kParallel);
  const Pass serial = run_pass(specs, seed, Execution::kSerial);
  std::ostringstream out;
  out << parallel.text << "summary\n";
  result.fixtures = specs.size();
  for (std::size_t i = 0; i < parallel.anchors.size(); ++i) {
    CriterionSummary c{parallel.anchors[i], true, parallel.applicable[i], parallel.failed[i]};
    c.passed = c.applicable > 0 && c.failed == 0;
    out << "  " << c.anchor << ": "
        << (c.applicable == 0 ? "FAIL (no applicable fixture)" : c.passed ? "pass" : "FAIL") << "\n";
    result.passed = result.passed && c.passed;
    result.summary.push_back(std::move(c));
  }
  const bool same = parallel.text == serial.text;
  out << "  determinism: " << (same ? "pass" : "FAIL")
      << " (parallel and serial passes byte-identical)\n";
  result.summary.push_back({"determinism", same, specs.size(), same ? 0u : 1u});
  result.passed = result.passed && same;
  result.report = out.str();
  return result;
}

}  // namespace bohrify
