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
#include "bohrify/commands.hpp"

#include <algorithm>
#include <sstream>

#include "bohrify/dot.hpp"
#include "bohrify/error.hpp"
#include "bohrify/logic.hpp"
#include "bohrify/symmetry.hpp"
#include "bohrify/verify.hpp"

namespace bohrify {
namespace {

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

std::string header(std::string_view command, const ModelSpec& spec) {
  std::ostringstream out;
  out << "bohrify report\ncommand: " << command << "\nmodel: " << spec.name
      << "\ndigest: sha256:" << spec.digest << "\ngroup: " << spec.model.group().name()
      << "\nhilbert dimension: " << spec.model.hilbert_dim() << "\ntolerance: " << spec.tolerance
      << "\n";
  return out.str();
}

std::string context_line(const ContextPoset& poset, std::size_t c) {
  const auto& ctx = poset.context(c);
  return "c" + std::to_string(c) + " " + ctx.label + " dim " + std::to_string(ctx.algebra.dim());
}

CommandOutput contexts_command(const ModelSpec& spec) {
  CommandOutput out;
  std::ostringstream r;
  const auto poset = model_poset(spec);
  r << "ambient dimension: " << poset.ambient().dim() << "\ncontexts: " << poset.size() << "\n";
  for (std::size_t c = 0; c < poset.size(); ++c) r << "  " << context_line(poset, c) << "\n";
  const auto cover = poset.covering_pairs();
  r << "covering pairs: " << cover.size() << "\n";
  for (const auto& [a, b] : cover) r << "  c" << a << " < c" << b << "\n";
  const auto acc = ascending_chain_check(poset);
  r << "longest chain:";
  for (std::size_t c : acc.longest_chain) r << " c" << c;
  r << "\nascending-chain: " << verdict(acc.satisfies_acc) << " (finite poset, chain length "
    << acc.longest_chain.size() << ")\n";
  out.report = r.str();
  out.dot_files.emplace_back("contexts.dot", contexts_dot(poset));
  return out;
}

CommandOutput spectrum_command(const ModelSpec& spec) {
  CommandOutput out;
  std::ostringstream r;
  const auto poset = model_poset(spec);
  const ExternalSpectrum sigma(poset);
  r << "contexts: " << poset.size() << "\npoints: " << sigma.size() << "\n";
  for (std::size_t p = 0; p < sigma.size(); ++p) r << "  p" << p << " " << sigma.point_label(p) << "\n";
  const auto arrows = sigma.arrows();
  const bool composes = sigma.composition_closed();
  r << "restriction arrows: " << arrows.size() << " non-identity\n";
  r << "external-spectrum: " << verdict(composes) << " (restriction composes)\n";
  bool closures_ok = composes;
  r << "point closures:\n";
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const auto formula = point_closure(sigma, p);
    const bool ok = formula == brute_force_closure(sigma, p) && is_closed(sigma, formula) &&
                    is_irreducible(sigma, formula);
    closures_ok = closures_ok && ok;
    r << "  p" << p << " " << sigma.describe(formula) << (ok ? "" : " MISMATCH") << "\n";
    out.dot_files.emplace_back("closure_p" + std::to_string(p) + ".dot",
                               spectrum_dot(sigma, DotCluster{"closure of " + sigma.point_label(p), formula}));
  }
  r << "point-closure: " << verdict(closures_ok) << "\n";
  out.report = r.str();
  out.exit_code = closures_ok ? 0 : 1;
  out.dot_files.insert(out.dot_files.begin(), {"spectrum.dot", spectrum_dot(sigma)});
  return out;
}

CommandOutput sobriety_command(const ModelSpec& spec, const CommandOptions& options) {
  CommandOutput out;
  std::ostringstream r;
  const auto poset = model_poset(spec);
  const ExternalSpectrum sigma(poset);
  const auto report = sobriety_check(sigma, options.partial, spec.sobriety_cap);
  r << "mode: " << (report.partial ? "partial (closures of antichains of size <= 2)" : "exhaustive")
    << "\ncandidates visited: " << report.candidates_visited << "\n";
  r << "irreducible closed sets: " << report.irreducible_sets.size() << "\n";
  for (const auto& w : report.irreducible_sets) {
    r << "  " << sigma.describe(w.set) << " <- ";
    if (w.witnesses.empty()) r << "no witness";
    for (std::size_t i = 0; i < w.witnesses.size(); ++i)
      r << (i ? ", " : "") << sigma.point_label(w.witnesses[i]);
    r << "\n";
  }
  r << "sober: " << (report.sober ? "true" : "false") << ", " << report.irreducible_sets.size()
    << " witnesses" << (report.partial ? " (partial)" : "") << "\n";
  r << "finite-sobriety: " << verdict(report.sober) << "\n";
  out.report = r.str();
  out.exit_code = report.sober ? 0 : 1;
  return out;
}

CommandOutput chain_command(const ModelSpec& spec, const CommandOptions& options) {
  if (!spec.chain) throw ValidationError("chain: the model declares no chain");
  const std::size_t available = spec.chain->surfaces.size();
  const std::size_t depth = options.depth.value_or(available);
  if (depth > available) {
    throw ValidationError("chain: depth " + std::to_string(depth) + " exceeds the " +
                          std::to_string(available) + " chain surfaces");
  }
  std::vector<Surface> surfaces;
  for (std::size_t i = 0; i < depth; ++i) surfaces.push_back(spec.model.surface(spec.chain->surfaces[i]));
  const auto report =
      nonsober_chain(spec.model, surfaces, spec.chain->field, spec.chain->phases, spec.tolerance);
  CommandOutput out;
  std::ostringstream r;
  r << "depth: " << depth << "\ndims:";
  for (std::size_t i = 0; i < report.dims.size(); ++i) r << " V" << i << "=" << report.dims[i];
  r << "\nstrictly ascending: " << (report.strictly_ascending ? "yes" : "no") << "\n";
  if (report.strictly_ascending) {
    const ExternalSpectrum sigma(report.poset);
    for (const auto& step : report.steps) {
      r << "X*_" << step.depth << " = " << sigma.describe(step.truncated) << "\n";
      r << "  phase requested (" << step.requested.real() << "," << step.requested.imag()
        << ") realized (" << step.realized.real() << "," << step.realized.imag() << ") from {";
      for (std::size_t i = 0; i < step.available.size(); ++i)
        r << (i ? ", " : "") << "(" << step.available[i].real() << "," << step.available[i].imag() << ")";
      r << "}\n  closed " << (step.closed ? "yes" : "no") << ", irreducible "
        << (step.irreducible ? "yes" : "no") << ", witnesses " << step.witnesses.size();
      if (!step.witnesses.empty()) r << " (" << sigma.point_label(step.witnesses[0]) << ")";
      r << ", witness is chain top " << (step.witness_is_top ? "yes" : "no")
        << ", escapes earlier truncations " << (step.witness_escapes ? "yes" : "no") << "\n";
    }
    r << "distinct witnesses: " << (report.distinct_witnesses ? "yes" : "no") << "\n";
    out.dot_files.emplace_back(
        "chain.dot", spectrum_dot(sigma, DotCluster{"X*_" + std::to_string(depth),
                                                    report.steps.back().truncated}));
  }
  r << "nonsober-chain: " << verdict(report.passed()) << "\n";
  out.report = r.str();
  out.exit_code = report.passed() ? 0 : 1;
  return out;
}

CommandOutput invariance_command(const ModelSpec& spec, const CommandOptions& options) {
  const bool both = !options.diffeo && !options.gauge;
  const auto poset = model_poset(spec);
  const auto& model = spec.model;
  CommandOutput out;
  std::ostringstream r;
  bool ok = true;
  if (both || options.diffeo) {
    const auto report = diffeomorphism_invariance(model, poset, spec.automorphisms, spec.tolerance);
    r << "automorphisms: " << spec.automorphisms.size() << "\n";
    std::size_t intertwining_failures = 0;
    for (const auto& phi : spec.automorphisms) {
      r << "  " << phi.label << ": " << describe_automorphism(model.graph(), phi) << "\n";
      for (const auto& s : model.surfaces())
        for (const auto& w : spec.weyl)
          intertwining_failures += !intertwining_check(model, phi, s, w.field);
    }
    for (const auto& phi : spec.automorphisms) {
      for (const auto& w : spec.weyl) {
        const auto& s = model.surface(w.surface);
        try {
          const bool c = weyl_alpha_commutation_check(model, phi, s, w.field, spec.tolerance);
          r << "  alpha(" << phi.label << ") with " << w.name << ": "
            << (c ? "commutes" : "DOES NOT COMMUTE") << "\n";
          ok = ok && c;
        } catch (const PreconditionError&) {
          r << "  alpha(" << phi.label << ") with " << w.name << ": hypotheses not met\n";
        }
      }
    }
    r << "image algebras: " << report.checked << " checked, " << report.images_in_poset
      << " among the contexts, " << report.violations.size() << " non-commutative\n";
    for (const auto& v : report.violations)
      r << "  violation: " << v.context << " under " << v.transform << " (" << v.first << ", "
        << v.second << ")\n";
    const bool pass = report.passed() && intertwining_failures == 0;
    r << "intertwining failures: " << intertwining_failures << "\n";
    r << "diffeomorphism-invariance: " << verdict(pass) << "\n";
    ok = ok && pass;
  }
  if (both || options.gauge) {
    const auto gauges = spec.gauge_fields(options.seed);
    const auto report = gauge_invariance(model, poset, gauges, spec.tolerance);
    r << "gauges: " << gauges.size() << "\n";
    r << "image algebras: " << report.checked << " checked, " << report.images_in_poset
      << " among the contexts, " << report.violations.size() << " non-commutative\n";
    for (const auto& v : report.violations)
      r << "  violation: " << v.context << " under " << v.transform << " (" << v.first << ", "
        << v.second << ")\n";
    r << "gauge-invariance: " << verdict(report.passed()) << "\n";
    ok = ok && report.passed();
  }
  out.report = r.str();
  out.exit_code = ok ? 0 : 1;
  return out;
}

CommandOutput logic_command(const ModelSpec& spec, const CommandOptions& options) {
  const auto poset = model_poset(spec);
  const ExternalSpectrum sigma(poset);
  std::vector<std::pair<std::string, ComplexMatrix>> props;
  if (options.projections.empty()) {
    for (const auto& p : spec.projections) props.emplace_back(p.name, p.matrix);
  } else {
    for (const auto& name : options.projections) props.emplace_back(name, spec.projection(name).matrix);
  }
  CommandOutput out;
  std::ostringstream r;
  const auto results = excluded_middle_search(sigma, props, spec.tolerance);
  bool ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& res = results[i];
    r << "proposition " << res.label << "\n";
    for (std::size_t c = 0; c < poset.size(); ++c) {
      r << "  " << context_line(poset, c) << ": {";
      bool first = true;
      for (std::size_t k = 0; k < sigma.characters(c).size(); ++k) {
        if (!res.subobject.test(sigma.point_index(c, k))) continue;
        r << (first ? "" : ", ") << "l" << k;
        first = false;
      }
      r << "}\n";
    }
    const auto neg = negate(sigma, res.subobject);
    r << "  not: " << sigma.describe(neg) << "\n";
    r << "  x or not x = top: " << (res.excluded_middle ? "yes" : "no")
      << "; not not x <= x: " << (res.double_negation ? "yes" : "no") << "\n";
    ok = ok && is_subobject(sigma, res.subobject) && is_subobject(sigma, neg);
    out.dot_files.emplace_back("logic_" + res.label + ".dot",
                               spectrum_dot(sigma, std::nullopt, res.subobject));
  }
  std::size_t violations = 0;
  for (const auto& res : results) violations += !res.excluded_middle || !res.double_negation;
  r << "excluded-middle counterexamples: " << violations << "\n";
  r << "quantum-logic: " << verdict(ok) << " (subobjects closed under restriction)\n";
  out.report = r.str();
  out.exit_code = ok ? 0 : 1;
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"contexts", "spectrum",   "sobriety", "chain",
                                                 "invariance", "logic", "verify-all"};
  return names;
}

CommandOutput run_command(std::string_view command, std::vector<ModelSpec> specs,
                          const CommandOptions& options) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw ValidationError("unknown command '" + std::string(command) + "'");
  }
  if (specs.empty()) throw ValidationError(std::string(command) + ": no model given");
  if (options.tol) {
    if (*options.tol <= 0) throw ValidationError("--tol must be positive");
    for (auto& s : specs) s.tolerance = *options.tol;
  }
  if (command == "verify-all") {
    const auto result = verify_all(specs, options.seed.value_or(kDefaultSeed));
    CommandOutput out;
    out.report = "bohrify report\ncommand: verify-all\nfixtures: " + std::to_string(specs.size()) +
                 "\n" + result.report + "result: " + verdict(result.passed) + "\n";
    out.exit_code = result.passed ? 0 : 1;
    return out;
  }
  if (specs.size() != 1) throw ValidationError(std::string(command) + ": expects exactly one model");
  const auto& spec = specs.front();
  CommandOutput out;
  if (command == "contexts") out = contexts_command(spec);
  if (command == "spectrum") out = spectrum_command(spec);
  if (command == "sobriety") out = sobriety_command(spec, options);
  if (command == "chain") out = chain_command(spec, options);
  if (command == "invariance") out = invariance_command(spec, options);
  if (command == "logic") out = logic_command(spec, options);
  out.report = header(command, spec) + out.report + "result: " + verdict(out.exit_code == 0) + "\n";
  return out;
}

}  // namespace bohrify
