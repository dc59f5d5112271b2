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
#include "bohrify/dot.hpp"

#include <sstream>

namespace bohrify {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string contexts_dot(const ContextPoset& poset) {
  std::ostringstream out;
  out << "digraph contexts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < poset.size(); ++c) {
    const auto& ctx = poset.context(c);
    out << "  c" << c << " [label="
        << quote(ctx.label + "\\ndim " + std::to_string(ctx.algebra.dim())) << "];\n";
  }
  for (const auto& [lower, upper] : poset.covering_pairs())
    out << "  c" << lower << " -> c" << upper << ";\n";
  out << "}\n";
  return out.str();
}

std::string spectrum_dot(const ExternalSpectrum& sigma, const std::optional<DotCluster>& cluster,
                         const std::optional<PointSet>& filled) {
  std::ostringstream out;
  out << "digraph spectrum {\n  rankdir=TB;\n  node [shape=ellipse];\n";
  auto node = [&](std::size_t p) {
    const auto& pt = sigma.point(p);
    out << "  p" << p << " [label="
        << quote("(" + sigma.poset().context(pt.context).label + ", " +
                 std::to_string(pt.character) + ")");
    if (filled && filled->test(p)) out << ", style=filled";
    out << "];\n";
  };
  if (cluster) {
    out << "  subgraph cluster_0 {\n  label=" << quote(cluster->name) << ";\n";
    for (std::size_t p = 0; p < sigma.size(); ++p)
      if (cluster->points.test(p)) node(p);
    out << "  }\n";
  }
  for (std::size_t p = 0; p < sigma.size(); ++p)
    if (!cluster || !cluster->points.test(p)) node(p);
  for (const auto& [lower, upper] : sigma.poset().covering_pairs()) {
    for (std::size_t k = 0; k < sigma.characters(upper).size(); ++k) {
      const std::size_t p = sigma.point_index(upper, k);
      out << "  p" << p << " -> p" << sigma.restrict_point(p, lower) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bohrify
