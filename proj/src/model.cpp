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
#include "bohrify/model.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "bohrify/error.hpp"

namespace bohrify {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Complex as_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(where, "expected a number or [re, im]");
}

GroupElement as_element(const FiniteGroup& group, const json& j, const std::string& where) {
  const std::string label = as_string(j, where);
  try {
    return group.index_of(label);
  } catch (const Error&) {
    fail(where, "unknown group element '" + label + "'");
  }
}

FiniteGroup parse_group(const json& j) {
  if (j.is_string()) {
    try {
      return FiniteGroup::builtin(j.get<std::string>());
    } catch (const Error& e) {
      fail("group", e.what());
    }
  }
  const std::string name = j.contains("name") ? as_string(j["name"], "group.name") : "custom";
  const auto& labels_json = require(j, "labels", "group");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_json.size(); ++i)
    labels.push_back(as_string(labels_json[i], "group.labels[" + std::to_string(i) + "]"));
  const auto& table_json = require(j, "table", "group");
  if (!table_json.is_array() || table_json.size() != labels.size()) {
    fail("group.table", "expected " + std::to_string(labels.size()) + " rows");
  }
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t r = 0; r < table_json.size(); ++r) {
    const std::string where = "group.table[" + std::to_string(r) + "]";
    if (!table_json[r].is_array() || table_json[r].size() != labels.size()) {
      fail(where, "expected " + std::to_string(labels.size()) + " entries");
    }
    std::vector<std::size_t> row;
    for (std::size_t c = 0; c < labels.size(); ++c) {
      const std::string entry = as_string(table_json[r][c], where);
      const auto it = std::find(labels.begin(), labels.end(), entry);
      if (it == labels.end()) fail(where, "unknown label '" + entry + "'");
      row.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    table.push_back(std::move(row));
  }
  try {
    return FiniteGroup::from_table(name, labels, table);
  } catch (const Error& e) {
    fail("group.table", e.what());
  }
}

Graph parse_graph(const json& j) {
  std::vector<std::string> vertices;
  const auto& vs = require(j, "vertices", "graph");
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back(as_string(vs[i], "graph.vertices[" + std::to_string(i) + "]"));
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> ends;
  const auto& es = require(j, "edges", "graph");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    ids.push_back(as_string(require(es[i], "id", where), where + ".id"));
    ends.emplace_back(as_string(require(es[i], "source", where), where + ".source"),
                      as_string(require(es[i], "target", where), where + ".target"));
  }
  return Graph(vertices, ids, ends);  // its errors already name the graph
}

Surface parse_surface(const Graph& graph, const json& j, const std::string& where) {
  Surface s;
  s.id = as_string(require(j, "id", where), where + ".id");
  s.crossings.assign(graph.edge_count(), EdgeCrossing{});
  if (j.contains("sigma")) {
    for (const auto& [edge, pair] : j["sigma"].items()) {
      const std::string w = where + ".sigma." + edge;
      const auto e = graph.find_edge(edge);
      if (!e) fail(w, "unknown edge '" + edge + "'");
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        fail(w, "expected [sigma(e), sigma(e^-1)]");
      }
      s.crossings[*e].out = pair[0].get<int>();
      s.crossings[*e].in = pair[1].get<int>();
    }
  }
  if (j.contains("interior")) {
    for (const auto& edge : j["interior"]) {
      const std::string id = as_string(edge, where + ".interior");
      const auto e = graph.find_edge(id);
      if (!e) fail(where + ".interior", "unknown edge '" + id + "'");
      s.crossings[*e].interior = true;
    }
  }
  try {
    validate_surface(graph, s);
  } catch (const Error& e) {
    fail(where, e.what());
  }
  return s;
}

GroupField parse_field(const HolonomyModel& model, const json& j, const std::string& where) {
  GroupField d = model.constant_field(model.group().identity());
  if (j.is_string()) return model.constant_field(as_element(model.group(), j, where));
  if (!j.is_object()) fail(where, "expected an object vertex -> element or a single element");
  for (const auto& [vertex, value] : j.items()) {
    const auto v = model.graph().find_vertex(vertex);
    if (!v) fail(where, "unknown vertex '" + vertex + "'");
    d.values[*v] = as_element(model.group(), value, where + "." + vertex);
  }
  return d;
}

// Connections matching a partial assignment edge -> element.
FunctionTable indicator(const HolonomyModel& model, const json& j, const std::string& where) {
  std::vector<std::pair<std::size_t, GroupElement>> fixed;
  if (!j.is_object()) fail(where, "expected an object edge -> element");
  for (const auto& [edge, value] : j.items()) {
    const auto e = model.graph().find_edge(edge);
    if (!e) fail(where, "unknown edge '" + edge + "'");
    fixed.emplace_back(*e, as_element(model.group(), value, where + "." + edge));
  }
  FunctionTable f(model.hilbert_dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto c = model.connection_at(i);
    bool match = true;
    for (const auto& [e, g] : fixed) match = match && c.values[e] == g;
    f[i] = match ? 1.0 : 0.0;
  }
  return f;
}

FunctionTable parse_configuration(const HolonomyModel& model, const json& j,
                                  const std::string& where) {
  const std::string kind = as_string(require(j, "kind", where), where + ".kind");
  if (kind == "table") {
    const auto& values = require(j, "values", where);
    if (!values.is_array() || values.size() != model.hilbert_dim()) {
      fail(where + ".values", "expected " + std::to_string(model.hilbert_dim()) + " values");
    }
    FunctionTable f;
    for (std::size_t i = 0; i < values.size(); ++i)
      f.push_back(as_complex(values[i], where + ".values[" + std::to_string(i) + "]"));
    return f;
  }
  if (kind == "indicator") return indicator(model, require(j, "connection", where), where);
  if (kind == "holonomy") {
    std::vector<std::string> letters;
    for (const auto& l : require(j, "path", where)) letters.push_back(as_string(l, where + ".path"));
    std::optional<std::size_t> start;
    if (j.contains("start")) {
      const std::string v = as_string(j["start"], where + ".start");
      start = model.graph().find_vertex(v);
      if (!start) fail(where + ".start", "unknown vertex '" + v + "'");
    }
    PathWord path;
    try {
      path = PathWord::parse(model.graph(), letters, start);
    } catch (const Error& e) {
      fail(where + ".path", e.what());
    }
    std::vector<Complex> by_element(model.group().size(), 0.0);
    const auto& values = require(j, "values", where);
    if (!values.is_object()) fail(where + ".values", "expected an object element -> value");
    for (const auto& [label, v] : values.items()) {
      const auto g = as_element(model.group(), json(label), where + ".values");
      by_element[g] = as_complex(v, where + ".values." + label);
    }
    FunctionTable f(model.hilbert_dim());
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] = by_element[holonomy(model, model.connection_at(i), path)];
    return f;
  }
  fail(where + ".kind", "unknown configuration kind '" + kind + "'");
}

std::vector<GraphAutomorphism> parse_automorphisms(const Graph& graph, const json& j) {
  if (j.is_string()) {
    const std::string mode = j.get<std::string>();
    try {
      if (mode == "auto") return enumerate_automorphisms(graph, true);
      if (mode == "auto-preserving") return enumerate_automorphisms(graph, false);
    } catch (const Error& e) {
      fail("automorphisms", e.what());
    }
    if (mode == "identity") return {identity_automorphism(graph)};
    fail("automorphisms", "unknown mode '" + mode + "'");
  }
  std::vector<GraphAutomorphism> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "automorphisms[" + std::to_string(i) + "]";
    GraphAutomorphism phi = identity_automorphism(graph);
    phi.label = j[i].contains("label") ? as_string(j[i]["label"], where + ".label")
                                       : "phi" + std::to_string(i);
    for (const auto& [from, to] : require(j[i], "vertices", where).items()) {
      const auto a = graph.find_vertex(from);
      const auto b = graph.find_vertex(as_string(to, where + ".vertices"));
      if (!a || !b) fail(where + ".vertices", "unknown vertex in '" + from + "'");
      phi.vertex_image[*a] = *b;
    }
    for (const auto& [from, to] : require(j[i], "edges", where).items()) {
      std::string target = as_string(to, where + ".edges");
      const bool flip = !target.empty() && target[0] == '-';
      if (flip) target.erase(0, 1);
      const auto a = graph.find_edge(from);
      const auto b = graph.find_edge(target);
      if (!a || !b) fail(where + ".edges", "unknown edge in '" + from + "'");
      phi.edge_image[*a] = *b;
      phi.flipped[*a] = flip;
    }
    try {
      validate_automorphism(graph, phi);
    } catch (const Error& e) {
      fail(where, e.what());
    }
    out.push_back(std::move(phi));
  }
  return out;
}

void parse_gauge_item(const HolonomyModel& model, const json& j, const std::string& where,
                      GaugeSpec& out) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "constants") {
      out.constants = true;
      return;
    }
    if (s.rfind("random:", 0) == 0) {
      const auto second = s.find(':', 7);
      if (second == std::string::npos) fail(where, "expected random:N:seed");
      const std::string n = s.substr(7, second - 7);
      const std::string seed = s.substr(second + 1);
      auto r1 = std::from_chars(n.data(), n.data() + n.size(), out.random_count);
      auto r2 = std::from_chars(seed.data(), seed.data() + seed.size(), out.random_seed);
      if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != n.data() + n.size() ||
          r2.ptr != seed.data() + seed.size()) {
        fail(where, "expected random:N:seed");
      }
      return;
    }
    fail(where, "unknown gauge set '" + s + "'");
  }
  out.explicit_fields.push_back(parse_field(model, j, where));
}

}  // namespace

std::vector<Generator> ModelSpec::generators() const {
  std::vector<Generator> out;
  for (const auto& c : configurations)
    out.push_back(make_configuration_generator(model, c.name, c.table));
  for (const auto& w : weyl) out.push_back(make_weyl_generator(model, w.name, model.surface(w.surface), w.field));
  return out;
}

std::vector<GroupField> ModelSpec::gauge_fields(std::optional<std::uint64_t> seed_override) const {
  std::vector<GroupField> out;
  if (gauges.constants) out = constant_gauges(model);
  if (gauges.random_count > 0) {
    auto r = random_gauges(model, gauges.random_count, seed_override.value_or(gauges.random_seed));
    out.insert(out.end(), r.begin(), r.end());
  }
  out.insert(out.end(), gauges.explicit_fields.begin(), gauges.explicit_fields.end());
  return out;
}

const NamedProjection& ModelSpec::projection(std::string_view name) const {
  for (const auto& p : projections)
    if (p.name == name) return p;
  throw ValidationError("unknown projection '" + std::string(name) + "'");
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(out[i]);
  return hex.str();
}

ModelSpec parse_model(std::string_view text, std::string_view source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(source) + ": parse error: " + e.what());
  }
  ModelSpec spec;
  spec.digest = sha256_hex(text);
  if (!j.is_object()) fail(std::string(source), "top level must be an object");
  const std::string schema = as_string(require(j, "schema", "model"), "schema");
  if (schema != kModelSchema) fail("schema", "unsupported schema '" + schema + "'");
  spec.name = j.contains("name") ? as_string(j["name"], "name") : std::string(source);
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number() || j["tolerance"].get<double>() <= 0) {
      fail("tolerance", "expected a positive number");
    }
    spec.tolerance = j["tolerance"].get<double>();
  }
  std::size_t dim_cap = dimension_cap();
  if (j.contains("caps")) {
    const auto& caps = j["caps"];
    if (caps.contains("dimension")) dim_cap = std::min(dim_cap, caps["dimension"].get<std::size_t>());
    if (caps.contains("sobriety_candidates"))
      spec.sobriety_cap = caps["sobriety_candidates"].get<std::uint64_t>();
  }

  FiniteGroup group = parse_group(require(j, "group", "model"));
  Graph graph = parse_graph(require(j, "graph", "model"));
  std::vector<Surface> surfaces;
  if (j.contains("surfaces")) {
    for (std::size_t i = 0; i < j["surfaces"].size(); ++i)
      surfaces.push_back(parse_surface(graph, j["surfaces"][i], "surfaces[" + std::to_string(i) + "]"));
    for (std::size_t a = 0; a < surfaces.size(); ++a)
      for (std::size_t b = a + 1; b < surfaces.size(); ++b)
        if (surfaces[a].id == surfaces[b].id) fail("surfaces", "duplicate surface id '" + surfaces[a].id + "'");
  }
  spec.model = HolonomyModel(std::move(graph), std::move(group), std::move(surfaces));
  if (spec.model.hilbert_dim() > dim_cap) {
    throw CapExceeded("model: Hilbert dimension " + std::to_string(spec.model.hilbert_dim()) +
                         " exceeds the cap " + std::to_string(dim_cap));
  }
  const auto& model = spec.model;

  std::vector<std::string> names;
  auto claim = [&](const std::string& name, const std::string& where) {
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      fail(where, "duplicate generator name '" + name + "'");
    }
    names.push_back(name);
  };
  if (j.contains("configuration")) {
    for (std::size_t i = 0; i < j["configuration"].size(); ++i) {
      const std::string where = "configuration[" + std::to_string(i) + "]";
      const auto& item = j["configuration"][i];
      NamedTable t;
      t.name = as_string(require(item, "name", where), where + ".name");
      claim(t.name, where);
      t.table = parse_configuration(model, item, where + " '" + t.name + "'");
      spec.configurations.push_back(std::move(t));
    }
  }
  if (j.contains("weyl")) {
    for (std::size_t i = 0; i < j["weyl"].size(); ++i) {
      const std::string where = "weyl[" + std::to_string(i) + "]";
      const auto& item = j["weyl"][i];
      NamedWeyl w;
      w.name = as_string(require(item, "name", where), where + ".name");
      claim(w.name, where);
      w.surface = as_string(require(item, "surface", where), where + ".surface");
      try {
        model.surface(w.surface);
      } catch (const Error&) {
        fail(where + ".surface", "unknown surface '" + w.surface + "'");
      }
      w.field = item.contains("field")
                    ? parse_field(model, item["field"], where + " '" + w.name + "'.field")
                                       : model.constant_field(model.group().identity());
      spec.weyl.push_back(std::move(w));
    }
  }
  if (names.size() > kMaxPosetGenerators) {
    throw CapExceeded("model: " + std::to_string(names.size()) + " generators exceed the cap of " +
                      std::to_string(kMaxPosetGenerators));
  }
  if (j.contains("projections")) {
    for (std::size_t i = 0; i < j["projections"].size(); ++i) {
      const std::string where = "projections[" + std::to_string(i) + "]";
      const auto& item = j["projections"][i];
      NamedProjection p;
      p.name = as_string(require(item, "name", where), where + ".name");
      const std::string named = where + " '" + p.name + "'";
      const std::string kind = as_string(require(item, "kind", named), named + ".kind");
      if (kind == "indicator") {
        p.matrix = config_operator(model, indicator(model, require(item, "connection", where), where));
      } else if (kind == "weyl_eigen") {
        const std::string wname = as_string(require(item, "weyl", where), where + ".weyl");
        const auto it = std::find_if(spec.weyl.begin(), spec.weyl.end(),
                                     [&](const NamedWeyl& w) { return w.name == wname; });
        if (it == spec.weyl.end()) fail(where + ".weyl", "unknown Weyl generator '" + wname + "'");
        const Complex value = as_complex(require(item, "eigenvalue", where), where + ".eigenvalue");
        const auto w = weyl_operator(model, model.surface(it->surface), it->field);
        const auto algebra = generate_star_algebra({w}, model.hilbert_dim(), spec.tolerance);
        p.matrix = ComplexMatrix::zero(model.hilbert_dim());
        for (const auto& q : minimal_projections(algebra, spec.tolerance)) {
          const Complex lambda = (q * w).trace() / q.trace();
          if (std::abs(lambda - value) <= kCharacterMatchTolerance) p.matrix += q;
        }
        if (normalized_norm(p.matrix) == 0.0) fail(where + ".eigenvalue", "not an eigenvalue");
      } else {
        fail(where + ".kind", "unknown projection kind '" + kind + "'");
      }
      spec.projections.push_back(std::move(p));
    }
  }
  if (j.contains("chain")) {
    const auto& c = j["chain"];
    ChainSpec chain;
    for (const auto& s : require(c, "surfaces", "chain")) {
      const std::string id = as_string(s, "chain.surfaces");
      try {
        model.surface(id);
      } catch (const Error&) {
        fail("chain.surfaces", "unknown surface '" + id + "'");
      }
      chain.surfaces.push_back(id);
    }
    chain.field = c.contains("field") ? parse_field(model, c["field"], "chain.field")
                                      : model.constant_field(model.group().identity());
    if (c.contains("phases")) {
      for (std::size_t i = 0; i < c["phases"].size(); ++i)
        chain.phases.push_back(as_complex(c["phases"][i], "chain.phases[" + std::to_string(i) + "]"));
    }
    spec.chain = std::move(chain);
  }
  spec.automorphisms = parse_automorphisms(
      model.graph(), j.contains("automorphisms") ? j["automorphisms"] : json("identity"));
  if (j.contains("gauges")) {
    const auto& g = j["gauges"];
    if (g.is_array()) {
      for (std::size_t i = 0; i < g.size(); ++i)
        parse_gauge_item(model, g[i], "gauges[" + std::to_string(i) + "]", spec.gauges);
    } else {
      parse_gauge_item(model, g, "gauges", spec.gauges);
    }
  } else {
    spec.gauges.constants = true;
  }
  return spec;
}

ModelSpec load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), path.filename().string());
}

ContextPoset model_poset(const ModelSpec& spec, Execution exec) {
  auto gens = spec.generators();
  std::vector<ComplexMatrix> mats;
  for (const auto& g : gens) mats.push_back(g.matrix);
  auto ambient = generate_star_algebra(mats, spec.model.hilbert_dim(), spec.tolerance);
  return build_context_poset(std::move(ambient), std::move(gens), spec.tolerance, exec);
}

}  // namespace bohrify
