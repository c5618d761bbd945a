#include "helgason/serialize.hpp"

#include <sstream>

namespace helgason {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T, class F>
std::vector<T> list_from(const Json& j, F&& f) {
  if (!j.is_array()) bad("expected an array");
  std::vector<T> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

template <class T>
Json list_to(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

WeightTransportOutcome::Kind transport_kind(const std::string& s) {
  using K = WeightTransportOutcome::Kind;
  for (K k : {K::Reflected, K::Fixed, K::Critical})
    if (s == to_string(k)) return k;
  bad("unknown transport kind '" + s + "'");
}

SphericityVerdict::Kind verdict_kind(const std::string& s) {
  using K = SphericityVerdict::Kind;
  for (K k : {K::Spherical, K::NotSpherical, K::Undetermined})
    if (s == to_string(k)) return k;
  bad("unknown verdict '" + s + "'");
}

std::string mult_string(const Multiplicity& m) {
  return "(" + std::to_string(m.even) + "|" + std::to_string(m.odd) + ")";
}

}  // namespace

Weight parse_weight(std::string_view text) {
  text = strip(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') bad("unbalanced parentheses in '" + std::string(text) + "'");
    text = strip(text.substr(1, text.size() - 2));
  }
  if (text.empty()) bad("empty weight");
  std::vector<Scalar> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coords.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

std::vector<Weight> parse_tuples(std::string_view text) {
  text = strip(text);
  std::vector<Weight> out;
  if (text.find('(') == std::string_view::npos) {
    // semicolon separated, no parentheses
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto semi = text.find(';', start);
      out.push_back(parse_weight(text.substr(start, semi == text.npos ? text.npos : semi - start)));
      if (semi == text.npos) break;
      start = semi + 1;
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') bad("expected '(' in '" + std::string(text) + "'");
    const auto close = text.find(')', i);
    if (close == text.npos) bad("unbalanced parentheses in '" + std::string(text) + "'");
    out.push_back(parse_weight(text.substr(i, close - i + 1)));
    i = close + 1;
  }
  if (out.empty()) bad("no tuples in '" + std::string(text) + "'");
  return out;
}

Json to_json(const Scalar& s) { return format_scalar(s); }

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords()) a.push_back(format_scalar(c));
  return a;
}

Json to_json(const Base& b) { return list_to(b.simples()); }

Json to_json(const WeightTransportOutcome& o) {
  Json j{{"kind", to_string(o.kind)}, {"weight", to_json(o.weight)}};
  if (o.kind == WeightTransportOutcome::Kind::Critical) {
    j["k"] = o.k;
    j["companion"] = to_json(o.companion);
  }
  return j;
}

Json to_json(const ReflectionStep& s) {
  Json j{{"root", to_json(s.root)}, {"from_base", to_json(s.from_base)}, {"to_base", to_json(s.to_base)}};
  if (s.weight_effect) j["weight_effect"] = to_json(*s.weight_effect);
  return j;
}

Json to_json(const PrincipalRootCheck& c) {
  Json j{{"gamma", to_json(c.gamma)},
         {"path", list_to(c.path)},
         {"exposed", to_json(c.exposed)},
         {"final_weight", to_json(c.final_weight)},
         {"final_value", to_json(c.final_value)}};
  if (c.companion_value) j["companion_value"] = to_json(*c.companion_value);
  j["pass"] = c.pass;
  j["note"] = c.note;
  return j;
}

Json to_json(const SphericityVerdict& v) {
  Json j{{"verdict", to_string(v.kind)}};
  if (!v.certificate.empty() || v.kind == SphericityVerdict::Kind::Spherical) j["certificate"] = list_to(v.certificate);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.blocking.empty() || !v.blocking_path.empty()) {
    j["blocking"] = v.blocking;
    j["blocking_path"] = list_to(v.blocking_path);
  }
  return j;
}

Json to_json(const VerdictDocument& d) {
  Json j{{"pair", d.pair}, {"base", list_to(d.base)}, {"weight", to_json(d.weight)}};
  const Json v = to_json(d.verdict);
  for (auto it = v.begin(); it != v.end(); ++it) j[it.key()] = *it;
  j["version"] = d.version;
  return j;
}

Json to_json(const GraphDocument& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(list_to(n));
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"root", to_json(e.root)}, {"singular", e.singular}});
  Json classes = Json::array();
  for (const auto& c : g.classes) classes.push_back({{"members", c.members}, {"principal", list_to(c.principal)}});
  return {{"pair", g.pair},
          {"singular_only", g.singular_only},
          {"nodes", nodes},
          {"edges", edges},
          {"classes", classes},
          {"connected", g.connected},
          {"principal_constant", g.principal_constant},
          {"version", g.version}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  bad("rational must be a \"p/q\" string, got " + j.dump());
}

Weight weight_from_json(const Json& j) { return Weight(list_from<Scalar>(j, scalar_from_json)); }

Base base_from_json(const Json& j) { return Base(list_from<Weight>(j, weight_from_json)); }

WeightTransportOutcome transport_from_json(const Json& j) {
  WeightTransportOutcome o;
  o.kind = transport_kind(field(j, "kind").get<std::string>());
  o.weight = weight_from_json(field(j, "weight"));
  if (o.kind == WeightTransportOutcome::Kind::Critical) {
    o.k = field(j, "k").get<int>();
    o.companion = weight_from_json(field(j, "companion"));
  }
  return o;
}

ReflectionStep step_from_json(const Json& j) {
  ReflectionStep s;
  s.root = weight_from_json(field(j, "root"));
  s.from_base = base_from_json(field(j, "from_base"));
  s.to_base = base_from_json(field(j, "to_base"));
  if (j.contains("weight_effect")) s.weight_effect = transport_from_json(j.at("weight_effect"));
  return s;
}

PrincipalRootCheck check_from_json(const Json& j) {
  PrincipalRootCheck c;
  c.gamma = weight_from_json(field(j, "gamma"));
  c.path = list_from<ReflectionStep>(field(j, "path"), step_from_json);
  c.exposed = weight_from_json(field(j, "exposed"));
  c.final_weight = weight_from_json(field(j, "final_weight"));
  c.final_value = scalar_from_json(field(j, "final_value"));
  if (j.contains("companion_value")) c.companion_value = scalar_from_json(j.at("companion_value"));
  c.pass = field(j, "pass").get<bool>();
  c.note = field(j, "note").get<std::string>();
  return c;
}

SphericityVerdict verdict_from_json(const Json& j) {
  SphericityVerdict v;
  v.kind = verdict_kind(field(j, "verdict").get<std::string>());
  if (j.contains("certificate")) v.certificate = list_from<PrincipalRootCheck>(j.at("certificate"), check_from_json);
  if (j.contains("witness")) v.witness = check_from_json(j.at("witness"));
  if (j.contains("blocking")) v.blocking = j.at("blocking").get<std::string>();
  if (j.contains("blocking_path")) v.blocking_path = list_from<ReflectionStep>(j.at("blocking_path"), step_from_json);
  return v;
}

VerdictDocument verdict_document_from_json(const Json& j) {
  VerdictDocument d;
  d.pair = field(j, "pair").get<std::string>();
  d.base = list_from<Weight>(field(j, "base"), weight_from_json);
  d.weight = weight_from_json(field(j, "weight"));
  d.verdict = verdict_from_json(j);
  d.version = field(j, "version").get<std::string>();
  return d;
}

GraphDocument graph_document_from_json(const Json& j) {
  GraphDocument g;
  g.pair = field(j, "pair").get<std::string>();
  g.singular_only = field(j, "singular_only").get<bool>();
  g.nodes = list_from<std::vector<Weight>>(field(j, "nodes"),
                                           [](const Json& n) { return list_from<Weight>(n, weight_from_json); });
  g.edges = list_from<GraphEdge>(field(j, "edges"), [](const Json& e) {
    return GraphEdge{field(e, "from").get<std::size_t>(), field(e, "to").get<std::size_t>(),
                     weight_from_json(field(e, "root")), field(e, "singular").get<bool>()};
  });
  g.classes = list_from<GraphClass>(field(j, "classes"), [](const Json& c) {
    return GraphClass{field(c, "members").get<std::vector<std::size_t>>(),
                      list_from<Weight>(field(c, "principal"), weight_from_json)};
  });
  g.connected = field(j, "connected").get<bool>();
  g.principal_constant = field(j, "principal_constant").get<bool>();
  g.version = field(j, "version").get<std::string>();
  return g;
}

VerdictDocument make_verdict_document(const std::string& pair, const Base& base, const Weight& weight,
                                      SphericityVerdict verdict) {
  return {pair, base.simples(), weight, std::move(verdict), kVersion};
}

GraphDocument make_graph_document(const std::string& pair, const RestrictedRootSystem& system, const Base& seed,
                                  bool singular_only) {
  const BaseGraph graph = enumerate_bases(system, seed, singular_only);
  GraphDocument g;
  g.pair = pair;
  g.singular_only = singular_only;
  for (const auto& n : graph.nodes) g.nodes.push_back(n.simples());
  for (const auto& e : graph.edges) g.edges.push_back({e.from, e.to, e.root, e.root_class == RootClass::Singular});
  g.connected = graph.connected();
  g.principal_constant = true;
  for (auto& members : graph.singular_classes()) {
    GraphClass c{members, principal_roots(graph.nodes[members.front()], system)};
    for (std::size_t i : members) {
      auto p = principal_roots(graph.nodes[i], system);
      std::sort(p.begin(), p.end());
      auto q = c.principal;
      std::sort(q.begin(), q.end());
      if (p != q) g.principal_constant = false;
    }
    g.classes.push_back(std::move(c));
  }
  return g;
}

std::string to_dot(const GraphDocument& g) {
  std::ostringstream out;
  out << "digraph bases {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<std::size_t> class_of(g.nodes.size(), 0);
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    for (std::size_t i : g.classes[c].members) class_of[i] = c;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"";
    for (std::size_t k = 0; k < g.nodes[i].size(); ++k) out << (k ? "\\n" : "") << g.nodes[i][k].to_string();
    out << "\", group=\"c" << class_of[i] << "\"];\n";
  }
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.root.to_string() << "\""
        << (e.singular ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json describe_family(const FamilyInfo& info) {
  return {{"id", info.id},
          {"pair", info.pair},
          {"system", info.system},
          {"parameters", info.parameters},
          {"constraints", info.constraints},
          {"coordinates", info.coordinates},
          {"generic", info.generic}};
}

Json describe_entry(const CatalogEntry& entry) {
  const auto& sys = entry.system;
  Json params = Json::object();
  if (entry.spec.m >= 0) params["m"] = entry.spec.m;
  if (entry.spec.n >= 0) params["n"] = entry.spec.n;
  if (entry.spec.r >= 0) params["r"] = entry.spec.r;
  if (entry.spec.s >= 0) params["s"] = entry.spec.s;
  if (entry.spec.deformation) params["a"] = to_json(*entry.spec.deformation);
  Json roots = Json::array();
  for (const auto& r : positive_roots(entry.default_base, sys)) {
    roots.push_back({{"root", to_json(r.vector)},
                     {"multiplicity", mult_string(r.mult)},
                     {"class", classify_root(r.vector, sys) == RootClass::Singular ? "singular" : "regular"},
                     {"isotropic", is_isotropic(r.vector, sys)}});
  }
  Json gram = Json::array();
  for (const auto& row : sys.gram()) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(to_json(x));
    gram.push_back(jr);
  }
  return {{"id", entry.spec.family},
          {"parameters", params},
          {"basis", sys.basis_labels()},
          {"gram", gram},
          {"positive_roots", roots},
          {"default_base", to_json(entry.default_base)},
          {"principal_roots", list_to(principal_roots(entry.default_base, sys))},
          {"closed_form", entry.closed_form_id},
          {"version", kVersion}};
}

}  // namespace helgason
