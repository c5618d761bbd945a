// Command-line front end. Talks to the engine only through helgason.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "helgason/helgason.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 4;

struct UsageError {
  std::string message;
};

struct PairOptions {
  std::string pair;
  int m = -1, n = -1, r = -1, s = -1;
  std::string deformation;
  std::string base;
};

void add_pair_options(CLI::App* cmd, PairOptions& o, bool with_base = true) {
  cmd->add_option("pair_id", o.pair, "family id (see `pair list`)");
  cmd->add_option("--pair", o.pair, "family id");
  cmd->add_option("--m", o.m, "parameter m");
  cmd->add_option("--n", o.n, "parameter n");
  cmd->add_option("--r", o.r, "parameter r");
  cmd->add_option("--s", o.s, "parameter s");
  cmd->add_option("--a,--k", o.deformation, "deformation parameter, rational p/q");
  if (with_base) cmd->add_option("--base", o.base, "base as comma-separated tuples, e.g. \"(1,-1,0),(0,1,-1)\"");
}

struct Str {
  char* p = nullptr;
  ~Str() { hg_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

void check_status(hg_status s) {
  if (s != HG_OK) throw UsageError{std::string(hg_status_name(s)) + ": " + hg_last_error()};
}

struct Entry {
  hg_entry* e = nullptr;
  ~Entry() { hg_entry_destroy(e); }
};

std::unique_ptr<Entry> open_entry(const PairOptions& o) {
  if (o.pair.empty()) throw UsageError{"a pair id is required"};
  hg_params p;
  hg_params_init(&p);
  p.family = o.pair.c_str();
  p.m = o.m;
  p.n = o.n;
  p.r = o.r;
  p.s = o.s;
  if (!o.deformation.empty()) p.deformation = o.deformation.c_str();
  auto out = std::make_unique<Entry>();
  check_status(hg_entry_create(&p, &out->e));
  if (!o.base.empty()) check_status(hg_entry_set_base(out->e, o.base.c_str()));
  return out;
}

std::string tuple(const Json& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + w[i].get<std::string>();
  return out + ")";
}

std::string tuples(const Json& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " " : "") + tuple(ws[i]);
  return out;
}

int cmd_pair_list(bool json) {
  Str s;
  check_status(hg_families_json(&s.p));
  if (json) {
    std::cout << s.get() << "\n";
    return 0;
  }
  for (const auto& f : Json::parse(s.get())) {
    std::cout << f["id"].get<std::string>() << "\t" << f["pair"].get<std::string>();
    if (!f["parameters"].get<std::string>().empty()) std::cout << "\t[" << f["parameters"].get<std::string>() << "]";
    std::cout << "\t" << f["constraints"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_pair_show(const PairOptions& o, bool json) {
  auto e = open_entry(o);
  Str s;
  check_status(hg_entry_describe_json(e->e, &s.p));
  if (json) {
    std::cout << s.get() << "\n";
    return 0;
  }
  const Json d = Json::parse(s.get());
  std::cout << d["id"].get<std::string>() << ": " << d["family"]["pair"].get<std::string>() << "\n";
  std::cout << "system:      " << d["family"]["system"].get<std::string>() << "\n";
  std::cout << "parameters:  " << d["parameters"].dump() << "\n";
  std::cout << "basis:       ";
  for (std::size_t i = 0; i < d["basis"].size(); ++i) std::cout << (i ? ", " : "") << d["basis"][i].get<std::string>();
  std::cout << "\ncoordinates: " << d["family"]["coordinates"].get<std::string>() << "\n";
  std::cout << "base:        " << tuples(d["default_base"]) << "\n";
  std::cout << "principal:   " << tuples(d["principal_roots"]) << "\n";
  if (d.contains("base")) {
    std::cout << "chosen base: " << tuples(d["base"]) << "\n";
    std::cout << "  principal: " << tuples(d["base_principal_roots"]) << "\n";
  }
  std::cout << "positive roots:\n";
  for (const auto& r : d["positive_roots"])
    std::cout << "  " << tuple(r["root"]) << "\t" << r["multiplicity"].get<std::string>() << "\t"
              << r["class"].get<std::string>() << (r["isotropic"].get<bool>() ? ", isotropic" : "") << "\n";
  return 0;
}

int cmd_reflect(const PairOptions& o, const std::string& root, const std::string& weight) {
  auto e = open_entry(o);
  Str s;
  check_status(hg_reflect(e->e, root.c_str(), weight.empty() ? nullptr : weight.c_str(), &s.p));
  std::cout << s.get() << "\n";
  return 0;
}

int cmd_check(const PairOptions& o, const std::string& weight, bool json) {
  auto e = open_entry(o);
  hg_verdict v = HG_UNDETERMINED;
  Str s;
  check_status(hg_check(e->e, weight.c_str(), &v, &s.p));
  if (json) {
    std::cout << s.get() << "\n";
  } else {
    const Json d = Json::parse(s.get());
    std::cout << d["verdict"].get<std::string>() << "\n";
    if (d.contains("witness")) {
      const auto& w = d["witness"];
      std::cout << "  fails at " << tuple(w["gamma"]) << " (exposed as " << tuple(w["exposed"])
                << "): " << w["note"].get<std::string>() << ", value " << w["final_value"].get<std::string>() << "\n";
    }
    if (d.contains("blocking")) std::cout << "  blocked: " << d["blocking"].get<std::string>() << "\n";
    if (d.contains("certificate"))
      for (const auto& c : d["certificate"])
        std::cout << "  " << tuple(c["gamma"]) << ": " << c["note"].get<std::string>() << ", value "
                  << c["final_value"].get<std::string>() << ", path length " << c["path"].size() << "\n";
  }
  return static_cast<int>(v);
}

int cmd_enumerate(const PairOptions& o, int max_coeff, unsigned threads, bool json) {
  if (max_coeff < 0) throw UsageError{"--max-coeff must be nonnegative"};
  auto e = open_entry(o);
  Str s;
  check_status(hg_enumerate(e->e, max_coeff, threads, &s.p));
  if (json) {
    std::cout << s.get() << "\n";
    return 0;
  }
  for (const auto& w : Json::parse(s.get())) std::cout << w.dump() << "\n";
  return 0;
}

int cmd_crosscheck(const PairOptions& o, int max_coeff, const std::string& variant, unsigned threads, bool json) {
  if (max_coeff < 0) throw UsageError{"--max-coeff must be nonnegative"};
  auto e = open_entry(o);
  int clean = 0;
  Str s;
  check_status(hg_crosscheck(e->e, max_coeff, variant.c_str(), threads, &clean, &s.p));
  if (json) {
    std::cout << s.get() << "\n";
  } else {
    const Json r = Json::parse(s.get());
    std::cout << r["pair"].get<std::string>() << " [" << r["variant"].get<std::string>() << "] box "
              << r["max_coeff"] << ": " << r["total"] << " weights, " << r["agree_spherical"]
              << " spherical in both, " << r["disagreements"] << " disagreements, " << r["undetermined"]
              << " undetermined\n";
    for (const auto& d : r["disagreement_samples"])
      std::cout << "  disagree " << tuple(d["weight"]) << ": procedure " << d["procedure"].get<std::string>()
                << ", table " << (d["table"].get<bool>() ? "spherical" : "not spherical") << "\n";
    for (const auto& d : r["undetermined_samples"]) std::cout << "  undetermined " << tuple(d["weight"]) << "\n";
  }
  return clean ? 0 : 1;
}

int cmd_basegraph(const PairOptions& o, bool singular_only, bool dot) {
  auto e = open_entry(o);
  Str j, d;
  check_status(hg_basegraph(e->e, singular_only ? 1 : 0, &j.p, dot ? &d.p : nullptr));
  std::cout << (dot ? d.get() : j.get() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical weights of supersymmetric pairs via singular reflections"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hg_version());

  bool json = false;
  PairOptions po;

  auto* pair = app.add_subcommand("pair", "catalog queries");
  pair->require_subcommand(1);
  auto* pair_list = pair->add_subcommand("list", "list family ids");
  pair_list->add_flag("--json", json, "JSON output");
  auto* pair_show = pair->add_subcommand("show", "roots, default base and principal roots");
  add_pair_options(pair_show, po);
  pair_show->add_flag("--json", json, "JSON output");

  std::string root, weight, variant = "table";
  int max_coeff = -1;
  unsigned threads = 0;
  bool singular_only = false, dot = false;

  auto* reflect = app.add_subcommand("reflect", "reflect the base in a simple root, transporting a weight");
  add_pair_options(reflect, po);
  reflect->add_option("--root", root, "simple root")->required();
  reflect->add_option("-w,--weight", weight, "weight to transport");
  reflect->add_flag("--json", json, "accepted for symmetry; output is always JSON");

  auto* check = app.add_subcommand("check", "decide sphericity; exit 0/1/2 = Spherical/NotSpherical/Undetermined");
  add_pair_options(check, po);
  check->add_option("-w,--weight", weight, "coefficients, comma separated")->required();
  check->add_flag("--json", json, "full verdict document");

  auto* enumerate = app.add_subcommand("enumerate", "spherical weights in [-M, M]^dim");
  add_pair_options(enumerate, po);
  enumerate->add_option("--max-coeff", max_coeff, "box half-width M")->required();
  enumerate->add_option("--threads", threads, "worker threads, 0 = all cores");
  enumerate->add_flag("--json", json, "single JSON array instead of one weight per line");

  auto* crosscheck = app.add_subcommand("crosscheck", "compare the procedure with the closed form over a box");
  add_pair_options(crosscheck, po);
  crosscheck->add_option("--max-coeff", max_coeff, "box half-width M")->required();
  crosscheck->add_option("--variant", variant, "closed-form variant (ag12-d213: table or item11)");
  crosscheck->add_option("--threads", threads, "worker threads, 0 = all cores");
  crosscheck->add_flag("--json", json, "JSON report");

  auto* basegraph = app.add_subcommand("basegraph", "graph of bases under reflections");
  add_pair_options(basegraph, po);
  basegraph->add_flag("--singular-only", singular_only, "only singular reflections");
  basegraph->add_flag("--json", json, "JSON output (the default)");
  basegraph->add_flag("--dot", dot, "Graphviz DOT instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (pair_list->parsed()) return cmd_pair_list(json);
    if (pair_show->parsed()) return cmd_pair_show(po, json);
    if (reflect->parsed()) return cmd_reflect(po, root, weight);
    if (check->parsed()) return cmd_check(po, weight, json);
    if (enumerate->parsed()) return cmd_enumerate(po, max_coeff, threads, json);
    if (crosscheck->parsed()) return cmd_crosscheck(po, max_coeff, variant, threads, json);
    if (basegraph->parsed()) return cmd_basegraph(po, singular_only, dot);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
