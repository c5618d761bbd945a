// Acceptance run: one PASS/FAIL line per criterion.
//
// A few rows of the closed-form table disagree with the reflection procedure
// (see README, "Known discrepancies"). Those criteria print FAIL. The process
// exits 0 only when the failures are exactly the documented ones, so any new
// disagreement, or a documented one going away, fails the test.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "helgason/basegraph.hpp"
#include "helgason/catalog.hpp"
#include "helgason/closedform.hpp"
#include "helgason/crosscheck.hpp"
#include "helgason/reflections.hpp"
#include "helgason/sphericity.hpp"

using namespace helgason;
using Kind = SphericityVerdict::Kind;

namespace {

Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar(p, d); }

PairSpec make(const std::string& family, int m = -1, int n = -1, int r = -1, int s = -1,
              std::optional<Scalar> k = std::nullopt) {
  PairSpec p;
  p.family = family;
  p.m = m;
  p.n = n;
  p.r = r;
  p.s = s;
  p.deformation = k;
  return p;
}

std::string label(const PairSpec& p) {
  std::ostringstream out;
  out << p.family << "(";
  const char* sep = "";
  auto put = [&](const char* name, int v) {
    if (v >= 0) {
      out << sep << name << "=" << v;
      sep = ",";
    }
  };
  put("m", p.m);
  put("n", p.n);
  put("r", p.r);
  put("s", p.s);
  if (p.deformation) out << sep << "k=" << format_scalar(*p.deformation);
  out << ")";
  return out.str();
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.dim(); ++i) out += (i ? "," : "") + format_scalar(w[i]);
  return out + ")";
}

// Some deformation values restrict the other parameters; those combinations are skipped.
std::optional<CatalogEntry> try_build(const PairSpec& p) {
  try {
    return build_pair(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParameterViolation) throw;
    return std::nullopt;
  }
}

struct Result {
  std::set<std::string> issues;
  std::string summary;
};

// Issues we expect, keyed by criterion. Each string is produced verbatim below.
const std::map<int, std::set<std::string>> kKnown = {
    {1,
     {"osp2r-osp(n=3,r=2,s=1): 32 disagreements",
      "osp2r-osp(n=3,r=3,s=1): 60 disagreements",
      "ab13-gosp24(): 8 disagreements",
      "ab13-d212(): 30 disagreements"}},
};

// Criterion 1
Result table_equivalence() {
  std::vector<PairSpec> specs;
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {4, 2}}) specs.push_back(make("gl-osp", m, n));
  for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    specs.push_back(make("gl-gl", -1, -1, r, s));
    specs.push_back(make("osp-osp", -1, -1, r, s));
  }
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) specs.push_back(make("osp-gl", m, n));
  for (auto [r, s, n] : {std::tuple{2, 0, 2}, {2, 1, 3}, {3, 1, 3}}) specs.push_back(make("osp2r-osp", -1, n, r, s));
  for (auto [r, s] : {std::pair{2, 1}, {3, 1}}) specs.push_back(make("osp2r4s", -1, -1, r, s));
  for (Scalar a : {q(2), q(1, 2), q(-3)}) specs.push_back(make("d21a", -1, -1, -1, -1, a));
  for (const char* id : {"ab13-sl14", "ab13-gosp24", "ab13-d212", "ag12-d213"}) specs.push_back(make(id));

  Result res;
  std::uint64_t total = 0;
  for (const auto& p : specs) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = crosscheck(build_pair(p), 8, "table", 0, 4);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += rep.total;
    std::printf("  %-40s %9llu weights  %4llu disagree  %llu undetermined  %.1fs\n", label(p).c_str(),
                static_cast<unsigned long long>(rep.total), static_cast<unsigned long long>(rep.disagreements),
                static_cast<unsigned long long>(rep.undetermined), secs);
    for (const auto& s : rep.disagreement_samples)
      std::printf("      e.g. %s: procedure %s, table %s\n", weight_str(s.lambda).c_str(), to_string(s.procedure),
                  s.oracle ? "accepts" : "rejects");
    if (rep.disagreements) res.issues.insert(label(p) + ": " + std::to_string(rep.disagreements) + " disagreements");
    if (rep.undetermined) res.issues.insert(label(p) + ": " + std::to_string(rep.undetermined) + " undetermined");
  }
  res.summary = std::to_string(specs.size()) + " parameter sets, " + std::to_string(total) + " weights";
  return res;
}

// Criterion 2
Result example_cases() {
  std::vector<PairSpec> specs;
  for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    specs.push_back(make("bc", -1, 1, r, s, q(-1)));
    specs.push_back(make("bc", -1, 1, r, s, q(-1, 2)));
  }
  for (Scalar k : {q(2), q(-3), q(1, 2)}) specs.push_back(make("c", -1, 1, 1, 1, k));
  Result res;
  for (const auto& p : specs) {
    const auto rep = crosscheck(build_pair(p), 10, "table", 0, 4);
    if (!rep.clean())
      res.issues.insert(label(p) + ": " + std::to_string(rep.disagreements) + " disagreements, " +
                        std::to_string(rep.undetermined) + " undetermined");
  }
  res.summary = std::to_string(specs.size()) + " systems, box 10";
  return res;
}

// Criterion 3: lambda = (v/2) alpha has lambda(h_alpha) = v.
Result rank_one() {
  struct Case {
    std::string name;
    RestrictedRootSystem system;
    Weight generator;
  };
  std::vector<Case> cases;
  for (Scalar k : {q(-1), q(-1, 2), q(2), q(-3), q(1, 2)})
    for (int n : {1, 2})
      for (const char* fam : {"bc", "c"})
        for (auto [r, s] : {std::pair{1, 0}, {0, 1}}) {
          const auto e = try_build(make(fam, -1, n, r, s, k));
          if (e) cases.push_back({label(e->spec), e->system, e->default_base.simples()[0]});
        }
  // Rank-one subsystems of every catalog entry.
  for (const auto& f : list_families()) {
    const auto e = build_pair(make(f.id));
    for (const auto& root : e.system.roots()) {
      const auto sub = rank_one_subsystem(root.vector, e.system);
      if (sub.generator != root.vector) continue;
      cases.push_back({label(e.spec) + " <" + weight_str(root.vector) + ">", sub.system, sub.generator});
    }
  }

  Result res;
  std::size_t checked = 0;
  for (const auto& c : cases) {
    Weight alpha = c.generator;
    // The integrability root is the regular one among alpha, 2 alpha. Without
    // one there are no even roots and every weight is spherical.
    bool has_even = true;
    if (!is_regular(alpha, c.system)) {
      has_even = c.system.is_root(Scalar(2) * alpha);
      if (has_even) alpha = Scalar(2) * alpha;
    }
    const int eps = has_even ? epsilon(alpha, c.system) : 0;
    const Base base({c.generator});
    for (int v = -4; v <= 12; ++v) {
      const Weight lambda = Scalar(v, 2) * alpha;
      bool want = true;
      if (has_even) {
        const Scalar h = coroot_eval(lambda, alpha, c.system);
        want = h >= 0 && is_integer(h / Scalar(eps ? 4 : 2));
      }
      const bool got = decide_spherical(base, lambda, c.system).kind == Kind::Spherical;
      ++checked;
      if (want != got) res.issues.insert(c.name + " at lambda(h)=" + std::to_string(v));
    }
  }
  res.summary = std::to_string(cases.size()) + " rank-one systems, " + std::to_string(checked) + " weights";
  return res;
}

std::vector<CatalogEntry> catalog_sample() {
  std::vector<CatalogEntry> out;
  for (const auto& f : list_families()) out.push_back(build_pair(make(f.id)));
  for (auto [m, n] : {std::pair{3, 1}, {4, 2}}) out.push_back(build_pair(make("gl-osp", m, n)));
  for (auto [r, s] : {std::pair{2, 1}, {2, 2}}) {
    out.push_back(build_pair(make("gl-gl", -1, -1, r, s)));
    out.push_back(build_pair(make("osp-osp", -1, -1, r, s)));
  }
  out.push_back(build_pair(make("osp2r-osp", -1, 3, 3, 1)));
  out.push_back(build_pair(make("osp2r4s", -1, -1, 3, 1)));
  for (Scalar a : {q(1, 2), q(-3)}) out.push_back(build_pair(make("d21a", -1, -1, -1, -1, a)));
  for (Scalar k : {q(-1), q(-1, 2), q(2), q(-3), q(1, 2)})
    for (int n : {1, 2})
      for (const char* fam : {"bc", "c"})
        if (auto e = try_build(make(fam, -1, n, 2, 1, k))) out.push_back(std::move(*e));
  return out;
}

// Criterion 4
Result axioms() {
  Result res;
  std::size_t systems = 0;
  const std::set<Scalar> allowed{q(1), q(-1), q(2), q(-2), q(1, 2), q(-1, 2)};
  for (const auto& e : catalog_sample()) {
    ++systems;
    const auto& sys = e.system;
    const std::string name = label(e.spec);
    for (const auto& a : sys.roots()) {
      if (!sys.is_root(-a.vector)) res.issues.insert(name + ": -" + weight_str(a.vector) + " missing");
      if (const Root* d = sys.find(Scalar(2) * a.vector); d && d->mult.odd != 0)
        res.issues.insert(name + ": odd part at 2" + weight_str(a.vector));
      for (const auto& b : sys.roots()) {
        // proportional roots: b = c a
        std::optional<Scalar> c;
        bool prop = true;
        for (std::size_t i = 0; i < a.vector.dim() && prop; ++i) {
          if (a.vector[i] == 0) {
            prop = b.vector[i] == 0;
          } else {
            const Scalar ci = b.vector[i] / a.vector[i];
            if (c && *c != ci) prop = false;
            c = ci;
          }
        }
        if (prop && c && !allowed.count(*c))
          res.issues.insert(name + ": " + weight_str(b.vector) + " is " + format_scalar(*c) + " times a root");
        if (is_regular(a.vector, sys)) {
          const Scalar v = coroot_eval(b.vector, a.vector, sys);
          if (!is_integer(v / Scalar(epsilon(a.vector, sys) ? 2 : 1)))
            res.issues.insert(name + ": " + weight_str(b.vector) + "(h_" + weight_str(a.vector) + ") = " +
                              format_scalar(v));
        }
      }
    }
  }
  res.summary = std::to_string(systems) + " systems";
  return res;
}

// Criterion 5
Result base_graphs() {
  std::vector<CatalogEntry> small;
  for (const auto& e : catalog_sample())
    if (e.system.dim() <= 3) small.push_back(e);
  Result res;
  std::size_t nodes = 0;
  for (const auto& e : small) {
    const auto& sys = e.system;
    const std::string name = label(e.spec);
    const auto g = enumerate_bases(sys, e.default_base);
    nodes += g.nodes.size();
    if (!g.connected()) res.issues.insert(name + ": graph not connected");
    for (const auto& cls : g.singular_classes()) {
      auto ref = principal_roots(g.nodes[cls.front()], sys);
      std::sort(ref.begin(), ref.end());
      for (auto i : cls) {
        auto p = principal_roots(g.nodes[i], sys);
        std::sort(p.begin(), p.end());
        if (p != ref) res.issues.insert(name + ": principal roots vary in a class");
      }
      const auto members = equivalence_class(g.nodes[cls.front()], sys);
      for (const auto& gamma : ref) {
        try {
          const auto ex = find_base_exposing(members, gamma);
          if (!exposed_simple(ex.base, gamma)) res.issues.insert(name + ": exposure not simple");
        } catch (const Error&) {
          res.issues.insert(name + ": cannot expose " + weight_str(gamma));
        }
      }
    }
    // Involution and transport round-trips over a small weight box.
    std::vector<Weight> box;
    {
      Weight w(sys.dim());
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == w.dim()) {
          box.push_back(w);
          return;
        }
        for (int v = -3; v <= 3; ++v) {
          w[i] = Scalar(v);
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    }
    for (const auto& b : g.nodes) {
      for (const auto& a : b.simples()) {
        const Base there = reflect_base(a, b, sys);
        if (reflect_base(-a, there, sys) != b) res.issues.insert(name + ": reflection is not an involution");
        if (is_regular(a, sys)) continue;
        for (const auto& w : box) {
          const auto out = transport_weight(a, w, sys);
          if (out.kind == WeightTransportOutcome::Kind::Critical) continue;
          if (transport_weight(-a, out.weight, sys).weight != w)
            res.issues.insert(name + ": transport round-trip fails at " + weight_str(w));
        }
      }
    }
  }
  res.summary = std::to_string(small.size()) + " systems, " + std::to_string(nodes) + " bases";
  return res;
}

// Criterion 6
Result monoid() {
  Result res;
  std::mt19937_64 rng(20260);
  std::size_t pairs = 0;
  for (const auto& f : list_families()) {
    const auto e = build_pair(make(f.id));
    const SphericityPlan plan(e.system, e.default_base);
    int box = 8;
    while (box > 2 && std::pow(2.0 * box + 1, static_cast<double>(e.system.dim())) > 2e6) --box;
    const auto sph = enumerate_spherical(plan, e.system.dim(), box);
    std::uniform_int_distribution<std::size_t> pick(0, sph.size() - 1);
    std::size_t bad = 0;
    for (int i = 0; i < 500; ++i, ++pairs)
      if (!monoid_sum_check(sph[pick(rng)], sph[pick(rng)], e.default_base, e.system)) ++bad;
    if (bad) res.issues.insert(label(e.spec) + ": " + std::to_string(bad) + " of 500 sums not spherical");
  }
  res.summary = std::to_string(pairs) + " pairs";
  return res;
}

// Criterion 7
Result traces() {
  Result res;
  struct Trace {
    const char* family;
    Weight root;
    std::vector<Weight> want;
  };
  const std::vector<Trace> ts{
      {"ab13-sl14", {q(1, 2), q(-1, 2)}, {{q(-1, 2), q(1, 2)}, {q(1), q(0)}}},
      {"ab13-gosp24",
       {q(1, 2), q(-1, 2), q(-1, 2)},
       {{q(1, 2), q(1, 2), q(-1, 2)}, {q(-1, 2), q(1, 2), q(1, 2)}, {q(1), q(-1), q(0)}}},
      {"ab13-d212",
       {q(-1, 2), q(1, 2), q(1, 2)},
       {{q(0), q(1), q(-1)}, {q(0), q(0), q(1)}, {q(1, 2), q(-1, 2), q(-1, 2)}}},
  };
  for (const auto& t : ts) {
    const auto e = build_pair(make(t.family));
    const auto got = reflect_base(t.root, e.default_base, e.system).simples();
    if (got != t.want) res.issues.insert(std::string(t.family) + ": trace differs");
  }
  res.summary = "3 printed reflections";
  return res;
}

// Criterion 8
Result spot_checks() {
  Result res;
  auto expect = [&](const PairSpec& p, const Weight& w, bool want) {
    const auto e = build_pair(p);
    const bool got = decide_spherical(e.default_base, w, e.system).kind == Kind::Spherical;
    if (got != want)
      res.issues.insert(label(e.spec) + " " + weight_str(w) + ": expected " + (want ? "spherical" : "not spherical"));
  };
  for (Scalar a : {q(2), q(1, 2), q(-3)}) {
    expect(make("d21a", -1, -1, -1, -1, a), {q(2), q(0)}, true);
    expect(make("d21a", -1, -1, -1, -1, a), {q(0), q(2)}, false);
  }
  expect(make("ab13-sl14"), {q(1), q(1)}, false);
  expect(make("ab13-sl14"), {q(2), q(0)}, true);
  for (int a = 0; a <= 8; a += 2)
    for (int b = 0; b <= a; b += 2) expect(make("ab13-d212"), {q(a + b), q(a), q(b)}, true);
  res.summary = "d(2,1;a), ab(1|3) rows";
  return res;
}

// Criterion 9
Result ag12_variants() {
  Result res;
  const auto e = build_pair(make("ag12-d213"));
  const auto table = crosscheck(e, 8, "table", 0, 4);
  const auto item = crosscheck(e, 8, "item11", 0, 4);
  std::printf("  variant table:  %llu disagreements\n", static_cast<unsigned long long>(table.disagreements));
  std::printf("  variant item11: %llu disagreements\n", static_cast<unsigned long long>(item.disagreements));
  for (const auto& s : item.disagreement_samples)
    std::printf("      e.g. %s: procedure %s, item11 %s\n", weight_str(s.lambda).c_str(), to_string(s.procedure),
                s.oracle ? "accepts" : "rejects");
  if (table.clean() == item.clean()) res.issues.insert("variants are not separated by the procedure");
  res.summary = std::string("procedure matches the ") + (table.clean() ? "table" : "item11") + " variant";
  return res;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria{
      {"closed-form table equivalence, box 8", table_equivalence},
      {"BC/C example cases, box 10", example_cases},
      {"rank-one integrability", rank_one},
      {"root system axioms", axioms},
      {"base graph properties", base_graphs},
      {"monoid property", monoid},
      {"printed reflection traces", traces},
      {"known-answer spot checks", spot_checks},
      {"ag(1|2) variant report", ag12_variants},
  };

  bool as_documented = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    std::printf("criterion %d: %s\n", id, criteria[i].first);
    std::fflush(stdout);
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& ex) {
      r.issues.insert(std::string("exception: ") + ex.what());
    }
    for (const auto& s : r.issues) std::printf("  issue: %s\n", s.c_str());
    std::printf("%s %d: %s (%s)\n", r.issues.empty() ? "PASS" : "FAIL", id, criteria[i].first, r.summary.c_str());
    const auto it = kKnown.find(id);
    const std::set<std::string> known = it == kKnown.end() ? std::set<std::string>{} : it->second;
    if (r.issues != known) {
      as_documented = false;
      for (const auto& s : known)
        if (!r.issues.count(s)) std::printf("  documented issue not observed: %s\n", s.c_str());
      for (const auto& s : r.issues)
        if (!known.count(s)) std::printf("  undocumented issue: %s\n", s.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("failures %s the documented discrepancies\n", as_documented ? "match" : "do NOT match");
  return as_documented ? 0 : 1;
}
