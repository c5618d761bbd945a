#include <doctest.h>

#include <algorithm>
#include <set>

#include "helgason/basegraph.hpp"
#include "helgason/catalog.hpp"
#include "helgason/reflections.hpp"
#include "support.hpp"

using namespace helgason;
using namespace testing_support;

namespace {

// Every unordered simple set of the right size, by brute force.
std::set<std::vector<Weight>> all_bases(const RestrictedRootSystem& sys, std::size_t size) {
  std::set<std::vector<Weight>> out;
  const auto& roots = sys.roots();
  std::vector<std::size_t> pick(size);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == size) {
      std::vector<Weight> cand;
      for (auto i : pick) cand.push_back(roots[i].vector);
      try {
        out.insert(validate_base(cand, sys).canonical());
      } catch (const Error&) {
      }
      return;
    }
    for (std::size_t i = from; i < roots.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Weight> sorted_principal(const Base& b, const RestrictedRootSystem& sys) {
  auto p = principal_roots(b, sys);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_SUITE("basegraph") {
  TEST_CASE("rank-one regular system has two bases") {
    const Weight a{1};
    const RestrictedRootSystem sys(1, {{1}}, {{a, {2, 0}}, {-a, {2, 0}}});
    const auto g = enumerate_bases(sys, Base({a}));
    CHECK(g.nodes.size() == 2);
    CHECK(g.connected());
    CHECK(equivalence_class(Base({a}), sys).size() == 1);
  }

  TEST_CASE("BC_{-1}(1,1): the graph reaches every base") {
    const auto e = build_pair(bc(q(-1), 1, 1));
    const auto g = enumerate_bases(e.system, e.default_base);
    std::set<std::vector<Weight>> found;
    for (const auto& n : g.nodes) found.insert(n.canonical());
    CHECK(found == all_bases(e.system, 2));
    CHECK(g.connected());
  }

  TEST_CASE("every rank <= 3 catalog graph is connected and exhaustive") {
    for (const char* id : {"d21a", "ab13-sl14", "ab13-gosp24", "ab13-d212", "ag12-d213"}) {
      CAPTURE(id);
      const auto e = build_pair(spec(id));
      const auto g = enumerate_bases(e.system, e.default_base);
      std::set<std::vector<Weight>> found;
      for (const auto& n : g.nodes) found.insert(n.canonical());
      CHECK(found.size() == g.nodes.size());
      CHECK(found == all_bases(e.system, e.default_base.size()));
      CHECK(g.connected());
    }
  }

  TEST_CASE("d(2,1;a) graphs do not depend on a") {
    const auto a = build_pair(d21a(q(2)));
    const auto b = build_pair(d21a(q(1, 2)));
    const auto c = build_pair(d21a(q(-3)));
    const auto ga = enumerate_bases(a.system, a.default_base);
    CHECK(ga == enumerate_bases(b.system, b.default_base));
    CHECK(ga == enumerate_bases(c.system, c.default_base));
  }

  TEST_CASE("singular classes share principal roots") {
    for (const auto& f : list_families()) {
      CAPTURE(f.id);
      const auto e = build_pair(spec(f.id));
      const auto ref = sorted_principal(e.default_base, e.system);
      for (const auto& m : equivalence_class(e.default_base, e.system))
        CHECK(sorted_principal(m.base, e.system) == ref);
    }
  }

  TEST_CASE("ab(1|3)/sl(1|4): eps becomes simple in the class") {
    const auto e = build_pair(spec("ab13-sl14"));
    const auto cls = equivalence_class(e.default_base, e.system);
    CHECK(std::any_of(cls.begin(), cls.end(), [](const ClassMember& m) { return m.base.contains(Weight{1, 0}); }));
  }

  TEST_CASE("exposing principal roots") {
    const auto e = build_pair(bc(q(-1), 2, 2));
    const Weight g12{1, -1, 0, 0};
    const auto direct = find_base_exposing(e.default_base, g12, e.system);
    CHECK(direct.path.empty());
    CHECK(direct.base == e.default_base);

    // gamma_r needs r_{gamma_r - nu_1}, ..., r_{gamma_r - nu_s}
    const auto x = build_pair(bc(q(-1), 1, 2));
    const auto ex = find_base_exposing(x.default_base, Weight{1, 0, 0}, x.system);
    CHECK(ex.path == std::vector<Weight>{{1, -1, 0}, {1, 0, -1}});
    CHECK(ex.exposed == Weight{1, 0, 0});

    for (const auto& f : list_families()) {
      CAPTURE(f.id);
      const auto en = build_pair(spec(f.id));
      for (const auto& gamma : principal_roots(en.default_base, en.system))
        CHECK_NOTHROW(find_base_exposing(en.default_base, gamma, en.system));
    }
  }

  TEST_CASE("exposing nu_s in the D-type pair") {
    PairSpec p = spec("osp2r-osp");
    p.r = 3;
    p.s = 1;
    p.n = 3;
    const auto e = build_pair(p);
    const Weight nu{0, 0, 0, 1};
    const auto ex = find_base_exposing(e.default_base, nu, e.system);
    CHECK(ex.path == std::vector<Weight>{{-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}});

    // The sequence r_{nu-e1}, r_{nu-e2}, r_{e3} leaves nu non-simple.
    Base b = e.default_base;
    for (const Weight& a : {Weight{-1, 0, 0, 1}, Weight{0, -1, 0, 1}}) b = reflect_base(a, b, e.system);
    b = reflect_base(Weight{0, 0, 1, 0}, b, e.system);
    CHECK_FALSE(exposed_simple(b, nu));
  }

  TEST_CASE("minimal paths are all of the same length and all expose") {
    const auto e = build_pair(bc(q(-1), 2, 2));
    const Weight g{0, 1, 0, 0};
    const auto paths = all_minimal_exposing_paths(e.default_base, g, e.system);
    REQUIRE_FALSE(paths.empty());
    for (const auto& p : paths) {
      CHECK(p.path.size() == paths.front().path.size());
      CHECK(exposed_simple(p.base, g));
    }
  }

  TEST_CASE("singular-only enumeration stays inside the class") {
    const auto e = build_pair(spec("ab13-gosp24"));
    const auto g = enumerate_bases(e.system, e.default_base, true);
    CHECK(g.nodes.size() == equivalence_class(e.default_base, e.system).size());
    CHECK(g.singular_classes().size() == 1);
  }
}
