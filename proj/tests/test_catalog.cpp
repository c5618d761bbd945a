#include <doctest.h>

#include <algorithm>
#include <set>

#include "helgason/catalog.hpp"
#include "support.hpp"

using namespace helgason;
using namespace testing_support;

TEST_SUITE("catalog") {
  TEST_CASE("thirteen families in a fixed order") {
    const auto& fams = list_families();
    REQUIRE(fams.size() == 13);
    CHECK(std::count_if(fams.begin(), fams.end(), [](const FamilyInfo& f) { return !f.generic; }) == 11);
    CHECK(fams.front().id == "gl-osp");
    CHECK(fams[6].id == "d21a");
    CHECK(fams[6].constraints.find("a != -1") != std::string::npos);
    CHECK(fams.back().id == "c");
    CHECK(&list_families() == &fams);
    CHECK_THROWS_AS(family_info("nosuch"), Error);
  }

  TEST_CASE("d(2,1;a)") {
    const auto e = build_pair(d21a(q(2)));
    CHECK(e.default_base.simples() == std::vector<Weight>{{1, -1}, {0, 2}});
    CHECK(e.system.gram()[1][1] == q(2));
    try {
      build_pair(d21a(q(-1)));
      FAIL("a = -1 must be rejected");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::ParameterViolation);
    }
  }

  TEST_CASE("ab(1|3) / sl(1|4)") {
    const auto e = build_pair(spec("ab13-sl14"));
    CHECK(e.system.gram()[0][0] == q(1, 3));
    CHECK(e.system.gram()[1][1] == q(-1));
    CHECK(e.default_base.simples() == std::vector<Weight>{{q(1, 2), q(-1, 2)}, {0, 1}});
    const Root& sing = e.system.root(Weight{q(1, 2), q(-1, 2)});
    CHECK(sing.mult == Multiplicity{0, 4});
    CHECK(classify_root(sing.vector, e.system) == RootClass::Singular);
  }

  TEST_CASE("every catalog entry satisfies its own structure") {
    std::vector<PairSpec> specs;
    for (const auto& f : list_families()) specs.push_back(spec(f.id));
    specs.push_back(d21a(q(1, 2)));
    specs.push_back(d21a(q(-3)));
    for (const auto& p : specs) {
      CAPTURE(p.family);
      const auto e = build_pair(p);
      auto pi = principal_roots(e.default_base, e.system);
      auto expected = e.expected_principal;
      std::sort(pi.begin(), pi.end());
      std::sort(expected.begin(), expected.end());
      CHECK(pi == expected);
      for (const auto& r : e.system.roots()) {
        CHECK(e.system.is_root(-r.vector));
        if (const Root* d = e.system.find(Scalar(2) * r.vector)) CHECK(d->mult.odd == 0);
      }
    }
  }

  TEST_CASE("parameter constraints") {
    PairSpec p = spec("gl-gl");
    p.r = 2;
    p.m = 3;
    CHECK_THROWS_AS(build_pair(p), Error);
    PairSpec q2 = spec("osp2r-osp");
    q2.r = 2;
    q2.s = 1;
    q2.n = 2;
    CHECK_THROWS_AS(build_pair(q2), Error);
    PairSpec g = bc(q(-1), 1, 1, 2);
    CHECK_THROWS_AS(build_pair(g), Error);
    CHECK_THROWS_AS(build_pair(spec("nosuch")), Error);
  }

  TEST_CASE("weyl orbits") {
    const auto e = build_pair(bc(q(-1), 1, 1));
    const auto orbit = weyl_orbit(Weight{1, 1}, e.system);
    const std::set<Weight> got(orbit.begin(), orbit.end());
    const std::set<Weight> want{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    CHECK(got == want);
    CHECK(weyl_orbit(Weight{0, 0}, e.system) == std::vector<Weight>{{0, 0}});

    const auto g = build_pair(spec("ab13-gosp24"));
    const std::vector<Weight> even{{1, -1, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto sing = weyl_orbit(Weight{q(1, 2), q(1, 2), q(1, 2)}, even, g.system.gram());
    CHECK(sing.size() == 8);
    for (const auto& v : sing) {
      for (std::size_t i = 0; i < 3; ++i) CHECK((v[i] == q(1, 2) || v[i] == q(-1, 2)));
      CHECK(classify_root(v, g.system) == RootClass::Singular);
    }
  }

  TEST_CASE("gl(2|2)-type pairs build despite the isotropic supertrace direction") {
    PairSpec p = spec("gl-osp");
    p.m = 4;
    p.n = 2;
    const auto e = build_pair(p);
    CHECK(e.system.dim() == 6);
    CHECK(e.default_base.size() == 5);
  }
}
