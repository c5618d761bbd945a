#include <doctest.h>

#include <random>

#include "helgason/catalog.hpp"
#include "helgason/crosscheck.hpp"
#include "helgason/sphericity.hpp"
#include "support.hpp"

using namespace helgason;
using namespace testing_support;
using K = SphericityVerdict::Kind;

namespace {

K verdict(const CatalogEntry& e, const Weight& w) { return decide_spherical(e.default_base, w, e.system).kind; }

}  // namespace

TEST_SUITE("sphericity") {
  TEST_CASE("necessary conditions") {
    const auto e = build_pair(bc(q(-1), 1, 1));
    CHECK(necessary_conditions(e.default_base, Weight{0, 0}, e.system));
    CHECK_FALSE(necessary_conditions(e.default_base, Weight{1, 0}, e.system));
    CHECK(necessary_conditions(e.default_base, Weight{2, 2}, e.system));
  }

  TEST_CASE("BC_{-1}(1,1) case I examples") {
    const auto e = build_pair(bc(q(-1), 1, 1));
    const auto yes = decide_spherical(e.default_base, Weight{2, 2}, e.system);
    CHECK(yes.kind == K::Spherical);
    CHECK(yes.certificate.size() == principal_roots(e.default_base, e.system).size());
    for (const auto& c : yes.certificate) CHECK(c.pass);

    const auto no = decide_spherical(e.default_base, Weight{0, 2}, e.system);
    CHECK(no.kind == K::NotSpherical);
    REQUIRE(no.witness);
    CHECK_FALSE(no.witness->pass);
    CHECK(no.witness->gamma == Weight{1, 0});
  }

  TEST_CASE("zero is spherical everywhere") {
    for (const auto& f : list_families()) {
      CAPTURE(f.id);
      const auto e = build_pair(spec(f.id));
      CHECK(verdict(e, Weight(e.system.dim())) == K::Spherical);
    }
  }

  TEST_CASE("d(2,1;a): a = 0 forces b = 0") {
    for (Scalar a : {q(2), q(1, 2), q(-3)}) {
      const auto e = build_pair(d21a(a));
      CHECK(verdict(e, Weight{0, 2}) == K::NotSpherical);
      CHECK(verdict(e, Weight{2, 0}) == K::Spherical);
      CHECK(verdict(e, Weight{2, 2}) == K::Spherical);
    }
  }

  TEST_CASE("osp(2r|4s) tail: odd b_s fails, b_s = 2r with every a_i nonzero passes") {
    PairSpec p = spec("osp2r4s");
    p.r = 2;
    p.s = 1;
    const auto e = build_pair(p);
    CHECK(verdict(e, Weight{4, 2, 3}) == K::NotSpherical);
    CHECK(verdict(e, Weight{4, 2, 4}) == K::Spherical);
    CHECK(verdict(e, Weight{4, 2, 2}) == K::NotSpherical);
  }

  TEST_CASE("plans agree with the one-shot procedure") {
    const auto e = build_pair(bc(q(-1, 2), 2, 1));
    const SphericityPlan plan(e.system, e.default_base);
    for (int a = -2; a <= 4; a += 2)
      for (int b = -2; b <= 4; b += 2)
        for (int c = -2; c <= 4; c += 2) {
          const Weight w{q(a), q(b), q(c)};
          const auto full = decide_spherical(e.default_base, w, e.system);
          CHECK(plan.decide(w) == full);
          CHECK(plan.classify(w) == full.kind);
        }
  }

  TEST_CASE("non-integral weights are rejected, not rounded") {
    const auto e = build_pair(bc(q(-1), 1, 1));
    CHECK(verdict(e, Weight{q(4, 3), q(0)}) == K::NotSpherical);
    CHECK(verdict(e, Weight{q(9, 2), q(1, 2)}) == K::NotSpherical);
  }

  TEST_CASE("monoid property on sampled pairs") {
    std::mt19937 rng(7);
    for (const char* id : {"gl-gl", "osp-gl", "d21a", "ab13-sl14", "ag12-d213"}) {
      CAPTURE(id);
      const auto e = build_pair(spec(id));
      const SphericityPlan plan(e.system, e.default_base);
      const auto sph = enumerate_spherical(plan, e.system.dim(), 6, 1);
      REQUIRE(sph.size() > 1);
      std::uniform_int_distribution<std::size_t> pick(0, sph.size() - 1);
      CHECK(monoid_sum_check(Weight(e.system.dim()), sph.back(), e.default_base, e.system));
      for (int i = 0; i < 40; ++i)
        CHECK(monoid_sum_check(sph[pick(rng)], sph[pick(rng)], e.default_base, e.system));
    }
    const auto e = build_pair(bc(q(-1), 1, 1));
    CHECK_THROWS_AS(monoid_sum_check(Weight{0, 2}, Weight{2, 0}, e.default_base, e.system), Error);
  }

  TEST_CASE("conjectural multiplicity bound") {
    const auto e = build_pair(bc(q(-1, 2), 1, 1, 2));
    CHECK(conjectural_m(Weight{1, -1}, e.system) == q(2));
    CHECK(conjectural_m(Weight{1, 0}, e.system) == q(-2));

    const auto g2 = build_pair(spec("ag12-d213"));
    for (const auto& r : g2.system.roots()) {
      const Scalar m = conjectural_m(r.vector, g2.system);
      CHECK_FALSE((is_integer(m) && m > 0));
    }
    CHECK(conjectural_simplicity(g2.default_base, Weight{2, 2}, g2.system));
    CHECK(conjectural_simplicity(e.default_base, Weight{0, 0}, e.system));
  }
}
