#include "helgason/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace helgason {

namespace {

using M = Multiplicity;

[[noreturn]] void violation(const std::string& family, const std::string& what) {
  throw Error(ErrorKind::ParameterViolation, family + ": " + what);
}

struct Builder {
  std::size_t dim;
  Matrix gram;
  std::vector<std::string> labels;
  std::map<Weight, Multiplicity> roots;

  explicit Builder(std::size_t d) : dim(d), gram(d, std::vector<Scalar>(d, Scalar(0))) {}

  Weight e(std::size_t i) const { return Weight::unit(dim, i); }
  void set_norm(std::size_t i, Scalar v) { gram[i][i] = v; }
  void add(const Weight& v, Multiplicity m) {
    roots[v] = m;
    roots[-v] = m;
  }

  RestrictedRootSystem finish(const std::string& tag) const {
    std::vector<Root> out;
    for (const auto& [v, m] : roots) out.push_back({v, m});
    return RestrictedRootSystem(dim, gram, std::move(out), tag, labels);
  }
};

// One BC/C-type component of a two-component system.
struct Component {
  int rank = 0;
  std::size_t offset = 0;
  std::string label;
  Scalar norm{1};
  Multiplicity mid;
  std::optional<Multiplicity> shorts;
  Multiplicity longs{1, 0};
};

struct Assembled {
  RestrictedRootSystem system;
  Base base;
  std::vector<Weight> principal;
};

// Builds x (first in the base chain), y, and the singular roots +-x_i +- y_j.
// Base: x_1-x_2, ..., x_r-y_1, y_1-y_2, ..., (2)y_s.
Assembled mixed_system(const std::string& tag, const Component& x, const Component& y,
                       std::optional<Multiplicity> singular) {
  Builder b(static_cast<std::size_t>(x.rank + y.rank));
  for (const Component* c : {&x, &y}) {
    for (int i = 0; i < c->rank; ++i) {
      b.set_norm(c->offset + i, c->norm);
      b.labels.resize(b.dim);
      b.labels[c->offset + i] = c->label + std::to_string(i + 1);
    }
  }
  auto v = [&](const Component& c, int i) { return b.e(c.offset + i); };
  for (const Component* c : {&x, &y}) {
    for (int i = 0; i < c->rank; ++i) {
      for (int j = i + 1; j < c->rank; ++j) {
        b.add(v(*c, i) - v(*c, j), c->mid);
        b.add(v(*c, i) + v(*c, j), c->mid);
      }
      if (c->shorts) b.add(v(*c, i), *c->shorts);
      b.add(Scalar(2) * v(*c, i), c->longs);
    }
  }
  if (singular)
    for (int i = 0; i < x.rank; ++i)
      for (int j = 0; j < y.rank; ++j) {
        b.add(v(x, i) - v(y, j), *singular);
        b.add(v(x, i) + v(y, j), *singular);
      }

  std::vector<Weight> simples, principal;
  auto chain = [&](const Component& c) {
    for (int i = 0; i + 1 < c.rank; ++i) simples.push_back(v(c, i) - v(c, i + 1));
  };
  auto last = [&](const Component& c) { return c.shorts ? v(c, c.rank - 1) : Scalar(2) * v(c, c.rank - 1); };
  chain(x);
  if (x.rank > 0 && y.rank > 0) simples.push_back(v(x, x.rank - 1) - v(y, 0));
  chain(y);
  if (y.rank > 0)
    simples.push_back(last(y));
  else
    simples.push_back(last(x));

  for (const Component* c : {&x, &y}) {
    if (c->rank == 0) continue;
    for (int i = 0; i + 1 < c->rank; ++i) principal.push_back(v(*c, i) - v(*c, i + 1));
    const bool short_even = c->shorts && c->shorts->even > 0;
    principal.push_back(short_even ? v(*c, c->rank - 1) : Scalar(2) * v(*c, c->rank - 1));
  }
  RestrictedRootSystem sys = b.finish(tag);
  Base base = validate_base(simples, sys);
  return {std::move(sys), std::move(base), std::move(principal)};
}

const std::vector<FamilyInfo> kFamilies = {
    {"gl-osp", "(gl(m|2n), osp(m|2n))", "A(m-1,n-1)", "m n", "m >= 1, n >= 1",
     "a_1..a_m on eps_i, b_1..b_n on nu_i = (delta_{2i-1}+delta_{2i})/2"},
    {"gl-gl", "(gl(m|n), gl(r|s) x gl(m-r|n-s))", "(B)C_{-1}(r,s)", "m n r s", "r <= m/2, s <= n/2",
     "a_1..a_r on gamma_i = (eps_i-eps_{m-i+1})/2, b_1..b_s on nu_i = (delta_i-delta_{n-i+1})/2"},
    {"osp-gl", "(osp(2m|2n), gl(m|n))", "(B)C_{-1/2}(n,m)", "m n", "m >= 1, n >= 1",
     "a_1..a_m on gamma_i = (eps_{2i-1}+eps_{2i})/2, b_1..b_n on delta_i"},
    {"osp-osp", "(osp(m|2n), osp(r|2s) x osp(m-r|2n-2s))", "BC_{-1/2}(r,s)", "m n r s", "r < m/2, s <= n/2",
     "a_1..a_r on eps_i, b_1..b_s on nu_i = (delta_{2i-1}+delta_{2i})/2"},
    {"osp2r-osp", "(osp(2r|2n), osp(r|2s) x osp(r|2n-2s))", "D_r + BC_s with singular W eps_1", "r s n", "s < n/2",
     "a_1..a_r on eps_i, b_1..b_s on nu_i = (delta_{2i-1}+delta_{2i})/2"},
    {"osp2r4s", "(osp(2r|4s), osp(r|2s) x osp(r|2s))", "D(r,s)", "r s", "r >= 2, s >= 1",
     "a_1..a_r on eps_i, b_1..b_s on nu_i = (delta_{2i-1}+delta_{2i})/2"},
    {"d21a", "(d(2,1;a), osp(2|2) x so(2))", "C_a(1,1)", "a", "a != -1 (and a != 0)", "a on alpha, b on beta"},
    {"ab13-sl14", "(ab(1|3), sl(1|4))", "C_{-3}(1,1)", "", "none", "a on eps, b on delta"},
    {"ab13-gosp24", "(ab(1|3), gosp(2|4))", "B_2 + C_1 with singular W(omega_2 + omega_1)", "", "none",
     "a_1, a_2 on eps_1, eps_2, b on delta"},
    {"ab13-d212", "(ab(1|3), d(2,1;2) x sl(2))", "B_3 with singular W omega_3", "", "none", "a_1, a_2, a_3 on eps_i"},
    {"ag12-d213", "(ag(1|2), d(2,1;3))", "G_2", "", "none", "a_1, a_2 on the fundamental weights omega_1, omega_2"},
    {"bc", "BC_k(r,s)", "BC_k(r,s), singular multiplicity (0|2n)", "k r s n", "k != 0; k = -1 forces n = 1",
     "a_1..a_r on gamma_i, b_1..b_s on nu_i", true},
    {"c", "C_k(r,s)", "C_k(r,s), singular multiplicity (0|2n)", "k r s n", "k != 0; k = -1 forces n = 1",
     "a_1..a_r on gamma_i, b_1..b_s on nu_i", true},
};

int pick(int value, int fallback) { return value >= 0 ? value : fallback; }

CatalogEntry gl_osp(const PairSpec& p) {
  if (p.m < 1 || p.n < 1) violation(p.family, "m >= 1, n >= 1");
  const auto m = static_cast<std::size_t>(p.m), n = static_cast<std::size_t>(p.n);
  Builder b(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    b.set_norm(i, 1);
    b.labels.push_back("eps" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    b.set_norm(m + j, Scalar(-1, 2));
    b.labels.push_back("nu" + std::to_string(j + 1));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) b.add(b.e(i) - b.e(j), M{1, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add(b.e(m + i) - b.e(m + j), M{4, 0});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add(b.e(i) - b.e(m + j), M{0, 2});
  std::vector<Weight> simples, principal;
  for (std::size_t i = 0; i + 1 < m; ++i) principal.push_back(b.e(i) - b.e(i + 1));
  for (std::size_t j = 0; j + 1 < n; ++j) principal.push_back(b.e(m + j) - b.e(m + j + 1));
  for (std::size_t i = 0; i + 1 < m; ++i) simples.push_back(b.e(i) - b.e(i + 1));
  simples.push_back(b.e(m - 1) - b.e(m));
  for (std::size_t j = 0; j + 1 < n; ++j) simples.push_back(b.e(m + j) - b.e(m + j + 1));
  RestrictedRootSystem sys = b.finish(p.family);
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), std::move(principal), p.family};
}

CatalogEntry from_mixed(const PairSpec& p, Assembled a) {
  return {p, std::move(a.system), std::move(a.base), std::move(a.principal), p.family};
}

CatalogEntry gl_gl(const PairSpec& p) {
  if (p.r < 1 || 2 * p.r > p.m) violation(p.family, "r <= m/2 (with r >= 1)");
  if (p.s < 0 || 2 * p.s > p.n) violation(p.family, "s <= n/2");
  const int dm = p.m - 2 * p.r, dn = p.n - 2 * p.s;
  const bool shorts = dm + dn > 0;
  Component x{p.r, 0, "gamma", Scalar(1), M{2, 0}, std::nullopt, M{1, 0}};
  Component y{p.s, static_cast<std::size_t>(p.r), "nu", Scalar(-1), M{2, 0}, std::nullopt, M{1, 0}};
  if (shorts) {
    x.shorts = M{2 * dm, 2 * dn};
    y.shorts = M{2 * dn, 2 * dm};
  }
  return from_mixed(p, mixed_system(p.family, x, y, M{0, 2}));
}

CatalogEntry osp_gl(const PairSpec& p) {
  if (p.m < 1 || p.n < 1) violation(p.family, "m >= 1, n >= 1");
  const bool bc = p.m % 2 == 1;
  Component x{p.n, static_cast<std::size_t>(p.m), "delta", Scalar(1), M{1, 0}, std::nullopt, M{1, 0}};
  Component y{p.m, 0, "gamma", Scalar(-1, 2), M{4, 0}, std::nullopt, M{1, 0}};
  if (bc) {
    x.shorts = M{0, 2};
    y.shorts = M{4, 0};
  }
  return from_mixed(p, mixed_system(p.family, x, y, M{0, 2}));
}

CatalogEntry osp_osp(const PairSpec& p) {
  if (p.r < 1 || 2 * p.r >= p.m) violation(p.family, "r < m/2 (with r >= 1)");
  if (p.s < 0 || 2 * p.s > p.n) violation(p.family, "s <= n/2");
  const int dm = p.m - 2 * p.r, dn = p.n - 2 * p.s;
  Component x{p.r, 0, "eps", Scalar(1), M{1, 0}, M{2 * dm, 2 * dn}, M{1, 0}};
  Component y{p.s, static_cast<std::size_t>(p.r), "nu", Scalar(-1, 2), M{4, 0}, M{4 * dn, 2 * dm}, M{3, 0}};
  return from_mixed(p, mixed_system(p.family, x, y, M{0, 2}));
}

CatalogEntry generic_bc(const PairSpec& p, bool with_shorts) {
  const Scalar k = *p.deformation;
  if (k == 0) violation(p.family, "k != 0");
  if (p.r < 0 || p.s < 0 || p.r + p.s < 1) violation(p.family, "r, s >= 0 and r + s >= 1");
  if (p.n < 1) violation(p.family, "n >= 1");
  if (k == -1 && p.n != 1) violation(p.family, "k = -1 forces n = 1");
  Component x{p.r, 0, "gamma", Scalar(1), M{2, 0}, std::nullopt, M{1, 0}};
  Component y{p.s, static_cast<std::size_t>(p.r), "nu", k, M{2, 0}, std::nullopt, M{1, 0}};
  if (with_shorts) {
    x.shorts = M{2, 0};
    y.shorts = M{2, 0};
  }
  return from_mixed(p, mixed_system(p.family, x, y, M{0, 2 * p.n}));
}

// D_r on eps plus C_s / BC_s on nu; the base is nu-chain, nu_s - eps_1, eps-chain, then the tail.
CatalogEntry d_type(const PairSpec& p, bool osp2r) {
  const auto r = static_cast<std::size_t>(p.r), s = static_cast<std::size_t>(p.s);
  Builder b(r + s);
  for (std::size_t i = 0; i < r; ++i) {
    b.set_norm(i, 1);
    b.labels.push_back("eps" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < s; ++j) {
    b.set_norm(r + j, Scalar(-1, 2));
    b.labels.push_back("nu" + std::to_string(j + 1));
  }
  auto eps = [&](std::size_t i) { return b.e(i); };
  auto nu = [&](std::size_t j) { return b.e(r + j); };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      b.add(eps(i) - eps(j), M{1, 0});
      b.add(eps(i) + eps(j), M{1, 0});
    }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      b.add(nu(i) - nu(j), M{4, 0});
      b.add(nu(i) + nu(j), M{4, 0});
    }
    b.add(Scalar(2) * nu(i), M{3, 0});
    if (osp2r) b.add(nu(i), M{4 * (p.n - 2 * p.s), 2 * p.r});
  }
  if (osp2r)
    for (std::size_t i = 0; i < r; ++i) b.add(eps(i), M{0, 2 * p.n - 4 * p.s});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      b.add(eps(i) - nu(j), M{0, 2});
      b.add(eps(i) + nu(j), M{0, 2});
    }

  std::vector<Weight> simples, principal;
  for (std::size_t j = 0; j + 1 < s; ++j) simples.push_back(nu(j) - nu(j + 1));
  if (s > 0) simples.push_back(nu(s - 1) - eps(0));
  for (std::size_t i = 0; i + 1 < r; ++i) simples.push_back(eps(i) - eps(i + 1));
  simples.push_back(osp2r ? eps(r - 1) : eps(r - 2) + eps(r - 1));

  for (std::size_t i = 0; i + 1 < r; ++i) principal.push_back(eps(i) - eps(i + 1));
  principal.push_back(eps(r - 2) + eps(r - 1));
  for (std::size_t j = 0; j + 1 < s; ++j) principal.push_back(nu(j) - nu(j + 1));
  if (s > 0) principal.push_back(osp2r ? nu(s - 1) : Scalar(2) * nu(s - 1));

  RestrictedRootSystem sys = b.finish(p.family);
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), std::move(principal), p.family};
}

CatalogEntry osp2r_osp(const PairSpec& p) {
  if (p.r < 2) violation(p.family, "r >= 2");
  if (p.s < 0 || 2 * p.s >= p.n) violation(p.family, "s < n/2");
  return d_type(p, true);
}

CatalogEntry osp2r4s(const PairSpec& p) {
  if (p.r < 2 || p.s < 1) violation(p.family, "r >= 2, s >= 1");
  return d_type(p, false);
}

CatalogEntry d21a(const PairSpec& p) {
  const Scalar a = *p.deformation;
  if (a == 0 || a == -1) violation(p.family, "a != -1 (and a != 0)");
  Builder b(2);
  b.set_norm(0, 1);
  b.set_norm(1, a);
  b.labels = {"alpha", "beta"};
  const Weight al = b.e(0), be = b.e(1);
  b.add(Scalar(2) * al, M{1, 0});
  b.add(Scalar(2) * be, M{1, 0});
  b.add(al - be, M{0, 2});
  b.add(al + be, M{0, 2});
  RestrictedRootSystem sys = b.finish(p.family);
  const std::vector<Weight> simples{al - be, Scalar(2) * be};
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), {Scalar(2) * al, Scalar(2) * be}, p.family};
}

CatalogEntry ab13_sl14(const PairSpec& p) {
  Builder b(2);
  b.set_norm(0, Scalar(1, 3));
  b.set_norm(1, -1);
  b.labels = {"eps", "delta"};
  const Weight e = b.e(0), d = b.e(1);
  b.add(e, M{1, 0});
  b.add(d, M{1, 0});
  b.add(Scalar(1, 2) * (e - d), M{0, 4});
  b.add(Scalar(1, 2) * (e + d), M{0, 4});
  RestrictedRootSystem sys = b.finish(p.family);
  const std::vector<Weight> simples{Scalar(1, 2) * (e - d), d};
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), {e, d}, p.family};
}

CatalogEntry ab13_gosp24(const PairSpec& p) {
  Builder b(3);
  b.set_norm(0, Scalar(1, 3));
  b.set_norm(1, Scalar(1, 3));
  b.set_norm(2, -1);
  b.labels = {"eps1", "eps2", "delta"};
  const Weight e1 = b.e(0), e2 = b.e(1), d = b.e(2);
  b.add(e1 - e2, M{1, 0});
  b.add(e1 + e2, M{1, 0});
  b.add(e1, M{1, 0});
  b.add(e2, M{1, 0});
  b.add(d, M{1, 0});
  const std::vector<Weight> even{e1 - e2, e2, d};
  for (const auto& v : weyl_orbit(Scalar(1, 2) * (e1 + e2 + d), even, b.gram)) b.add(v, M{0, 2});
  RestrictedRootSystem sys = b.finish(p.family);
  const std::vector<Weight> simples{e2, Scalar(1, 2) * (e1 - e2 - d), d};
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), {e1 - e2, e2, d}, p.family};
}

CatalogEntry ab13_d212(const PairSpec& p) {
  Builder b(3);
  b.labels = {"eps1", "eps2", "eps3"};
  for (std::size_t i = 0; i < 3; ++i) b.set_norm(i, Scalar(1, 3));
  const Weight e1 = b.e(0), e2 = b.e(1), e3 = b.e(2);
  for (std::size_t i = 0; i < 3; ++i) {
    b.add(b.e(i), M{1, 0});
    for (std::size_t j = i + 1; j < 3; ++j) {
      b.add(b.e(i) - b.e(j), M{1, 0});
      b.add(b.e(i) + b.e(j), M{1, 0});
    }
  }
  const std::vector<Weight> even{e1 - e2, e2 - e3, e3};
  for (const auto& v : weyl_orbit(Scalar(1, 2) * (e1 + e2 + e3), even, b.gram)) b.add(v, M{0, 2});
  RestrictedRootSystem sys = b.finish(p.family);
  const std::vector<Weight> simples{e2 - e3, e1 - e2, Scalar(1, 2) * (-e1 + e2 + e3)};
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), {e1 - e2, e2 - e3, e3}, p.family};
}

// G2 in fundamental-weight coordinates; a1 = 2w1 - w2 short, a2 = -3w1 + 2w2 long.
CatalogEntry ag12_d213(const PairSpec& p) {
  Builder b(2);
  b.gram = {{2, 3}, {3, 6}};
  b.labels = {"omega1", "omega2"};
  const Weight a1{2, -1}, a2{-3, 2};
  for (const auto& v : {a1, a1 + a2, Scalar(2) * a1 + a2}) b.add(v, M{1, 2});
  for (const auto& v : {a2, Scalar(3) * a1 + a2, Scalar(3) * a1 + Scalar(2) * a2}) b.add(v, M{1, 0});
  RestrictedRootSystem sys = b.finish(p.family);
  const std::vector<Weight> simples{a1, a2};
  Base base = validate_base(simples, sys);
  return {p, std::move(sys), std::move(base), {a1, a2}, p.family};
}

}  // namespace

const std::vector<FamilyInfo>& list_families() { return kFamilies; }

const FamilyInfo& family_info(const std::string& id) {
  for (const auto& f : kFamilies)
    if (f.id == id) return f;
  throw Error(ErrorKind::UnknownFamily, "no family '" + id + "'");
}

PairSpec with_defaults(PairSpec p) {
  family_info(p.family);
  const std::string& f = p.family;
  if (f == "gl-osp" || f == "osp-gl") {
    p.m = pick(p.m, 2);
    p.n = pick(p.n, 1);
  } else if (f == "gl-gl" || f == "osp-osp") {
    p.r = pick(p.r, 1);
    p.s = pick(p.s, 1);
    p.m = pick(p.m, 2 * p.r + 1);
    p.n = pick(p.n, 2 * p.s + 1);
  } else if (f == "osp2r-osp") {
    p.r = pick(p.r, 2);
    p.s = pick(p.s, 1);
    p.n = pick(p.n, 2 * p.s + 1);
  } else if (f == "osp2r4s") {
    p.r = pick(p.r, 2);
    p.s = pick(p.s, 1);
  } else if (f == "d21a") {
    if (!p.deformation) p.deformation = Scalar(2);
  } else if (f == "bc" || f == "c") {
    if (!p.deformation) p.deformation = Scalar(-1);
    p.r = pick(p.r, 1);
    p.s = pick(p.s, 1);
    p.n = pick(p.n, 1);
  }
  return p;
}

CatalogEntry build_pair(const PairSpec& spec) {
  const PairSpec p = with_defaults(spec);
  const std::string& f = p.family;
  if (f == "gl-osp") return gl_osp(p);
  if (f == "gl-gl") return gl_gl(p);
  if (f == "osp-gl") return osp_gl(p);
  if (f == "osp-osp") return osp_osp(p);
  if (f == "osp2r-osp") return osp2r_osp(p);
  if (f == "osp2r4s") return osp2r4s(p);
  if (f == "d21a") return d21a(p);
  if (f == "ab13-sl14") return ab13_sl14(p);
  if (f == "ab13-gosp24") return ab13_gosp24(p);
  if (f == "ab13-d212") return ab13_d212(p);
  if (f == "ag12-d213") return ag12_d213(p);
  if (f == "bc") return generic_bc(p, true);
  return generic_bc(p, false);
}

std::vector<Weight> weyl_orbit(const Weight& seed, const std::vector<Weight>& reflecting, const Matrix& gram) {
  auto form = [&](const Weight& a, const Weight& b) {
    Scalar t(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) t += a[i] * gram[i][j] * b[j];
    return t;
  };
  std::set<Weight> seen{seed};
  std::deque<Weight> queue{seed};
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (const auto& beta : reflecting) {
      const Scalar norm = form(beta, beta);
      if (norm == 0) continue;
      Weight img = w - (Scalar(2) * form(w, beta) / norm) * beta;
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Weight> weyl_orbit(const Weight& seed, const RestrictedRootSystem& system) {
  std::vector<Weight> even;
  for (const Root& r : system.even_roots()) even.push_back(r.vector);
  return weyl_orbit(seed, even, system.gram());
}

}  // namespace helgason
