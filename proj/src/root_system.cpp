#include "helgason/root_system.hpp"

#include <algorithm>
#include <array>

namespace helgason {

namespace {

// k with b == k a, if a and b are parallel.
std::optional<Scalar> parallel_factor(const Weight& a, const Weight& b) {
  std::size_t i = 0;
  while (i < a.dim() && a[i] == 0) ++i;
  if (i == a.dim()) return std::nullopt;
  const Scalar k = b[i] / a[i];
  if (k * a != b) return std::nullopt;
  return k;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidSystem, what); }

}  // namespace

RestrictedRootSystem::RestrictedRootSystem(std::size_t dim, Matrix gram, std::vector<Root> roots,
                                           std::string pair_tag, std::vector<std::string> basis_labels)
    : dim_(dim),
      gram_(std::move(gram)),
      roots_(std::move(roots)),
      pair_tag_(std::move(pair_tag)),
      labels_(std::move(basis_labels)) {
  if (gram_.size() != dim_) invalid("gram matrix has wrong size");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (gram_[i].size() != dim_) invalid("gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) invalid("gram matrix is not symmetric");
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("x" + std::to_string(i + 1));
  if (labels_.size() != dim_) invalid("basis label count differs from dimension");

  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) { return a.vector < b.vector; });
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const Root& r = roots_[i];
    if (r.vector.dim() != dim_) invalid("root " + r.vector.to_string() + " has wrong dimension");
    if (r.vector.is_zero()) invalid("0 is not a root");
    if (r.mult.even < 0 || r.mult.odd < 0 || r.mult.even + r.mult.odd < 1)
      invalid("root " + r.vector.to_string() + " has empty multiplicity");
    if (i > 0 && roots_[i - 1].vector == r.vector) invalid("duplicate root " + r.vector.to_string());
  }
  for (const Root& r : roots_) {
    const Root* neg = find(-r.vector);
    if (!neg || !(neg->mult == r.mult)) invalid("negation closure fails at " + r.vector.to_string());
    const Root* dbl = find(Scalar(2) * r.vector);
    if (dbl && dbl->mult.odd != 0) invalid("2a has odd multiplicity at " + r.vector.to_string());
    for (const Root& other : roots_) {
      const auto k = parallel_factor(r.vector, other.vector);
      if (!k) continue;
      static const std::array<Scalar, 6> allowed{Scalar(1), Scalar(-1), Scalar(2),
                                                 Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
      if (std::find(allowed.begin(), allowed.end(), *k) == allowed.end())
        invalid("multiples law fails for " + r.vector.to_string() + " and " + other.vector.to_string());
    }
  }
  // Nondegenerate on the ambient space. The root span alone may be degenerate
  // (gl(2n|2n)-type pairs, where the supertrace direction is isotropic).
  if (dim_ > 0 && determinant(gram_) == 0) invalid("form is degenerate");
}

const Root* RestrictedRootSystem::find(const Weight& v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v,
                             [](const Root& r, const Weight& w) { return r.vector < w; });
  if (it == roots_.end() || it->vector != v) return nullptr;
  return &*it;
}

const Root& RestrictedRootSystem::root(const Weight& v) const {
  const Root* r = find(v);
  if (!r) throw Error(ErrorKind::UnknownRoot, v.to_string() + " is not a root");
  return *r;
}

Scalar RestrictedRootSystem::pairing(const Weight& a, const Weight& b) const {
  if (a.dim() != dim_ || b.dim() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "pairing expects dimension " + std::to_string(dim_));
  Scalar total(0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (b[j] != 0 && gram_[i][j] != 0) total += a[i] * gram_[i][j] * b[j];
  }
  return total;
}

std::vector<Root> RestrictedRootSystem::even_roots() const {
  std::vector<Root> out;
  for (const Root& r : roots_)
    if (r.mult.even > 0) out.push_back(r);
  return out;
}

std::size_t RestrictedRootSystem::rank() const {
  std::vector<Weight> vs;
  for (const Root& r : roots_) vs.push_back(r.vector);
  return rank_of(vs);
}

bool Base::contains(const Weight& v) const { return index_of(v).has_value(); }

std::optional<std::size_t> Base::index_of(const Weight& v) const {
  for (std::size_t i = 0; i < simples_.size(); ++i)
    if (simples_[i] == v) return i;
  return std::nullopt;
}

std::vector<Weight> Base::canonical() const {
  auto out = simples_;
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(RankOneType::Tag tag) {
  switch (tag) {
    case RankOneType::Tag::I: return "(i)";
    case RankOneType::Tag::II: return "(ii)";
    case RankOneType::Tag::III: return "(iii)";
    case RankOneType::Tag::IV: return "(iv)";
    case RankOneType::Tag::V: return "(v)";
    case RankOneType::Tag::VI: return "(vi)";
    case RankOneType::Tag::VII: return "(vii)";
    case RankOneType::Tag::VIII: return "(viii)";
  }
  return "?";
}

std::string describe(const RankOneType& t) {
  std::string out = to_string(t.tag);
  if (t.m || t.n) {
    out += "[";
    if (t.m) out += "m=" + std::to_string(*t.m);
    if (t.m && t.n) out += ",";
    if (t.n) out += "n=" + std::to_string(*t.n);
    out += "]";
  }
  return out;
}

Scalar pairing(const Weight& lambda, const Weight& mu, const RestrictedRootSystem& system) {
  return system.pairing(lambda, mu);
}

Scalar coroot_eval(const Weight& lambda, const Weight& alpha, const RestrictedRootSystem& system) {
  const Scalar norm = system.pairing(alpha, alpha);
  if (norm == 0) throw Error(ErrorKind::IsotropicRoot, alpha.to_string() + " has no coroot");
  return Scalar(2) * system.pairing(lambda, alpha) / norm;
}

bool is_isotropic(const Weight& alpha, const RestrictedRootSystem& system) {
  system.root(alpha);
  return system.pairing(alpha, alpha) == 0;
}

RootClass classify_root(const Weight& alpha, const RestrictedRootSystem& system) {
  const Root& r = system.root(alpha);
  if (r.mult.even > 0) return RootClass::Regular;
  const Root* dbl = system.find(Scalar(2) * alpha);
  if (dbl && dbl->mult.even > 0) return RootClass::Regular;
  return RootClass::Singular;
}

int epsilon(const Weight& alpha, const RestrictedRootSystem& system) {
  if (classify_root(alpha, system) == RootClass::Singular)
    throw Error(ErrorKind::SingularRoot, alpha.to_string() + " is singular; epsilon is undefined");
  return system.is_root(Scalar(2) * alpha) ? 1 : 0;
}

Base validate_base(std::span<const Weight> candidate, const RestrictedRootSystem& system) {
  for (const auto& v : candidate) system.root(v);
  Base base(std::vector<Weight>(candidate.begin(), candidate.end()));
  const CoordinateSolver solver(candidate);  // throws NotLinearlyIndependent
  for (const Root& r : system.roots()) {
    const auto coeffs = solver.solve(r.vector);
    bool ok = coeffs.has_value();
    if (ok) {
      bool nonneg = true, nonpos = true;
      for (const auto& c : *coeffs) {
        if (!is_integer(c)) ok = false;
        if (c < 0) nonneg = false;
        if (c > 0) nonpos = false;
      }
      ok = ok && (nonneg || nonpos);
    }
    if (!ok) throw Error(ErrorKind::SpanViolation, r.vector.to_string() + " is in neither N.S nor -N.S");
  }
  return base;
}

std::optional<std::vector<Scalar>> base_coordinates(const Base& base, const Weight& v) {
  const CoordinateSolver solver(base.simples());
  return solver.solve(v);
}

std::vector<Root> positive_roots(const Base& base, const RestrictedRootSystem& system) {
  const CoordinateSolver solver(base.simples());
  std::vector<Root> out;
  for (const Root& r : system.roots()) {
    const auto coeffs = solver.solve(r.vector);
    if (!coeffs) throw Error(ErrorKind::SpanViolation, r.vector.to_string() + " outside the span of the base");
    const bool positive = std::any_of(coeffs->begin(), coeffs->end(), [](const Scalar& c) { return c > 0; });
    if (positive) out.push_back(r);
  }
  return out;
}

std::vector<Weight> principal_roots(const Base& base, const RestrictedRootSystem& system) {
  std::vector<Weight> even_pos;
  for (const Root& r : positive_roots(base, system))
    if (r.mult.even > 0) even_pos.push_back(r.vector);
  std::vector<Weight> out;
  for (const auto& g : even_pos) {
    bool decomposable = false;
    for (std::size_t i = 0; i < even_pos.size() && !decomposable; ++i) {
      const Weight rest = g - even_pos[i];
      decomposable = std::find(even_pos.begin(), even_pos.end(), rest) != even_pos.end();
    }
    if (!decomposable) out.push_back(g);
  }
  return out;
}

namespace {

RankOneType classify_pattern(const Weight& gen, const Multiplicity& mg, const Multiplicity* m2, bool isotropic) {
  using Tag = RankOneType::Tag;
  auto fail = [&]() -> RankOneType {
    throw Error(ErrorKind::UnclassifiablePattern,
                "no rank-one row matches the pattern at " + gen.to_string() + " m=(" + std::to_string(mg.even) +
                    "|" + std::to_string(mg.odd) + ")" +
                    (m2 ? " m2=(" + std::to_string(m2->even) + "|" + std::to_string(m2->odd) + ")" : ""));
  };
  const bool singular = mg.even == 0 && (!m2 || m2->even == 0);
  if (singular) {
    if (isotropic) {
      if (!m2 && mg == Multiplicity{0, 2}) return {Tag::II, std::nullopt, std::nullopt};
      return fail();
    }
    if (!m2 && mg.odd >= 2 && mg.odd % 2 == 0) return {Tag::I, std::nullopt, mg.odd / 2};
    return fail();
  }
  if (isotropic) return fail();
  if (m2) {
    if (m2->odd != 0) return fail();
    if (m2->even == 7 && mg == Multiplicity{8, 0}) return {Tag::VIII, std::nullopt, std::nullopt};
    if (m2->even == 3 && mg.even % 4 == 0 && mg.odd % 2 == 0) return {Tag::IV, mg.odd / 2, mg.even / 4 + 2};
    if (m2->even == 2 && mg == Multiplicity{0, 2}) return {Tag::VII, std::nullopt, std::nullopt};
    if (m2->even == 1 && mg.even % 2 == 0 && mg.odd % 2 == 0) return {Tag::V, mg.even / 2 + 2, mg.odd / 2};
    return fail();
  }
  if (mg == Multiplicity{2, 0}) return {Tag::VI, std::nullopt, std::nullopt};
  if (mg.even >= 1 && mg.odd % 2 == 0) return {Tag::III, mg.even + 2, mg.odd / 2};
  return fail();
}

}  // namespace

RankOneSubsystem rank_one_subsystem(const Weight& alpha, const RestrictedRootSystem& system) {
  system.root(alpha);
  const Weight half = Scalar(1, 2) * alpha;
  const Weight gen = system.is_root(half) ? half : alpha;
  const Root& g = system.root(gen);
  const Root* dbl = system.find(Scalar(2) * gen);
  std::vector<Root> roots{g, system.root(-gen)};
  if (dbl) {
    roots.push_back(*dbl);
    roots.push_back(system.root(-dbl->vector));
  }
  const bool iso = system.pairing(gen, gen) == 0;
  RankOneType type = classify_pattern(gen, g.mult, dbl ? &dbl->mult : nullptr, iso);
  RestrictedRootSystem sub(system.dim(), system.gram(), std::move(roots), system.pair_tag() + "<" + gen.to_string() + ">",
                           system.basis_labels());
  return RankOneSubsystem{std::move(sub), type, gen};
}

}  // namespace helgason
