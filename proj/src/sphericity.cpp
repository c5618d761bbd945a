#include "helgason/sphericity.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace helgason {

const char* to_string(SphericityVerdict::Kind kind) {
  switch (kind) {
    case SphericityVerdict::Kind::Spherical: return "Spherical";
    case SphericityVerdict::Kind::NotSpherical: return "NotSpherical";
    case SphericityVerdict::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

bool necessary_conditions(const Base& base, const Weight& lambda, const RestrictedRootSystem& system) {
  for (const auto& g : principal_roots(base, system))
    if (!rank_one_integrable(g, lambda, system)) return false;
  return true;
}

namespace {

// x -> sum c_i x_i with the c_i over a common denominator, so integral weights
// are evaluated in machine integers.
struct Linear {
  std::vector<Scalar> coeffs;
  std::vector<std::int64_t> num;
  std::int64_t den = 1;

  explicit Linear(std::vector<Scalar> c) : coeffs(std::move(c)) {
    for (const auto& x : coeffs) den = std::lcm(den, x.denominator());
    for (const auto& x : coeffs) num.push_back(x.numerator() * (den / x.denominator()));
  }

  Scalar operator()(const Weight& w) const {
    bool integral = true;
    for (std::size_t i = 0; i < w.dim() && integral; ++i) integral = w[i].denominator() == 1;
    if (integral) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < num.size(); ++i)
        if (num[i] != 0) acc += num[i] * w[i].numerator();
      return Scalar(acc, den);
    }
    Scalar acc(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) acc += coeffs[i] * w[i];
    return acc;
  }
};

Linear pairing_with(const Weight& v, const RestrictedRootSystem& system, const Scalar& scale = Scalar(1)) {
  std::vector<Scalar> c(system.dim(), Scalar(0));
  for (std::size_t i = 0; i < system.dim(); ++i)
    for (std::size_t j = 0; j < system.dim(); ++j) c[i] += system.gram()[i][j] * v[j];
  for (auto& x : c) x *= scale;
  return Linear(std::move(c));
}

Linear coroot_of(const Weight& v, const RestrictedRootSystem& system) {
  const Scalar norm = system.pairing(v, v);
  if (norm == 0) throw Error(ErrorKind::IsotropicRoot, v.to_string() + " has no coroot");
  return pairing_with(v, system, Scalar(2) / norm);
}

struct StepPlan {
  Weight alpha;
  Base from;
  Base to;
  bool isotropic = false;
  int n = 0;
  Linear form;  // (-, a) if isotropic, else (-)(h_a)
};

struct PathPlan {
  std::vector<StepPlan> steps;
  Weight exposed;
  Linear exposed_coroot;
  int exposed_eps = 0;
};

struct GammaPlan {
  Weight gamma;
  Linear coroot;
  int eps = 0;
  std::vector<PathPlan> paths;
};

enum class Status { Pass, Fail, Blocked };

struct GammaResult {
  Status status = Status::Pass;
  PrincipalRootCheck check;
  std::string blocking;
  std::vector<ReflectionStep> blocking_path;
};

}  // namespace

struct SphericityPlan::Impl {
  const RestrictedRootSystem* system;
  Base base;
  std::vector<Weight> principal;
  std::vector<GammaPlan> gammas;
  bool all_exposed = true;

  // index of the first principal root where lambda fails, if any
  std::optional<std::size_t> first_failure(const Weight& lambda) const {
    for (std::size_t i = 0; i < gammas.size(); ++i)
      if (!in_scaled_even_nonneg(gammas[i].coroot(lambda), gammas[i].eps)) return i;
    return std::nullopt;
  }

  WeightTransportOutcome transport(const StepPlan& s, const Weight& mu) const {
    using K = WeightTransportOutcome::Kind;
    if (s.isotropic) {
      if (s.form(mu) == 0) return {K::Fixed, mu, 0, {}};
      return {K::Reflected, mu - Scalar(2) * s.alpha, 0, {}};
    }
    const Scalar t = s.form(mu) / Scalar(2);
    if (is_integer(t)) {
      const auto ti = t.numerator();
      if (ti >= 0 && ti < s.n) return {K::Reflected, mu - Scalar(2 * ti) * s.alpha, 0, {}};
      if (ti > s.n && ti <= 2 * s.n) {
        const int k = static_cast<int>(ti - s.n);
        return {K::Critical, mu, k, mu - Scalar(2 * k) * s.alpha};
      }
    }
    return {K::Reflected, mu - Scalar(2 * s.n) * s.alpha, 0, {}};
  }

  GammaResult run(const GammaPlan& g, const Weight& lambda, bool record) const {
    GammaResult out;
    out.status = Status::Blocked;
    for (const PathPlan& p : g.paths) {
      std::vector<ReflectionStep> steps;
      Weight mu = lambda;
      bool blocked = false;
      for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const StepPlan& s = p.steps[i];
        WeightTransportOutcome o = transport(s, mu);
        if (record) steps.push_back({s.alpha, s.from, s.to, o});
        if (o.kind != WeightTransportOutcome::Kind::Critical) {
          mu = o.weight;
          continue;
        }
        const bool last = i + 1 == p.steps.size();
        if (last) {
          const Scalar v1 = p.exposed_coroot(mu);
          const Scalar v2 = p.exposed_coroot(mu - Scalar(2 * s.n) * s.alpha);
          GammaResult r;
          r.status = in_scaled_even_nonneg(v1, p.exposed_eps) && in_scaled_even_nonneg(v2, p.exposed_eps)
                         ? Status::Pass
                         : Status::Fail;
          if (record)
            r.check = {g.gamma, std::move(steps), p.exposed, mu, v1 / Scalar(2), v2 / Scalar(2),
                       r.status == Status::Pass, "critical at the final step; both branches tested"};
          return r;
        }
        // A spherical weight forces its companion to be spherical too.
        if (auto bad = first_failure(o.companion)) {
          GammaResult r;
          r.status = Status::Fail;
          if (record)
            r.check = {g.gamma,
                       std::move(steps),
                       gammas[*bad].gamma,
                       o.companion,
                       gammas[*bad].coroot(o.companion) / Scalar(2),
                       std::nullopt,
                       false,
                       "critical companion fails the principal-root condition"};
          return r;
        }
        blocked = true;
        if (record && out.blocking.empty()) {
          out.blocking = "weight " + mu.to_string() + " is critical for " + s.alpha.to_string() + " at step " +
                         std::to_string(i + 1) + " of " + std::to_string(p.steps.size()) + " (k=" +
                         std::to_string(o.k) + ", companion " + o.companion.to_string() + ")";
          out.blocking_path = steps;
        }
        break;
      }
      if (blocked) continue;
      const Scalar v = p.exposed_coroot(mu);
      GammaResult r;
      r.status = in_scaled_even_nonneg(v, p.exposed_eps) ? Status::Pass : Status::Fail;
      if (record)
        r.check = {g.gamma,          std::move(steps), p.exposed, mu, v / Scalar(2), std::nullopt,
                   r.status == Status::Pass, p.steps.empty() ? "exposed in the base" : "transported along a singular path"};
      return r;
    }
    return out;
  }

  SphericityVerdict evaluate(const Weight& lambda, bool record) const {
    using K = SphericityVerdict::Kind;
    if (lambda.dim() != system->dim())
      throw Error(ErrorKind::DimensionMismatch, "weight has " + std::to_string(lambda.dim()) + " coordinates, expected " +
                                                    std::to_string(system->dim()));
    SphericityVerdict v;
    if (auto bad = first_failure(lambda)) {
      v.kind = K::NotSpherical;
      if (record) {
        const GammaPlan& g = gammas[*bad];
        v.witness = PrincipalRootCheck{g.gamma, {}, g.gamma, lambda, g.coroot(lambda) / Scalar(2), std::nullopt, false,
                                       "principal-root condition"};
      }
      return v;
    }
    std::optional<GammaResult> blocked;
    for (const GammaPlan& g : gammas) {
      GammaResult r = run(g, lambda, record);
      if (r.status == Status::Fail) {
        v.kind = K::NotSpherical;
        if (record) v.witness = std::move(r.check);
        v.certificate.clear();
        return v;
      }
      if (r.status == Status::Blocked) {
        if (!blocked) blocked = std::move(r);
        continue;
      }
      if (record) v.certificate.push_back(std::move(r.check));
    }
    if (blocked) {
      v.kind = K::Undetermined;
      v.certificate.clear();
      v.blocking = blocked->blocking;
      v.blocking_path = blocked->blocking_path;
      return v;
    }
    v.kind = K::Spherical;
    return v;
  }
};

SphericityPlan::SphericityPlan(const RestrictedRootSystem& system, Base base) : impl_(std::make_unique<Impl>()) {
  impl_->system = &system;
  impl_->base = validate_base(base.simples(), system);
  impl_->principal = principal_roots(impl_->base, system);
  for (const auto& gamma : impl_->principal) {
    GammaPlan g{gamma, coroot_of(gamma, system), epsilon(gamma, system), {}};
    std::vector<Exposure> routes;
    if (auto e = exposed_simple(impl_->base, gamma))
      routes.push_back({impl_->base, {}, *e});
    else {
      impl_->all_exposed = false;
      routes = all_minimal_exposing_paths(impl_->base, gamma, system);
    }
    for (const auto& route : routes) {
      PathPlan p{{}, route.exposed, coroot_of(route.exposed, system), epsilon(route.exposed, system)};
      Base current = impl_->base;
      for (const auto& alpha : route.path) {
        Base next = reflect_base(alpha, current, system);
        const bool iso = system.pairing(alpha, alpha) == 0;
        StepPlan s{alpha, current, next, iso, iso ? 0 : half_odd_multiplicity(alpha, system),
                   iso ? pairing_with(alpha, system) : coroot_of(alpha, system)};
        p.steps.push_back(std::move(s));
        current = std::move(next);
      }
      g.paths.push_back(std::move(p));
    }
    impl_->gammas.push_back(std::move(g));
  }
}

SphericityPlan::~SphericityPlan() = default;
SphericityPlan::SphericityPlan(SphericityPlan&&) noexcept = default;
SphericityPlan& SphericityPlan::operator=(SphericityPlan&&) noexcept = default;

SphericityVerdict SphericityPlan::decide(const Weight& lambda) const { return impl_->evaluate(lambda, true); }
SphericityVerdict::Kind SphericityPlan::classify(const Weight& lambda) const {
  return impl_->evaluate(lambda, false).kind;
}
const Base& SphericityPlan::base() const { return impl_->base; }
const std::vector<Weight>& SphericityPlan::principal() const { return impl_->principal; }
bool SphericityPlan::principal_in_base() const { return impl_->all_exposed; }

SphericityVerdict decide_spherical(const Base& base, const Weight& lambda, const RestrictedRootSystem& system) {
  return SphericityPlan(system, base).decide(lambda);
}

bool monoid_sum_check(const Weight& lambda, const Weight& mu, const Base& base, const RestrictedRootSystem& system) {
  const SphericityPlan plan(system, base);
  using K = SphericityVerdict::Kind;
  if (plan.classify(lambda) != K::Spherical || plan.classify(mu) != K::Spherical)
    throw Error(ErrorKind::Precondition, "monoid_sum_check needs two spherical weights");
  return plan.classify(lambda + mu) == K::Spherical;
}

Scalar conjectural_m(const Weight& beta, const RestrictedRootSystem& system) {
  const Root& r = system.root(beta);
  Scalar m = -Scalar(r.mult.even - r.mult.odd, 2);
  if (const Root* d = system.find(Scalar(2) * beta)) m -= Scalar(d->mult.even - d->mult.odd);
  return m;
}

bool conjectural_simplicity(const Base& base, const Weight& lambda, const RestrictedRootSystem& system) {
  validate_base(base.simples(), system);
  std::vector<std::pair<Base, Weight>> nodes{{base, lambda}};
  std::map<std::vector<Weight>, std::size_t> index{{base.canonical(), 0}};
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const auto [current, mu] = nodes[u];
    for (const auto& alpha : current.simples()) {
      Weight next_weight;
      if (classify_root(alpha, system) == RootClass::Regular) {
        next_weight = regular_reflect_weight(alpha, mu, system);
      } else {
        const auto o = transport_weight(alpha, mu, system);
        if (o.kind == WeightTransportOutcome::Kind::Critical)
          throw Error(ErrorKind::NotFullyReflectable,
                      mu.to_string() + " is critical for " + alpha.to_string() + " in base " + std::to_string(u));
        next_weight = o.weight;
      }
      Base next = reflect_base(alpha, current, system);
      if (index.emplace(next.canonical(), nodes.size()).second) nodes.emplace_back(std::move(next), std::move(next_weight));
    }
  }
  for (const auto& [current, mu] : nodes)
    for (const auto& beta : current.simples()) {
      if (system.pairing(beta, beta) == 0) continue;
      const Scalar m = conjectural_m(beta, system);
      if (!is_integer(m) || m <= 0) continue;
      const Scalar v = coroot_eval(mu, beta, system) / Scalar(2);
      if (is_integer(v) && v > m && v <= Scalar(2) * m) return false;
    }
  return true;
}

}  // namespace helgason
