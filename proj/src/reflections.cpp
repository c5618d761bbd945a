#include "helgason/reflections.hpp"

namespace helgason {

const char* to_string(WeightTransportOutcome::Kind kind) {
  switch (kind) {
    case WeightTransportOutcome::Kind::Reflected: return "Reflected";
    case WeightTransportOutcome::Kind::Fixed: return "Fixed";
    case WeightTransportOutcome::Kind::Critical: return "Critical";
  }
  return "?";
}

Weight regular_reflect_weight(const Weight& alpha, const Weight& lambda, const RestrictedRootSystem& system) {
  if (classify_root(alpha, system) != RootClass::Regular)
    throw Error(ErrorKind::SingularRoot, alpha.to_string() + " is singular; no Weyl reflection");
  return lambda - coroot_eval(lambda, alpha, system) * alpha;
}

int k_alpha_beta(const Weight& alpha, const Weight& beta, const RestrictedRootSystem& system) {
  // Strings in restricted root systems are short; 4 covers G2 and every multiple law.
  int best = 0;
  Weight probe = beta;
  for (int k = 1; k <= 4; ++k) {
    probe += alpha;
    if (system.is_root(probe)) best = k;
  }
  return best;
}

Base reflect_base(const Weight& alpha, const Base& base, const RestrictedRootSystem& system) {
  if (!base.contains(alpha)) throw Error(ErrorKind::NotSimple, alpha.to_string() + " is not simple in the base");
  std::vector<Weight> out;
  out.reserve(base.size());
  for (const auto& beta : base.simples()) {
    if (beta == alpha)
      out.push_back(-alpha);
    else
      out.push_back(beta + Scalar(k_alpha_beta(alpha, beta, system)) * alpha);
  }
  return Base(std::move(out));
}

int half_odd_multiplicity(const Weight& alpha, const RestrictedRootSystem& system) {
  const Root& r = system.root(alpha);
  if (r.mult.even != 0 || r.mult.odd % 2 != 0 || r.mult.odd == 0)
    throw Error(ErrorKind::InvalidSystem, alpha.to_string() + " does not have multiplicity (0|2n)");
  return r.mult.odd / 2;
}

WeightTransportOutcome transport_weight_isotropic(const Weight& alpha, const Weight& lambda,
                                                  const RestrictedRootSystem& system) {
  if (classify_root(alpha, system) != RootClass::Singular)
    throw Error(ErrorKind::RegularRootNotTransportable, alpha.to_string() + " is regular");
  if (system.pairing(alpha, alpha) != 0)
    throw Error(ErrorKind::InvalidSystem, alpha.to_string() + " is not isotropic");
  if (system.pairing(lambda, alpha) == 0) return {WeightTransportOutcome::Kind::Fixed, lambda, 0, {}};
  return {WeightTransportOutcome::Kind::Reflected, lambda - Scalar(2) * alpha, 0, {}};
}

WeightTransportOutcome transport_weight_nonisotropic(const Weight& alpha, const Weight& lambda,
                                                     const RestrictedRootSystem& system) {
  if (classify_root(alpha, system) != RootClass::Singular)
    throw Error(ErrorKind::RegularRootNotTransportable, alpha.to_string() + " is regular");
  const int n = half_odd_multiplicity(alpha, system);
  const Scalar t = coroot_eval(lambda, alpha, system) / Scalar(2);
  if (is_integer(t)) {
    const auto ti = t.numerator();
    if (ti >= 0 && ti < n) return {WeightTransportOutcome::Kind::Reflected, lambda - Scalar(2 * ti) * alpha, 0, {}};
    if (ti > n && ti <= 2 * n) {
      const int k = static_cast<int>(ti - n);
      return {WeightTransportOutcome::Kind::Critical, lambda, k, lambda - Scalar(2 * k) * alpha};
    }
  }
  return {WeightTransportOutcome::Kind::Reflected, lambda - Scalar(2 * n) * alpha, 0, {}};
}

WeightTransportOutcome transport_weight(const Weight& alpha, const Weight& lambda, const RestrictedRootSystem& system) {
  if (classify_root(alpha, system) != RootClass::Singular)
    throw Error(ErrorKind::RegularRootNotTransportable, alpha.to_string() + " is regular");
  if (system.pairing(alpha, alpha) == 0) return transport_weight_isotropic(alpha, lambda, system);
  return transport_weight_nonisotropic(alpha, lambda, system);
}

ReflectionStep reflection_step(const Weight& alpha, const Base& base, const std::optional<Weight>& lambda,
                               const RestrictedRootSystem& system) {
  ReflectionStep step{alpha, base, reflect_base(alpha, base, system), std::nullopt};
  if (lambda && classify_root(alpha, system) == RootClass::Singular)
    step.weight_effect = transport_weight(alpha, *lambda, system);
  return step;
}

bool rank_one_integrable(const Weight& beta, const Weight& lambda, const RestrictedRootSystem& system) {
  return in_scaled_even_nonneg(coroot_eval(lambda, beta, system), epsilon(beta, system));
}

bool critical_integrability(const Weight& alpha, const Weight& lambda, const Weight& beta,
                            const RestrictedRootSystem& system) {
  if (transport_weight(alpha, lambda, system).kind != WeightTransportOutcome::Kind::Critical)
    throw Error(ErrorKind::NotCritical, lambda.to_string() + " is not critical for " + alpha.to_string());
  const int n = half_odd_multiplicity(alpha, system);
  return rank_one_integrable(beta, lambda, system) &&
         rank_one_integrable(beta, lambda - Scalar(2 * n) * alpha, system);
}

}  // namespace helgason
