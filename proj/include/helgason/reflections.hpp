#pragma once

#include <optional>

#include "helgason/root_system.hpp"

namespace helgason {

struct WeightTransportOutcome {
  enum class Kind { Reflected, Fixed, Critical };
  Kind kind = Kind::Fixed;
  // Reflected: the new weight. Fixed and Critical: the input weight.
  Weight weight;
  // Critical only.
  int k = 0;
  Weight companion;

  friend bool operator==(const WeightTransportOutcome&, const WeightTransportOutcome&) = default;
};

const char* to_string(WeightTransportOutcome::Kind kind);

struct ReflectionStep {
  Weight root;
  Base from_base;
  Base to_base;
  std::optional<WeightTransportOutcome> weight_effect;

  friend bool operator==(const ReflectionStep&, const ReflectionStep&) = default;
};

// lambda - lambda(h_a) a.
Weight regular_reflect_weight(const Weight& alpha, const Weight& lambda, const RestrictedRootSystem& system);

int k_alpha_beta(const Weight& alpha, const Weight& beta, const RestrictedRootSystem& system);

// {-a} together with b + k_ab a for the other simples, in the original order.
Base reflect_base(const Weight& alpha, const Base& base, const RestrictedRootSystem& system);

WeightTransportOutcome transport_weight_isotropic(const Weight& alpha, const Weight& lambda,
                                                  const RestrictedRootSystem& system);
WeightTransportOutcome transport_weight_nonisotropic(const Weight& alpha, const Weight& lambda,
                                                     const RestrictedRootSystem& system);
// Dispatches on isotropy; refuses regular roots.
WeightTransportOutcome transport_weight(const Weight& alpha, const Weight& lambda, const RestrictedRootSystem& system);

// Reflects the base in a simple root and, for singular roots, transports lambda.
ReflectionStep reflection_step(const Weight& alpha, const Base& base, const std::optional<Weight>& lambda,
                               const RestrictedRootSystem& system);

// n for a singular non-isotropic root of multiplicity (0|2n).
int half_odd_multiplicity(const Weight& alpha, const RestrictedRootSystem& system);

// lambda(h_b) in 2^eps(b) * 2Z>=0.
bool rank_one_integrable(const Weight& beta, const Weight& lambda, const RestrictedRootSystem& system);

// Both lambda and lambda - 2n a must be integrable at the regular root beta.
bool critical_integrability(const Weight& alpha, const Weight& lambda, const Weight& beta,
                            const RestrictedRootSystem& system);

}  // namespace helgason
