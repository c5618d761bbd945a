#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "helgason/basegraph.hpp"
#include "helgason/reflections.hpp"

namespace helgason {

struct PrincipalRootCheck {
  Weight gamma;
  std::vector<ReflectionStep> path;
  Weight exposed;                        // gamma or gamma/2
  Weight final_weight;                   // transported weight tested at the exposed simple
  Scalar final_value{0};                 // final_weight(h_exposed)/2
  std::optional<Scalar> companion_value; // critical last step: (final_weight - 2n a)(h_exposed)/2
  bool pass = false;
  std::string note;

  friend bool operator==(const PrincipalRootCheck&, const PrincipalRootCheck&) = default;
};

struct SphericityVerdict {
  enum class Kind { Spherical, NotSpherical, Undetermined };
  Kind kind = Kind::Spherical;
  std::vector<PrincipalRootCheck> certificate;  // Spherical: one per principal root
  std::optional<PrincipalRootCheck> witness;    // NotSpherical
  std::string blocking;                         // Undetermined
  std::vector<ReflectionStep> blocking_path;

  friend bool operator==(const SphericityVerdict&, const SphericityVerdict&) = default;
};

const char* to_string(SphericityVerdict::Kind kind);

// lambda(h_g) in 2^eps(g) * 2Z>=0 for every principal root g.
bool necessary_conditions(const Base& base, const Weight& lambda, const RestrictedRootSystem& system);

// Precomputed exposing routes for one (system, base); deciding many weights reuses them.
class SphericityPlan {
 public:
  SphericityPlan(const RestrictedRootSystem& system, Base base);
  ~SphericityPlan();
  SphericityPlan(SphericityPlan&&) noexcept;
  SphericityPlan& operator=(SphericityPlan&&) noexcept;

  SphericityVerdict decide(const Weight& lambda) const;
  // Verdict kind only, skipping certificate assembly.
  SphericityVerdict::Kind classify(const Weight& lambda) const;

  const Base& base() const;
  const std::vector<Weight>& principal() const;
  bool principal_in_base() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SphericityVerdict decide_spherical(const Base& base, const Weight& lambda, const RestrictedRootSystem& system);

// Both inputs must be Spherical; reports whether the sum is too.
bool monoid_sum_check(const Weight& lambda, const Weight& mu, const Base& base, const RestrictedRootSystem& system);

// m(b) = -sdim(g_b)/2 - sdim(g_2b).
Scalar conjectural_m(const Weight& beta, const RestrictedRootSystem& system);

// CONJECTURE: lambda carried to every base of the base graph avoids the window {m+1..2m}
// at each non-isotropic simple. Throws NotFullyReflectable if a critical weight appears.
bool conjectural_simplicity(const Base& base, const Weight& lambda, const RestrictedRootSystem& system);

}  // namespace helgason
