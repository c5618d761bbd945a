#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "helgason/error.hpp"
#include "helgason/linalg.hpp"

namespace helgason {

// Super-multiplicity (even | odd) of a restricted root space.
struct Multiplicity {
  int even = 0;
  int odd = 0;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

struct Root {
  Weight vector;
  Multiplicity mult;
};

// Finite restricted root system in a rational space with a symmetric form.
// Immutable after construction; the constructor enforces the structural
// invariants (negation closure, multiples law, m_{2a,odd} = 0, ...).
class RestrictedRootSystem {
 public:
  RestrictedRootSystem(std::size_t dim, Matrix gram, std::vector<Root> roots, std::string pair_tag = "custom",
                       std::vector<std::string> basis_labels = {});

  std::size_t dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }
  // Sorted by vector.
  const std::vector<Root>& roots() const { return roots_; }
  const std::string& pair_tag() const { return pair_tag_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const Root* find(const Weight& v) const;
  bool is_root(const Weight& v) const { return find(v) != nullptr; }
  const Root& root(const Weight& v) const;

  Scalar pairing(const Weight& a, const Weight& b) const;

  // Delta_0: roots with positive even multiplicity.
  std::vector<Root> even_roots() const;
  std::size_t rank() const;

 private:
  std::size_t dim_;
  Matrix gram_;
  std::vector<Root> roots_;
  std::string pair_tag_;
  std::vector<std::string> labels_;
};

// An ordered list of simple roots. Construct through validate_base.
class Base {
 public:
  Base() = default;
  explicit Base(std::vector<Weight> simples) : simples_(std::move(simples)) {}

  const std::vector<Weight>& simples() const { return simples_; }
  std::size_t size() const { return simples_.size(); }
  bool contains(const Weight& v) const;
  std::optional<std::size_t> index_of(const Weight& v) const;

  // Simples sorted lexicographically; equal for equal sets.
  std::vector<Weight> canonical() const;
  bool same_set(const Base& other) const { return canonical() == other.canonical(); }

  friend bool operator==(const Base&, const Base&) = default;

 private:
  std::vector<Weight> simples_;
};

enum class RootClass { Regular, Singular };

struct RankOneType {
  enum class Tag { I, II, III, IV, V, VI, VII, VIII };
  Tag tag;
  // Parameters (m, n) of the matching classification row, when the row has them.
  std::optional<int> m;
  std::optional<int> n;
};

const char* to_string(RankOneType::Tag tag);
std::string describe(const RankOneType& t);

struct RankOneSubsystem {
  RestrictedRootSystem system;
  RankOneType type;
  // The smaller of {alpha, alpha/2} that is a root; the rank-one simple root.
  Weight generator;
};

Scalar pairing(const Weight& lambda, const Weight& mu, const RestrictedRootSystem& system);
// lambda(h_alpha) = 2(lambda, alpha)/(alpha, alpha).
Scalar coroot_eval(const Weight& lambda, const Weight& alpha, const RestrictedRootSystem& system);
bool is_isotropic(const Weight& alpha, const RestrictedRootSystem& system);
RootClass classify_root(const Weight& alpha, const RestrictedRootSystem& system);
inline bool is_regular(const Weight& alpha, const RestrictedRootSystem& system) {
  return classify_root(alpha, system) == RootClass::Regular;
}
int epsilon(const Weight& alpha, const RestrictedRootSystem& system);

Base validate_base(std::span<const Weight> candidate, const RestrictedRootSystem& system);
// Coefficients of v in the basis of simples; nullopt outside the span.
std::optional<std::vector<Scalar>> base_coordinates(const Base& base, const Weight& v);
std::vector<Root> positive_roots(const Base& base, const RestrictedRootSystem& system);
// Indecomposable elements of Delta_0 intersected with Delta^+, in root order.
std::vector<Weight> principal_roots(const Base& base, const RestrictedRootSystem& system);
RankOneSubsystem rank_one_subsystem(const Weight& alpha, const RestrictedRootSystem& system);

}  // namespace helgason
