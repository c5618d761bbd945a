#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "helgason/scalar.hpp"

namespace helgason {

// A rational coordinate vector in the ambient space a*. Used both for weights
// and for root vectors.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim, Scalar(0)) {}
  explicit Weight(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Weight unit(std::size_t dim, std::size_t i, Scalar value = Scalar(1));

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Scalar& factor);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Scalar(-1); }
  friend Weight operator*(const Scalar& f, Weight a) { return a *= f; }
  friend Weight operator*(Weight a, const Scalar& f) { return a *= f; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
};

using Matrix = std::vector<std::vector<Scalar>>;

std::size_t rank_of(std::span<const Weight> vectors);
Scalar determinant(Matrix m);

// Expresses vectors as combinations of a fixed linearly independent family.
class CoordinateSolver {
 public:
  // Throws Error(NotLinearlyIndependent) if the family is dependent.
  explicit CoordinateSolver(std::span<const Weight> family);

  // Coefficients c with sum c_i family_i == v, or nullopt if v is outside the span.
  std::optional<std::vector<Scalar>> solve(const Weight& v) const;

  std::size_t size() const { return size_; }

 private:
  std::size_t size_ = 0;
  std::size_t dim_ = 0;
  // Left inverse restricted to pivot rows, plus the family for a membership check.
  std::vector<std::size_t> pivot_rows_;
  Matrix inverse_;  // size_ x size_, maps pivot coordinates to coefficients
  std::vector<Weight> family_;
};

}  // namespace helgason
