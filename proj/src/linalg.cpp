#include "helgason/linalg.hpp"

#include <algorithm>

#include "helgason/error.hpp"

namespace helgason {

Weight Weight::unit(std::size_t dim, std::size_t i, Scalar value) {
  Weight w(dim);
  w.coords_[i] = value;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "weight addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "weight subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Scalar& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += format_scalar(coords_[i]);
  }
  return out + ")";
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_of(std::span<const Weight> vectors) {
  if (vectors.empty()) return 0;
  Matrix m;
  for (const auto& v : vectors) m.emplace_back(v.coords().begin(), v.coords().end());
  return row_reduce(m).size();
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

CoordinateSolver::CoordinateSolver(std::span<const Weight> family)
    : size_(family.size()), family_(family.begin(), family.end()) {
  if (family.empty()) return;
  dim_ = family.front().dim();
  Matrix rows;
  for (const auto& v : family) {
    if (v.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "coordinate solver family");
    rows.emplace_back(v.coords().begin(), v.coords().end());
  }
  Matrix reduced = rows;
  pivot_rows_ = row_reduce(reduced);
  if (pivot_rows_.size() != size_)
    throw Error(ErrorKind::NotLinearlyIndependent, "family of " + std::to_string(size_) + " vectors has rank " +
                                                       std::to_string(pivot_rows_.size()));
  // Invert the square block M[i][j] = family_j[pivot_i] via Gauss-Jordan on [M | I].
  Matrix aug(size_, std::vector<Scalar>(2 * size_, Scalar(0)));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) aug[i][j] = family_[j][pivot_rows_[i]];
    aug[i][size_ + i] = Scalar(1);
  }
  row_reduce(aug);
  inverse_.assign(size_, std::vector<Scalar>(size_));
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) inverse_[i][j] = aug[i][size_ + j];
}

std::optional<std::vector<Scalar>> CoordinateSolver::solve(const Weight& v) const {
  if (size_ == 0) {
    if (v.is_zero()) return std::vector<Scalar>{};
    return std::nullopt;
  }
  if (v.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "coordinate solve");
  std::vector<Scalar> coeffs(size_, Scalar(0));
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) coeffs[i] += inverse_[i][j] * v[pivot_rows_[j]];
  Weight recon(dim_);
  for (std::size_t i = 0; i < size_; ++i) recon += coeffs[i] * family_[i];
  if (recon != v) return std::nullopt;
  return coeffs;
}

}  // namespace helgason
