#pragma once

#include "tlie/rational.hpp"

#include <cstddef>
#include <optional>

namespace tlie {

/// Dense rational matrix, row-major. All arithmetic is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Commutator a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact rank by fraction-free (Bareiss) elimination on a denominator-cleared
/// integer copy; intermediate entries stay bounded by minor determinants.
std::size_t rank(const Matrix& m);

/// cols - rank.
std::size_t kernel_dim(const Matrix& m);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
/// Throws Error(dimension_mismatch) for non-square input.
std::optional<Matrix> invert(const Matrix& m);

}  // namespace tlie
