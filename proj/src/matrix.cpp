#include "tlie/matrix.hpp"

#include "tlie/report.hpp"

#include <utility>

namespace tlie {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::dimension_mismatch, "matrix-vector size mismatch");
  Vec out = zero_vec(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorKind::dimension_mismatch, "column size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::dimension_mismatch, "matrix addition shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::dimension_mismatch, "matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Rational& y = b(k, c);
        if (y != 0) out(r, c) += x * y;
      }
    }
  return out;
}

Matrix operator*(const Rational& c, Matrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= c;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

/// Denominator-cleared integer copy; row scaling does not change the rank.
std::vector<Integer> integerize(const Matrix& m) {
  std::vector<Integer> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c)
      l = boost::multiprecision::lcm(l, denominator(m(r, c)));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out[r * m.cols() + c] = numerator(q) * (l / denominator(q));
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<Integer> a = integerize(m);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

  // The inner update runs on raw GMP scratch to avoid per-entry temporaries.
  mpz_t acc;
  mpz_init(acc);
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(r, j), at(pivot, j));

    const Integer p = at(r, c);
    mpz_srcptr p_raw = p.backend().data();
    mpz_srcptr prev_raw = prev.backend().data();
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer head = at(i, c);
      mpz_srcptr head_raw = head.backend().data();
      const bool head_zero = mpz_sgn(head_raw) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Fraction-free update: division by the previous pivot is exact.
        mpz_ptr entry = at(i, j).backend().data();
        if (head_zero && mpz_sgn(entry) == 0) continue;
        mpz_mul(acc, entry, p_raw);
        if (!head_zero) mpz_submul(acc, head_raw, at(r, j).backend().data());
        mpz_divexact(entry, acc, prev_raw);
      }
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  mpz_clear(acc);
  return r;
}

std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank(m); }

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(c, j), work(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    const Rational p = work(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const Rational f = work(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace tlie
