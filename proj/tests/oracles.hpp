#pragma once

// Test-side oracles, kept independent of the library's elimination and
// evaluation paths.

#include "tlie/matrix.hpp"

#include <vector>

namespace oracle {

/// Plain rational Gaussian elimination with pivot search; counts pivots.
inline std::size_t naive_rank(tlie::Matrix m) {
  using tlie::Rational;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Laplace expansion along the first row.
inline tlie::Rational determinant(const tlie::Matrix& m) {
  using tlie::Matrix;
  using tlie::Rational;
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    Rational term = m(0, c) * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// Rank by enumerating square minors (exponential; fine for tiny matrices).
inline std::size_t minor_rank(const tlie::Matrix& m) {
  std::size_t best = 0;
  const std::size_t max_k = std::min(m.rows(), m.cols());
  std::vector<std::size_t> rows_sel, cols_sel;
  for (std::size_t k = 1; k <= max_k; ++k) {
    // enumerate k-subsets of rows and columns
    std::vector<std::size_t> rs(k), cs(k);
    for (std::size_t i = 0; i < k; ++i) rs[i] = i;
    bool more_rows = true;
    while (more_rows) {
      for (std::size_t i = 0; i < k; ++i) cs[i] = i;
      bool more_cols = true;
      while (more_cols) {
        tlie::Matrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        if (determinant(sub) != 0) {
          best = k;
          more_cols = false;
          more_rows = false;
          break;
        }
        // next column subset
        std::size_t i = k;
        while (i-- > 0) {
          if (cs[i] + 1 <= m.cols() - (k - i)) {
            ++cs[i];
            for (std::size_t j = i + 1; j < k; ++j) cs[j] = cs[j - 1] + 1;
            break;
          }
          if (i == 0) more_cols = false;
        }
        if (k == 0) more_cols = false;
      }
      if (!more_rows) break;
      std::size_t i = k;
      bool advanced = false;
      while (i-- > 0) {
        if (rs[i] + 1 <= m.rows() - (k - i)) {
          ++rs[i];
          for (std::size_t j = i + 1; j < k; ++j) rs[j] = rs[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) more_rows = false;
    }
    if (best < k) break;  // no nonzero k-minor, so none larger either
  }
  return best;
}

}  // namespace oracle
