#pragma once

// Shared fixtures and deterministic random generators for the test suites.

#include "tlie/nijenhuis.hpp"
#include "tlie/representation.hpp"
#include "tlie/reynolds.hpp"
#include "tlie/three_lie.hpp"
#include "tlie/twisted_rbo.hpp"

#include <random>

namespace fix {

using namespace tlie;

/// The 3-dimensional algebra with [e1,e2,e3] = e1.
inline ThreeLieAlgebra dim3() {
  ThreeLieAlgebra a(3);
  a.set_bracket(0, 1, 2, Vec{1, 0, 0});
  a.mark_verified();
  return a;
}

/// Abelian algebra of a given dimension.
inline ThreeLieAlgebra abelian(std::size_t dim) {
  ThreeLieAlgebra a(dim);
  a.mark_verified();
  return a;
}

/// A 4-dimensional structure violating the fundamental identity at
/// (e1,e2 | e1,e3,e4). Dimension 3 admits no FI violation: with a single
/// canonical triple both sides of the identity agree for every choice of
/// structure constants.
inline ThreeLieAlgebra broken4() {
  ThreeLieAlgebra a(4);
  a.set_bracket(0, 1, 2, Vec{1, 0, 0, 0});
  a.set_bracket(0, 2, 3, Vec{0, 0, 1, 0});
  return a;
}

/// 4-dimensional twisted semidirect product of a 2-dim abelian algebra with
/// a 2-dim space, rho(e1,e2) = [[1,1],[0,1]], Phi = 0.
inline ThreeLieAlgebra dim4_semidirect() {
  ThreeLieAlgebra g = abelian(2);
  Representation rep(g, 2);
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 1) = 1;
  rep.set_rho(0, 1, m);
  rep.mark_verified();
  TwoCochain phi(2, 2);
  phi.mark_verified();
  return twisted_semidirect(rep, phi);
}

/// R = 2 Id - 4 E13: the Reynolds operator (D + Id/2)^{-1} for the inner
/// derivation D = ad_{e1,e2} of the 3-dim fixture.
inline Matrix reynolds_dim3() {
  Matrix r = Rational(2) * Matrix::identity(3);
  r(0, 2) = -4;
  return r;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  Rational rational(long lo = -6, long hi = 6, long max_den = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(engine)) / Rational(den(engine));
  }

  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational();
    return m;
  }

  Matrix nonzero_matrix(std::size_t rows, std::size_t cols) {
    for (;;) {
      Matrix m = matrix(rows, cols);
      if (!m.is_zero()) return m;
    }
  }

  Matrix invertible_matrix(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (invert(m)) return m;
    }
  }

  NCochain cochain(std::size_t degree, std::size_t dim_g, std::size_t dim_v) {
    NCochain f(degree, dim_g, dim_v);
    for (std::size_t t = 0; t < f.tuple_count(); ++t) f.value(t) = vec(dim_v);
    return f;
  }
};

}  // namespace fix
