#pragma once

#include "tlie/three_lie.hpp"

namespace tlie {

/**
 * A representation (V; rho) of a 3-Lie algebra: rho assigns to each basis
 * pair i<j an endomorphism of V; access with j<i flips the sign and i=j
 * yields zero, so skewness is structural.
 */
class Representation {
 public:
  Representation(ThreeLieAlgebra carrier, std::size_t dim_v);

  const ThreeLieAlgebra& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }
  std::size_t dim_v() const { return dim_v_; }

  void set_rho(std::size_t i, std::size_t j, Matrix m);
  const Matrix& rho_slot(std::size_t p) const { return rho_[p]; }
  Matrix rho_basis(std::size_t i, std::size_t j) const;
  Vec rho_apply(std::size_t i, std::size_t j, const Vec& v) const;

  /// Bilinear extension rho(x, y) for arbitrary coordinate vectors.
  Matrix rho(const Vec& x, const Vec& y) const;
  Vec rho_apply(const Vec& x, const Vec& y, const Vec& v) const;

  bool verified() const { return verified_; }
  void mark_verified() { verified_ = true; }

 private:
  ThreeLieAlgebra carrier_;
  std::size_t dim_v_;
  std::vector<Matrix> rho_;
  bool verified_ = false;
};

/// The adjoint representation ad: pairs of g acting on g by the bracket.
/// Carrier must be verified; the result is a representation by construction.
Representation adjoint(const ThreeLieAlgebra& a);

/// Zero action of a verified algebra on a dim_v-dimensional space.
Representation zero_representation(const ThreeLieAlgebra& a, std::size_t dim_v);

/**
 * Checks both representation identities:
 *   [rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3], x4) + rho(x3, [x1,x2,x4])
 * on pairs-of-pairs (i<j, k<l), and
 *   rho([x1,x2,x3], x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4)
 *                         + rho(x3,x1)rho(x2,x4)
 * on (i<j<k, l). Violations record the flattened matrix difference sides.
 */
Report check_representation(const Representation& rep);

Report verify_representation(Representation& rep);

/// Alternating 3-form on g with values in V, canonical i<j<k storage.
class TwoCochain {
 public:
  TwoCochain(std::size_t dim_g, std::size_t dim_v);

  std::size_t dim_g() const { return dim_g_; }
  std::size_t dim_v() const { return dim_v_; }

  void set_value(std::size_t i, std::size_t j, std::size_t k, Vec value);
  Vec eval_basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;
  const Vec& slot(std::size_t t) const { return values_[t]; }
  bool is_zero() const;

  TwoCochain& operator-=(const TwoCochain& other);
  friend TwoCochain operator-(TwoCochain a, const TwoCochain& b) { return a -= b; }
  friend bool operator==(const TwoCochain& a, const TwoCochain& b) = default;

  /// Set after check_2cocycle passes against the context representation, or
  /// by constructions that always yield 2-cocycles.
  bool verified() const { return verified_; }
  void mark_verified() { verified_ = true; }

 private:
  std::size_t dim_g_;
  std::size_t dim_v_;
  std::vector<Vec> values_;
  bool verified_ = false;
};

/// Evaluates the 2-cocycle identity on tuples (x1<x2, x3<x4<x5).
Report check_2cocycle(const Representation& rep, const TwoCochain& phi);

Report verify_2cocycle(const Representation& rep, TwoCochain& phi);

/// Phi(x,y,z) = sign * [x,y,z]_g as a g-valued cochain; with sign -1 this is
/// the 2-cocycle of the Reynolds-to-twisted-operator bridge.
TwoCochain bracket_cochain(const ThreeLieAlgebra& a, int sign);

/**
 * The coboundary of a linear map f: g -> V (given as a dim_v x d matrix),
 * restricted to the alternating subspace:
 *   (df)(x,y,z) = -f[x,y,z] + rho(x,y)f(z) + rho(y,z)f(x) + rho(z,x)f(y).
 * f is a 1-cocycle exactly when this vanishes.
 */
TwoCochain coboundary_of_linear(const Representation& rep, const Matrix& f);

/**
 * The Phi-twisted semidirect product on g (+) V:
 *   [(x,u),(y,v),(z,w)] = ([x,y,z], rho(x,y)w + rho(y,z)u + rho(z,x)v + Phi(x,y,z)).
 * Requires rep and phi verified; the result is a 3-Lie algebra and is
 * returned marked verified.
 */
ThreeLieAlgebra twisted_semidirect(const Representation& rep, const TwoCochain& phi);

/// The gauge map Psi_f = [[Id, 0], [f, Id]] on g (+) V; an isomorphism from
/// the Phi-twisted semidirect product to the (Phi - df)-twisted one.
Matrix psi_f(const Representation& rep, const Matrix& f);

}  // namespace tlie
