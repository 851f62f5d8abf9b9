#pragma once

#include "tlie/matrix.hpp"
#include "tlie/report.hpp"

#include <array>
#include <cstddef>

namespace tlie {

std::size_t pair_count(std::size_t dim);
std::size_t triple_count(std::size_t dim);
std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j);
std::size_t triple_index(std::size_t dim, std::size_t i, std::size_t j, std::size_t k);
std::array<std::size_t, 2> pair_at(std::size_t dim, std::size_t index);
std::array<std::size_t, 3> triple_at(std::size_t dim, std::size_t index);

/// Sorts (i,j,k) ascending in place; returns the permutation sign,
/// or 0 when an index repeats.
int sort3_sign(std::size_t& i, std::size_t& j, std::size_t& k);

/**
 * A 3-Lie algebra of dimension d given by structure constants.
 *
 * Bracket values are stored only on canonical slots i<j<k; every other index
 * pattern is produced by the permutation sign on access, so full
 * skew-symmetry holds structurally and cannot be violated by inputs.
 */
class ThreeLieAlgebra {
 public:
  explicit ThreeLieAlgebra(std::size_t dim);

  std::size_t dim() const { return dim_; }

  /// Canonical slot write, i<j<k required.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec value);

  /// [e_i, e_j, e_k] for any index pattern (sign applied, zero on repeats).
  Vec bracket_basis(std::size_t i, std::size_t j, std::size_t k) const;

  /// Trilinear evaluation on arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

  /// ad_{e_i,e_j} w = [e_i, e_j, w], linear in w.
  Vec ad_apply(std::size_t i, std::size_t j, const Vec& w) const;

  const Vec& canonical_slot(std::size_t t) const { return c_[t]; }

  /// Set after a fundamental-identity check passes, or by constructors whose
  /// output is a 3-Lie algebra by construction.
  bool verified() const { return verified_; }
  void mark_verified() { verified_ = true; }

 private:
  std::size_t dim_;
  std::vector<Vec> c_;
  bool verified_ = false;
};

/// Matrix of ad_{e_i,e_j} on the basis.
Matrix ad_matrix(const ThreeLieAlgebra& a, std::size_t i, std::size_t j);

/**
 * Checks the fundamental identity on basis tuples x1<x2, x3<x4<x5.
 *
 * Both sides of the identity are multilinear, skew in (x1,x2) and skew in
 * (x3,x4,x5), and vanish identically on repeated arguments, so this tuple
 * set spans all cases. Every violating tuple is reported with both sides.
 */
Report check_fundamental_identity(const ThreeLieAlgebra& a);

/// Runs the FI check and marks the algebra verified on pass.
Report verify_fundamental_identity(ThreeLieAlgebra& a);

/// D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz] on all basis triples i<j<k.
bool check_derivation(const ThreeLieAlgebra& a, const Matrix& d);
Report derivation_report(const ThreeLieAlgebra& a, const Matrix& d);

/// phi[x,y,z]_A = [phi x, phi y, phi z]_B on all basis triples of A.
bool check_homomorphism(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b, const Matrix& phi);

}  // namespace tlie
