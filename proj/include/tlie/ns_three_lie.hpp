#pragma once

#include "tlie/twisted_rbo.hpp"

namespace tlie {

/**
 * An NS-3-Lie algebra: a curly product skew in its first two slots only
 * (stored for i<j and every third index) and a fully skew square bracket
 * (canonical i<j<k storage). The angle bracket is the combination
 *   <<x,y,z>> = {x,y,z} + {y,z,x} + {z,x,y} + [x,y,z].
 */
class NsThreeLie {
 public:
  explicit NsThreeLie(std::size_t dim);

  std::size_t dim() const { return dim_; }

  void set_curly(std::size_t i, std::size_t j, std::size_t k, Vec value);  // i<j, any k
  void set_square(std::size_t i, std::size_t j, std::size_t k, Vec value);  // i<j<k

  Vec curly_basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec square_basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec angle_basis(std::size_t i, std::size_t j, std::size_t k) const;

  Vec curly(const Vec& x, const Vec& y, const Vec& z) const;
  Vec square(const Vec& x, const Vec& y, const Vec& z) const;

  bool verified() const { return verified_; }
  void mark_verified() { verified_ = true; }

 private:
  std::size_t dim_;
  std::vector<Vec> curly_;   // pair-major: pair_index * dim + k
  std::vector<Vec> square_;  // canonical triples
  bool verified_ = false;
};

/**
 * Checks the NS axioms. The first-two-slot skewness is structural; the three
 * remaining axioms run on reduced tuple sets justified by their symmetries:
 * the derivation-style axiom on (x1<x2; x3,x4,x5 free), the L-composition
 * axiom on (x1<x2<x3; x4,x5 free), and the mixed bracket axiom on
 * (x1<x2; x3<x4<x5).
 */
Report check_ns_axioms(const NsThreeLie& a);
Report verify_ns_axioms(NsThreeLie& a);

/// Sub-adjacent 3-Lie algebra on the angle bracket.
ThreeLieAlgebra subadjacent(const NsThreeLie& a);

/// L(x,y)z = {x,y,z}: a representation of the sub-adjacent algebra on A.
Representation l_representation(const NsThreeLie& a);

/// NS structure induced by a verified twisted Rota-Baxter operator:
/// {u,v,w} = rho(Tu,Tv)w and [u,v,w] = Phi(Tu,Tv,Tw). Its sub-adjacent
/// algebra is the induced bracket on V.
NsThreeLie ns_from_trbo(const TwistedRbo& op);

/// psi preserves both products.
bool check_ns_homomorphism(const Matrix& psi, const NsThreeLie& a, const NsThreeLie& b);

}  // namespace tlie
