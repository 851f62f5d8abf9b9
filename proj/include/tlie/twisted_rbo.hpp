#pragma once

#include "tlie/cochain.hpp"

#include <array>

namespace tlie {

/**
 * A linear map T: V -> g bundled with its ambient context: a verified
 * representation (V; rho) of a verified 3-Lie algebra g, and a verified
 * 2-cocycle Phi. `verified` is set once the twisted Rota-Baxter identity
 *   [Tu,Tv,Tw] = T( rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v + Phi(Tu,Tv,Tw) )
 * has been checked, or holds by construction.
 */
struct TwistedRbo {
  Representation rep;
  TwoCochain phi;
  Matrix t;  // dim(g) x dim(V)
  bool verified = false;

  std::size_t dim_g() const { return rep.dim(); }
  std::size_t dim_v() const { return rep.dim_v(); }
  Vec apply_t(const Vec& v) const { return t.apply(v); }
};

/// Bundles the pieces after validating shapes and context verification flags.
TwistedRbo make_twisted_rbo(Representation rep, TwoCochain phi, Matrix t);

/// Checks the twisted Rota-Baxter identity on all basis triples u<v<w of V.
Report check_twisted_rbo(const TwistedRbo& op);
Report verify_twisted_rbo(TwistedRbo& op);

/// T = f^{-1} is a (-df)-twisted Rota-Baxter operator for any invertible
/// linear f: g -> V. Throws singular when f is not invertible.
TwistedRbo trbo_from_invertible_map(const Representation& rep, const Matrix& f);

/// Whether the graph {(Tu, u)} closes under the twisted semidirect bracket;
/// equivalent to the twisted Rota-Baxter identity.
bool graph_closure_check(const TwistedRbo& op);

/// The induced 3-Lie bracket [u,v,w]_T on V; T becomes a homomorphism into g.
ThreeLieAlgebra induced_bracket(const TwistedRbo& op);

/// The representation of (V, [.,.,.]_T) on g:
///   varrho(u,v)x = [Tu,Tv,x] - T( rho(x,Tu)v + rho(Tv,x)u + Phi(Tu,Tv,x) ).
Representation induced_rep_varrho(const TwistedRbo& op);

/// delta(x^y): V -> g,  v |-> T rho(x,y)v - [x,y,Tv] + T Phi(x,y,Tv);
/// always a 1-cocycle of the induced complex.
Matrix delta(const TwistedRbo& op, const Vec& x, const Vec& y);

/// Coboundary of the complex of (V,[.,.,.]_T) with coefficients in varrho.
NCochain coboundary_dT(const TwistedRbo& op, const NCochain& f, const CochainOptions& opts = {});

/// Cochain dimensions of the operator complex: C^1 = g^g with boundary
/// delta, C^n = C^{n-1}(V; g) with boundary d_T for n >= 2.
std::vector<CohomologyRow> trbo_cohomology_dims(const TwistedRbo& op, std::size_t n_max,
                                                const CochainOptions& opts = {});

/// Gauge by a T-admissible 1-cocycle: T_f = T (Id + f T)^{-1}.
/// Throws not_a_cocycle / not_admissible.
TwistedRbo t_admissible_gauge(const TwistedRbo& op, const Matrix& f);

/// Homomorphism of twisted Rota-Baxter operators sharing a context:
/// phi a 3-Lie endomorphism of g with phi T = T' psi, psi intertwining rho
/// along phi, and psi Phi = Phi (phi x phi x phi).
bool check_trbo_homomorphism(const Matrix& phi_g, const Matrix& psi_v, const TwistedRbo& from,
                             const TwistedRbo& to);

struct DeformationReport {
  /// Coefficient identities of T + t*frakT in degrees t^1..t^4.
  std::array<Report, 4> identities;
  /// The degree-1 identity alone: frakT is a 1-cocycle of the operator
  /// complex, hence defines a class in H^2_T.
  bool is_cocycle() const { return identities[0].passed(); }
  bool all_passed() const {
    for (const auto& r : identities)
      if (!r.passed()) return false;
    return true;
  }
};

/// Checks whether frak_t generates a one-parameter infinitesimal deformation
/// of op, as the four t-coefficient identities on all basis triples of V.
DeformationReport check_deformation(const TwistedRbo& op, const Matrix& frak_t);

/**
 * Equivalence of the deformations T + t*frak1 and T + t*frak2 along the pair
 * (Id + t ad_X, Id + t rho(X) + t Phi(X,T.)) with X = x^y:
 *   frak1(u) - frak2(u) = T rho(X)u - [X,Tu] + T Phi(X,Tu)
 *   [X, frak1(u)]       = frak2( rho(X)u + Phi(X,Tu) )
 * on all basis vectors. When the result is true the difference frak1 - frak2
 * equals the boundary delta(X) exactly.
 */
bool check_deformation_equivalence(const TwistedRbo& op, const Matrix& frak1, const Matrix& frak2,
                                   const Vec& x, const Vec& y);

/// The full homomorphism conditions for the pair of Def-style deformations,
/// checked coefficientwise over the polynomial ring in t (no sampling).
bool check_formal_equivalence(const TwistedRbo& op, const Matrix& frak1, const Matrix& frak2,
                              const Vec& x, const Vec& y);

}  // namespace tlie
