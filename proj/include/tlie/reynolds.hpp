#pragma once

#include "tlie/twisted_rbo.hpp"

namespace tlie {

/// Reynolds condition:
///   [Rx,Ry,Rz] = R( [Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz] - [Rx,Ry,Rz] ).
bool check_reynolds(const ThreeLieAlgebra& a, const Matrix& r);
Report reynolds_report(const ThreeLieAlgebra& a, const Matrix& r);

/// [x,y,z]_R = [Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz] - [Rx,Ry,Rz]; satisfies
/// R[x,y,z]_R = [Rx,Ry,Rz], is a 3-Lie bracket, and R stays Reynolds on it.
ThreeLieAlgebra reynolds_bracket(const ThreeLieAlgebra& a, const Matrix& r);

/// A Reynolds operator as a twisted Rota-Baxter operator for the adjoint
/// representation with Phi = -bracket.
TwistedRbo trbo_from_reynolds(const ThreeLieAlgebra& a, const Matrix& r);

/// R^{-1} - (1/2) Id is a derivation; throws singular for non-invertible R.
Matrix derivation_from_reynolds(const ThreeLieAlgebra& a, const Matrix& r);

/// (D + (1/2) Id)^{-1} is a Reynolds operator; throws not_a_derivation or
/// singular.
Matrix reynolds_from_derivation(const ThreeLieAlgebra& a, const Matrix& d);

}  // namespace tlie
