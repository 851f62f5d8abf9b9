#pragma once

#include "tlie/ns_three_lie.hpp"

namespace tlie {

/// Nijenhuis condition: [Nx,Ny,Nz] = N( [Nx,Ny,z] + [x,Ny,Nz] + [Nx,y,Nz]
///   - N[Nx,y,z] - N[x,Ny,z] - N[x,y,Nz] + N^2[x,y,z] ) on basis triples.
bool check_nijenhuis(const ThreeLieAlgebra& a, const Matrix& n);
Report nijenhuis_report(const ThreeLieAlgebra& a, const Matrix& n);

/// The deformed algebra g_N; N is a homomorphism g_N -> g.
/// Throws not_nijenhuis when the condition fails.
ThreeLieAlgebra deformed_bracket(const ThreeLieAlgebra& a, const Matrix& n);

/// rho_N(x,y)z = [Nx,Ny,z]: a representation of g_N on g.
Representation rho_n(const ThreeLieAlgebra& a, const Matrix& n);

/// Phi_N(x,y,z) = -N([Nx,y,z]+[x,Ny,z]+[x,y,Nz]) + N^2[x,y,z]:
/// a 2-cocycle of g_N with coefficients in rho_N.
TwoCochain phi_n(const ThreeLieAlgebra& a, const Matrix& n);

/// The identity map as a Phi_N-twisted Rota-Baxter operator on g_N.
TwistedRbo nijenhuis_trbo(const ThreeLieAlgebra& a, const Matrix& n);

/// The NS structure {x,y,z} = [Nx,Ny,z], [x,y,z] = Phi_N(x,y,z) on g.
NsThreeLie ns_from_nijenhuis(const ThreeLieAlgebra& a, const Matrix& n);

}  // namespace tlie
