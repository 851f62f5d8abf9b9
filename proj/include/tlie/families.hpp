#pragma once

#include "tlie/three_lie.hpp"

#include <array>
#include <optional>
#include <set>

namespace tlie {

/// One graded component: coefficient times a single generator.
struct LaurentTerm {
  Rational coeff;
  long long exponent = 0;
};

/// [t^l, t^m, t^n] = det[[(-1)^l,(-1)^m,(-1)^n],[1,1,1],[l,m,n]] t^{l+m+n-1}.
LaurentTerm laurent_bracket(long long l, long long m, long long n);

/// Closed form of the Reynolds-induced bracket on Laurent polynomials:
/// ((l+m+n-1)/(lmn)) times the determinant coefficient. Throws
/// undefined_denominator when l, m, n or l+m+n-1 vanishes.
LaurentTerm laurent_reynolds_bracket(long long l, long long m, long long n);

struct OmegaIndex {
  long long mode = 0;    // m
  long long weight = 0;  // a
  friend bool operator==(const OmegaIndex&, const OmegaIndex&) = default;
};

struct OmegaTerm {
  Rational coeff;
  OmegaIndex index;
};

/// [w^a_m, w^b_n, w^c_p] = det[[1,1,1],[m,n,p],[a,b,c]] w^{a+b+c+1}_{m+n+p}.
OmegaTerm omega_bracket(OmegaIndex a, OmegaIndex b, OmegaIndex c);

/// ((m+n+p+a+b+c+2)/((m+a+1)(n+b+1)(p+c+1))) times the determinant
/// coefficient; throws undefined_denominator on vanishing denominators.
OmegaTerm omega_reynolds_bracket(OmegaIndex a, OmegaIndex b, OmegaIndex c);

/**
 * Verifies the Reynolds identity for R(t^l) = t^l / l exactly at each sampled
 * triple through the closed forms. Preconditions per triple: l, m, n nonzero
 * and l+m+n-1 nonzero; violations of the precondition throw
 * undefined_denominator (callers build sample lists with the helpers below).
 */
Report check_laurent_reynolds(const std::vector<std::array<long long, 3>>& samples);

/// Same for R(w^a_m) = w^a_m / (m+a+1); per-triple preconditions are the
/// three generator denominators and the target denominator.
Report check_omega_reynolds(const std::vector<std::array<OmegaIndex, 3>>& samples);

/// All strictly increasing exponent triples in [lo, hi] minus the excluded
/// denominators (the module's default sampling scheme).
std::vector<std::array<long long, 3>> laurent_sample_triples(long long lo, long long hi);

/// All index triples of distinct generators on the (mode, weight) box minus
/// excluded denominators.
std::vector<std::array<OmegaIndex, 3>> omega_sample_triples(long long mode_lo, long long mode_hi,
                                                            long long weight_lo,
                                                            long long weight_hi);

/**
 * A finite materialization of an infinite graded family: the in-window
 * structure constants plus the set of basis triples whose bracket escapes
 * the window (stored as zero in the algebra). Checks on the materialized
 * algebra are restricted to tuples that never touch an escaping triple.
 */
struct PartialAlgebra {
  ThreeLieAlgebra algebra;
  std::set<std::size_t> escaping;           // canonical triple indices
  std::vector<std::string> labels;          // generator names for reports
  std::vector<std::optional<Rational>> reynolds_scale;  // diagonal of R, when defined
};

PartialAlgebra materialize_laurent_window(long long lo, long long hi);
PartialAlgebra materialize_omega_window(long long mode_lo, long long mode_hi, long long weight_lo,
                                        long long weight_hi);

/// ad_{e_i,e_j} w with escape tracking: nullopt when a touched structure
/// constant escapes the window with a nonzero coefficient in w.
std::optional<Vec> tracked_ad_apply(const PartialAlgebra& pa, std::size_t i, std::size_t j,
                                    const Vec& w);

/**
 * Fundamental-identity check restricted to 5-tuples whose every intermediate
 * bracket stays in-window; the skipped tuples are reported. A restricted
 * pass marks the materialized algebra verified.
 */
Report check_fi_windowed(PartialAlgebra& pa);

/// The diagonal Reynolds operator of the family on the window basis; throws
/// undefined_denominator if any in-window generator has no defined scale.
Matrix reynolds_endo(const PartialAlgebra& pa);

}  // namespace tlie
