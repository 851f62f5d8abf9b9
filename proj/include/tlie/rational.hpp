#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace tlie {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/**
 * Parse a rational from the serialized forms "p" or "p/q".
 *
 * The denominator must be a nonzero integer; the stored value is reduced
 * with a positive denominator. Throws Error(parse) on malformed input.
 */
Rational rational_from_string(const std::string& text);

/// Serialize as "p" (q = 1) or "p/q" with q > 0.
std::string to_string(const Rational& value);

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(const Vec& v);
Vec scale(const Rational& c, const Vec& v);

/// y += c * x
void axpy(Vec& y, const Rational& c, const Vec& x);

std::string to_string(const Vec& v);

}  // namespace tlie
