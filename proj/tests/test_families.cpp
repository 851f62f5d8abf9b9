#include "tlie/families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "tlie/reynolds.hpp"

using namespace tlie;

namespace {

Rational det3_oracle(std::array<std::array<long long, 3>, 3> rows) {
  Matrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  return oracle::determinant(m);
}

}  // namespace

TEST_CASE("Laurent bracket closed form") {
  REQUIRE(laurent_bracket(2, 2, 5).coeff == 0);  // repeated column

  LaurentTerm t234 = laurent_bracket(2, 3, 4);
  REQUIRE(t234.coeff == det3_oracle({{{1, -1, 1}, {1, 1, 1}, {2, 3, 4}}}));
  REQUIRE(t234.coeff == 4);
  REQUIRE(t234.exponent == 8);

  LaurentTerm t012 = laurent_bracket(0, 1, 2);
  REQUIRE(t012.coeff == det3_oracle({{{1, -1, 1}, {1, 1, 1}, {0, 1, 2}}}));
  REQUIRE(t012.coeff == 4);
  REQUIRE(t012.exponent == 2);

  // Column swaps flip the sign.
  REQUIRE(laurent_bracket(3, 2, 4).coeff == -t234.coeff);
  REQUIRE(laurent_bracket(4, 3, 2).coeff == -t234.coeff);
}

TEST_CASE("omega bracket closed form") {
  REQUIRE(omega_bracket({1, 0}, {1, 0}, {3, 2}).coeff == 0);
  REQUIRE(omega_bracket({1, 0}, {2, 0}, {3, 0}).coeff == 0);  // proportional rows

  OmegaTerm t = omega_bracket({0, 0}, {1, 0}, {0, 1});
  REQUIRE(t.coeff == 1);
  REQUIRE(t.index == OmegaIndex{1, 2});

  REQUIRE(omega_bracket({1, 0}, {0, 0}, {0, 1}).coeff == -1);
}

TEST_CASE("the scaling-factor identity holds wherever defined") {
  // (1/lm + 1/mn + 1/ln - 1/lmn) / (l+m+n-1) = 1/lmn, independent of the
  // determinant coefficient; same shape for the omega denominators.
  for (auto [l, m, n] : laurent_sample_triples(-6, 7)) {
    Rational inner = Rational(1) / (Rational(l) * Rational(m)) +
                     Rational(1) / (Rational(m) * Rational(n)) +
                     Rational(1) / (Rational(l) * Rational(n)) -
                     Rational(1) / (Rational(l) * Rational(m) * Rational(n));
    REQUIRE(inner / Rational(l + m + n - 1) ==
            Rational(1) / (Rational(l) * Rational(m) * Rational(n)));
  }
  for (auto [a, b, c] : omega_sample_triples(-2, 2, -2, 2)) {
    Rational da(a.mode + a.weight + 1), db(b.mode + b.weight + 1), dc(c.mode + c.weight + 1);
    // target denominator m+n+p+a+b+c+2 = da + db + dc - 1
    Rational inner = 1 / (da * db) + 1 / (db * dc) + 1 / (da * dc) - 1 / (da * db * dc);
    REQUIRE(inner / (da + db + dc - 1) == 1 / (da * db * dc));
  }
}

TEST_CASE("sampled Reynolds identity for the Laurent family") {
  // The worked example: coefficients match through the closed forms.
  Report r = check_laurent_reynolds({{{2, 3, 4}}, {{1, -1, 2}}});
  REQUIRE(r.passed());
  REQUIRE(r.tuples_checked == 2);

  REQUIRE_THROWS_AS(check_laurent_reynolds({{{0, 1, 2}}}), Error);  // l = 0
  REQUIRE_THROWS_AS(check_laurent_reynolds({{{1, 2, -2}}}), Error);  // l+m+n-1 = 0

  auto samples = laurent_sample_triples(-5, 6);
  REQUIRE(samples.size() > 100);
  REQUIRE(check_laurent_reynolds(samples).passed());
}

TEST_CASE("sampled Reynolds identity for the omega family") {
  auto samples = omega_sample_triples(-3, 3, -3, 3);
  REQUIRE(samples.size() > 1000);
  REQUIRE(check_omega_reynolds(samples).passed());

  REQUIRE_THROWS_AS(check_omega_reynolds({{OmegaIndex{0, -1}, OmegaIndex{1, 0}, OmegaIndex{2, 0}}}),
                    Error);  // m+a+1 = 0
}

TEST_CASE("Laurent window materialization") {
  PartialAlgebra pa = materialize_laurent_window(1, 9);
  REQUIRE(pa.algebra.dim() == 9);

  // (2,3,4) lands at exponent 8, inside the window.
  Vec v = pa.algebra.bracket_basis(1, 2, 3);  // generators t^2, t^3, t^4
  REQUIRE(v[7] == 4);

  // (3,4,5) from a [1,5] window lands at exponent 11, escaping.
  PartialAlgebra small = materialize_laurent_window(1, 5);
  REQUIRE(small.escaping.contains(triple_index(5, 2, 3, 4)));
  REQUIRE(is_zero(small.algebra.bracket_basis(2, 3, 4)));
}

TEST_CASE("windowed fundamental identity check") {
  PartialAlgebra pa = materialize_laurent_window(1, 12);
  Report r = check_fi_windowed(pa);
  REQUIRE(r.passed());
  REQUIRE(r.tuples_checked > 0);
  REQUIRE_FALSE(r.skipped.empty());  // high-degree tuples escape
  REQUIRE(pa.algebra.verified());
}

TEST_CASE("the window Reynolds operator verifies and matches closed forms") {
  PartialAlgebra pa = materialize_laurent_window(1, 12);
  REQUIRE(check_fi_windowed(pa).passed());
  Matrix r = reynolds_endo(pa);
  REQUIRE(check_reynolds(pa.algebra, r));

  ThreeLieAlgebra ar = reynolds_bracket(pa.algebra, r);
  // [t^l,t^m,t^n]_R = ((l+m+n-1)/(lmn)) det t^{l+m+n-1} on in-window triples.
  for (long long l = 1; l <= 4; ++l)
    for (long long m = l + 1; m <= 5; ++m)
      for (long long n = m + 1; n <= 6; ++n) {
        if (l + m + n - 1 > 12) continue;
        LaurentTerm expected = laurent_reynolds_bracket(l, m, n);
        Vec got = ar.bracket_basis(static_cast<std::size_t>(l - 1),
                                   static_cast<std::size_t>(m - 1),
                                   static_cast<std::size_t>(n - 1));
        REQUIRE(got[static_cast<std::size_t>(expected.exponent - 1)] == expected.coeff);
      }

  // A window containing t^0 has no Reynolds scale there.
  PartialAlgebra with_zero = materialize_laurent_window(-2, 2);
  REQUIRE_THROWS_AS(reynolds_endo(with_zero), Error);
}

TEST_CASE("omega window materialization and Reynolds check") {
  PartialAlgebra pa = materialize_omega_window(0, 2, 0, 2);
  REQUIRE(pa.algebra.dim() == 9);
  Report fi = check_fi_windowed(pa);
  REQUIRE(fi.passed());
  Matrix r = reynolds_endo(pa);
  REQUIRE(check_reynolds(pa.algebra, r));
}
