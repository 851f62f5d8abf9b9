#include "tlie/ns_three_lie.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

#include "tlie/nijenhuis.hpp"
#include "tlie/reynolds.hpp"

using namespace tlie;

namespace {

/// An O-operator on (dim3; ad) with nonzero left multiplication: the induced
/// NS structure is a genuine 3-pre-Lie algebra (square bracket zero).
TwistedRbo pre_lie_source() {
  ThreeLieAlgebra a = fix::dim3();
  Representation ad = adjoint(a);
  TwoCochain phi(3, 3);
  REQUIRE(verify_2cocycle(ad, phi).passed());
  Matrix t(3, 3);
  t(0, 1) = 1;  // e2 -> e1
  t(1, 2) = 1;  // e3 -> e2
  TwistedRbo op = make_twisted_rbo(ad, phi, t);
  REQUIRE(verify_twisted_rbo(op).passed());
  return op;
}

bool same_brackets(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t)
    if (a.canonical_slot(t) != b.canonical_slot(t)) return false;
  return true;
}

TwistedRbo reynolds_op() {
  ThreeLieAlgebra a = fix::dim3();
  return trbo_from_reynolds(a, fix::reynolds_dim3());
}

}  // namespace

TEST_CASE("degenerate NS structures") {
  SECTION("zero curly with a 3-Lie square bracket") {
    ThreeLieAlgebra a = fix::dim3();
    NsThreeLie ns(3);
    for (std::size_t t = 0; t < triple_count(3); ++t) {
      auto [i, j, k] = triple_at(3, t);
      ns.set_square(i, j, k, a.bracket_basis(i, j, k));
    }
    REQUIRE(check_ns_axioms(ns).passed());
    ns.mark_verified();
    REQUIRE(same_brackets(subadjacent(ns), a));
  }

  SECTION("zero square from a 3-pre-Lie source") {
    NsThreeLie ns = ns_from_trbo(pre_lie_source());
    bool has_curly = false;
    for (std::size_t p = 0; p < pair_count(3); ++p)
      for (std::size_t k = 0; k < 3; ++k) {
        auto [i, j] = pair_at(3, p);
        if (!is_zero(ns.curly_basis(i, j, k))) has_curly = true;
        REQUIRE(is_zero(ns.square_basis(0, 1, 2)));
      }
    REQUIRE(has_curly);
    REQUIRE(check_ns_axioms(ns).passed());
  }
}

TEST_CASE("curly bracket is skew in its first two slots only") {
  NsThreeLie ns = ns_from_trbo(reynolds_op());
  fix::Rng rng(61);
  Vec x = rng.vec(3), y = rng.vec(3), z = rng.vec(3);
  REQUIRE(ns.curly(x, y, z) == negate(ns.curly(y, x, z)));
  REQUIRE(is_zero(ns.curly(x, x, z)));
}

TEST_CASE("induced NS structures satisfy the axioms") {
  fix::Rng rng(62);
  ThreeLieAlgebra a = fix::dim3();

  std::vector<NsThreeLie> instances;
  instances.push_back(ns_from_trbo(reynolds_op()));
  instances.push_back(ns_from_trbo(pre_lie_source()));
  instances.push_back(ns_from_nijenhuis(a, rng.matrix(3, 3)));
  instances.push_back(ns_from_trbo(trbo_from_invertible_map(adjoint(a), rng.invertible_matrix(3))));

  for (NsThreeLie& ns : instances) {
    REQUIRE(check_ns_axioms(ns).passed());
    ThreeLieAlgebra sub = subadjacent(ns);
    REQUIRE(check_fundamental_identity(sub).passed());
    REQUIRE(check_representation(l_representation(ns)).passed());
  }
}

TEST_CASE("the subadjacent algebra of an induced NS is the induced bracket") {
  for (const TwistedRbo& op : {reynolds_op(), pre_lie_source()}) {
    NsThreeLie ns = ns_from_trbo(op);
    REQUIRE(same_brackets(subadjacent(ns), induced_bracket(op)));
  }
}

TEST_CASE("perturbing an NS instance breaks the axioms") {
  NsThreeLie ns = ns_from_trbo(reynolds_op());
  Vec v = ns.curly_basis(0, 1, 0);
  v[1] += 1;
  ns.set_curly(0, 1, 0, v);
  REQUIRE(check_ns_axioms(ns).outcome == Outcome::fail);
}

TEST_CASE("NS homomorphisms") {
  NsThreeLie ns = ns_from_trbo(reynolds_op());
  REQUIRE(check_ns_homomorphism(Matrix::identity(3), ns, ns));
  // Minus the identity preserves trilinear products.
  REQUIRE(check_ns_homomorphism(Rational(-1) * Matrix::identity(3), ns, ns));
  // Doubling scales cubically on one side and linearly on the other.
  REQUIRE_FALSE(check_ns_homomorphism(Rational(2) * Matrix::identity(3), ns, ns));
  REQUIRE_THROWS_AS(check_ns_homomorphism(Matrix(2, 3), ns, ns), Error);
}

TEST_CASE("operator homomorphisms descend to the induced NS structures") {
  // An equivalent deformation pair evaluated at t = 1 gives two twisted
  // operators with an honest homomorphism between them; the V-side map is
  // then an NS homomorphism of the induced structures.
  fix::Rng rng(63);
  ThreeLieAlgebra a = fix::dim3();
  Representation ad = adjoint(a);
  TwoCochain phi0(3, 3);
  REQUIRE(verify_2cocycle(ad, phi0).passed());

  for (int trial = 0; trial < 5; ++trial) {
    Matrix t(3, 3);
    for (std::size_t c = 0; c < 3; ++c) t(0, c) = rng.rational();
    TwistedRbo base = make_twisted_rbo(ad, phi0, t);
    REQUIRE(verify_twisted_rbo(base).passed());

    Matrix frak2(3, 3);
    frak2(0, 1) = rng.rational();
    frak2(0, 2) = rng.rational();
    Vec x = zero_vec(3);
    x[0] = 1;
    Vec y = zero_vec(3);
    y[1] = rng.rational();
    y[2] = rng.rational();
    Matrix frak1 = frak2 + delta(base, x, y);

    TwistedRbo op1 = base, op2 = base;
    op1.t += frak1;
    op2.t += frak2;
    REQUIRE(verify_twisted_rbo(op1).passed());
    REQUIRE(verify_twisted_rbo(op2).passed());

    Matrix ad_x(3, 3);
    for (std::size_t m = 0; m < 3; ++m) {
      Vec e = zero_vec(3);
      e[m] = 1;
      ad_x.set_col(m, a.bracket(x, y, e));
    }
    Matrix phi_map = Matrix::identity(3) + ad_x;  // Phi = 0, V = g under ad
    REQUIRE(check_trbo_homomorphism(phi_map, phi_map, op1, op2));
    REQUIRE(check_ns_homomorphism(phi_map, ns_from_trbo(op1), ns_from_trbo(op2)));
  }
}
