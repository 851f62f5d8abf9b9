#include "tlie/reynolds.hpp"

#include "tuple_check.hpp"

namespace tlie {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

void require_endo(const ThreeLieAlgebra& a, const Matrix& r, const char* who) {
  if (!a.verified())
    throw Error(ErrorKind::unverified_input, std::string(who) + " needs a verified algebra");
  if (r.rows() != a.dim() || r.cols() != a.dim())
    throw Error(ErrorKind::dimension_mismatch, std::string(who) + " needs an endomorphism of g");
}

Vec reynolds_value(const ThreeLieAlgebra& a, const Matrix& r, std::size_t i, std::size_t j,
                   std::size_t k) {
  const std::size_t d = a.dim();
  Vec ri = r.col(i), rj = r.col(j), rk = r.col(k);
  Vec out = a.bracket(ri, rj, unit(d, k));
  axpy(out, 1, a.bracket(unit(d, i), rj, rk));
  axpy(out, 1, a.bracket(ri, unit(d, j), rk));
  axpy(out, -1, a.bracket(ri, rj, rk));
  return out;
}

}  // namespace

Report reynolds_report(const ThreeLieAlgebra& a, const Matrix& r) {
  require_endo(a, r, "check_reynolds");
  return detail::run_tuple_check(
      "reynolds", triple_count(a.dim()), [&](std::size_t t) -> std::optional<Violation> {
        auto [i, j, k] = triple_at(a.dim(), t);
        Vec lhs = a.bracket(r.col(i), r.col(j), r.col(k));
        Vec rhs = r.apply(reynolds_value(a, r, i, j, k));
        if (lhs == rhs) return std::nullopt;
        return Violation{"(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
                             std::to_string(k + 1) + ")",
                         std::move(lhs), std::move(rhs)};
      });
}

bool check_reynolds(const ThreeLieAlgebra& a, const Matrix& r) {
  return reynolds_report(a, r).passed();
}

ThreeLieAlgebra reynolds_bracket(const ThreeLieAlgebra& a, const Matrix& r) {
  if (!check_reynolds(a, r))
    throw Error(ErrorKind::not_reynolds, "operator fails the Reynolds condition");
  ThreeLieAlgebra out(a.dim());
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    out.set_bracket(i, j, k, reynolds_value(a, r, i, j, k));
  }
  out.mark_verified();
  return out;
}

TwistedRbo trbo_from_reynolds(const ThreeLieAlgebra& a, const Matrix& r) {
  if (!check_reynolds(a, r))
    throw Error(ErrorKind::not_reynolds, "operator fails the Reynolds condition");
  // The bracket itself is a 2-cocycle for the adjoint representation, so the
  // sign-flipped cochain is one as well.
  TwoCochain phi = bracket_cochain(a, -1);
  phi.mark_verified();
  TwistedRbo op = make_twisted_rbo(adjoint(a), std::move(phi), r);
  op.verified = true;
  return op;
}

Matrix derivation_from_reynolds(const ThreeLieAlgebra& a, const Matrix& r) {
  if (!check_reynolds(a, r))
    throw Error(ErrorKind::not_reynolds, "operator fails the Reynolds condition");
  auto inv = invert(r);
  if (!inv) throw Error(ErrorKind::singular, "Reynolds operator is not invertible");
  Matrix out = *inv;
  out -= Rational(1, 2) * Matrix::identity(a.dim());
  return out;
}

Matrix reynolds_from_derivation(const ThreeLieAlgebra& a, const Matrix& d) {
  require_endo(a, d, "reynolds_from_derivation");
  if (!check_derivation(a, d))
    throw Error(ErrorKind::not_a_derivation, "map fails the derivation identity");
  Matrix p = d;
  p += Rational(1, 2) * Matrix::identity(a.dim());
  auto inv = invert(p);
  if (!inv) throw Error(ErrorKind::singular, "D + Id/2 is not invertible");
  return *inv;
}

}  // namespace tlie
