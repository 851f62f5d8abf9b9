#include "tlie/nijenhuis.hpp"

#include "tuple_check.hpp"

namespace tlie {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

void require_square(const ThreeLieAlgebra& a, const Matrix& n, const char* who) {
  if (!a.verified())
    throw Error(ErrorKind::unverified_input, std::string(who) + " needs a verified algebra");
  if (n.rows() != a.dim() || n.cols() != a.dim())
    throw Error(ErrorKind::dimension_mismatch, std::string(who) + " needs an endomorphism of g");
}

/// [e_i,e_j,e_k]_N per the deformed-bracket formula.
Vec deformed_value(const ThreeLieAlgebra& a, const Matrix& n, std::size_t i, std::size_t j,
                   std::size_t k) {
  const std::size_t d = a.dim();
  Vec ni = n.col(i), nj = n.col(j), nk = n.col(k);
  Vec out = a.bracket(ni, nj, unit(d, k));
  axpy(out, 1, a.bracket(unit(d, i), nj, nk));
  axpy(out, 1, a.bracket(ni, unit(d, j), nk));
  Vec inner = a.bracket(ni, unit(d, j), unit(d, k));
  axpy(inner, 1, a.bracket(unit(d, i), nj, unit(d, k)));
  axpy(inner, 1, a.bracket(unit(d, i), unit(d, j), nk));
  axpy(inner, -1, n.apply(a.bracket_basis(i, j, k)));
  axpy(out, -1, n.apply(inner));
  return out;
}

/// Phi_N on basis triples: -N([Nx,y,z]+[x,Ny,z]+[x,y,Nz]) + N^2[x,y,z].
Vec phi_value(const ThreeLieAlgebra& a, const Matrix& n, std::size_t i, std::size_t j,
              std::size_t k) {
  const std::size_t d = a.dim();
  Vec inner = a.bracket(n.col(i), unit(d, j), unit(d, k));
  axpy(inner, 1, a.bracket(unit(d, i), n.col(j), unit(d, k)));
  axpy(inner, 1, a.bracket(unit(d, i), unit(d, j), n.col(k)));
  axpy(inner, -1, n.apply(a.bracket_basis(i, j, k)));
  return negate(n.apply(inner));
}

}  // namespace

Report nijenhuis_report(const ThreeLieAlgebra& a, const Matrix& n) {
  require_square(a, n, "check_nijenhuis");
  return detail::run_tuple_check(
      "nijenhuis", triple_count(a.dim()), [&](std::size_t t) -> std::optional<Violation> {
        auto [i, j, k] = triple_at(a.dim(), t);
        Vec lhs = a.bracket(n.col(i), n.col(j), n.col(k));
        Vec rhs = n.apply(deformed_value(a, n, i, j, k));
        if (lhs == rhs) return std::nullopt;
        return Violation{"(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
                             std::to_string(k + 1) + ")",
                         std::move(lhs), std::move(rhs)};
      });
}

bool check_nijenhuis(const ThreeLieAlgebra& a, const Matrix& n) {
  return nijenhuis_report(a, n).passed();
}

ThreeLieAlgebra deformed_bracket(const ThreeLieAlgebra& a, const Matrix& n) {
  if (!check_nijenhuis(a, n))
    throw Error(ErrorKind::not_nijenhuis, "operator fails the Nijenhuis condition");
  ThreeLieAlgebra out(a.dim());
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    out.set_bracket(i, j, k, deformed_value(a, n, i, j, k));
  }
  out.mark_verified();
  return out;
}

Representation rho_n(const ThreeLieAlgebra& a, const Matrix& n) {
  const std::size_t d = a.dim();
  Representation rep(deformed_bracket(a, n), d);
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) m.set_col(k, a.bracket(n.col(i), n.col(j), unit(d, k)));
    rep.set_rho(i, j, std::move(m));
  }
  rep.mark_verified();
  return rep;
}

TwoCochain phi_n(const ThreeLieAlgebra& a, const Matrix& n) {
  if (!check_nijenhuis(a, n))
    throw Error(ErrorKind::not_nijenhuis, "operator fails the Nijenhuis condition");
  TwoCochain phi(a.dim(), a.dim());
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    phi.set_value(i, j, k, phi_value(a, n, i, j, k));
  }
  phi.mark_verified();
  return phi;
}

TwistedRbo nijenhuis_trbo(const ThreeLieAlgebra& a, const Matrix& n) {
  TwistedRbo op = make_twisted_rbo(rho_n(a, n), phi_n(a, n), Matrix::identity(a.dim()));
  op.verified = true;
  return op;
}

NsThreeLie ns_from_nijenhuis(const ThreeLieAlgebra& a, const Matrix& n) {
  if (!check_nijenhuis(a, n))
    throw Error(ErrorKind::not_nijenhuis, "operator fails the Nijenhuis condition");
  const std::size_t d = a.dim();
  NsThreeLie out(d);
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    for (std::size_t k = 0; k < d; ++k)
      out.set_curly(i, j, k, a.bracket(n.col(i), n.col(j), unit(d, k)));
  }
  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    out.set_square(i, j, k, phi_value(a, n, i, j, k));
  }
  out.mark_verified();
  return out;
}

}  // namespace tlie
