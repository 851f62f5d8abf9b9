#include "tlie/representation.hpp"

#include "tuple_check.hpp"

#include <utility>

namespace tlie {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

}  // namespace

Representation::Representation(ThreeLieAlgebra carrier, std::size_t dim_v)
    : carrier_(std::move(carrier)),
      dim_v_(dim_v),
      rho_(pair_count(carrier_.dim()), Matrix(dim_v, dim_v)) {}

void Representation::set_rho(std::size_t i, std::size_t j, Matrix m) {
  if (!(i < j && j < dim()) || m.rows() != dim_v_ || m.cols() != dim_v_)
    throw Error(ErrorKind::dimension_mismatch, "rho slot must be i<j with a dim_v x dim_v matrix");
  rho_[pair_index(dim(), i, j)] = std::move(m);
}

Matrix Representation::rho_basis(std::size_t i, std::size_t j) const {
  if (i == j) return Matrix(dim_v_, dim_v_);
  if (i < j) return rho_[pair_index(dim(), i, j)];
  return Rational(-1) * rho_[pair_index(dim(), j, i)];
}

Vec Representation::rho_apply(std::size_t i, std::size_t j, const Vec& v) const {
  if (i == j) return zero_vec(dim_v_);
  const Matrix& m = rho_[pair_index(dim(), std::min(i, j), std::max(i, j))];
  Vec out = m.apply(v);
  return i < j ? out : negate(out);
}

Matrix Representation::rho(const Vec& x, const Vec& y) const {
  Matrix out(dim_v_, dim_v_);
  for (std::size_t p = 0; p < rho_.size(); ++p) {
    auto [i, j] = pair_at(dim(), p);
    Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff != 0) out += coeff * rho_[p];
  }
  return out;
}

Vec Representation::rho_apply(const Vec& x, const Vec& y, const Vec& v) const {
  Vec out = zero_vec(dim_v_);
  for (std::size_t p = 0; p < rho_.size(); ++p) {
    auto [i, j] = pair_at(dim(), p);
    Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff != 0) axpy(out, coeff, rho_[p].apply(v));
  }
  return out;
}

Representation adjoint(const ThreeLieAlgebra& a) {
  if (!a.verified())
    throw Error(ErrorKind::unverified_input, "adjoint requires a verified 3-Lie algebra");
  Representation rep(a, a.dim());
  for (std::size_t p = 0; p < pair_count(a.dim()); ++p) {
    auto [i, j] = pair_at(a.dim(), p);
    rep.set_rho(i, j, ad_matrix(a, i, j));
  }
  rep.mark_verified();
  return rep;
}

Representation zero_representation(const ThreeLieAlgebra& a, std::size_t dim_v) {
  if (!a.verified())
    throw Error(ErrorKind::unverified_input, "zero_representation requires a verified algebra");
  Representation rep(a, dim_v);
  rep.mark_verified();
  return rep;
}

Report check_representation(const Representation& rep) {
  const ThreeLieAlgebra& g = rep.carrier();
  const std::size_t d = g.dim();
  const std::size_t pairs = pair_count(d), triples = triple_count(d);

  // rho of a (general vector, basis vector) pair, bilinear in the first slot.
  auto rho_vec_basis = [&](const Vec& x, std::size_t j) {
    Matrix out(rep.dim_v(), rep.dim_v());
    for (std::size_t i = 0; i < d; ++i)
      if (x[i] != 0 && i != j) out += x[i] * rep.rho_basis(i, j);
    return out;
  };

  const std::size_t count1 = pairs * pairs;
  const std::size_t count2 = triples * d;
  return detail::run_tuple_check(
      "representation", count1 + count2, [&](std::size_t idx) -> std::optional<Violation> {
        if (idx < count1) {
          auto [x1, x2] = pair_at(d, idx / pairs);
          auto [x3, x4] = pair_at(d, idx % pairs);
          Matrix lhs = commutator(rep.rho_basis(x1, x2), rep.rho_basis(x3, x4));
          Matrix rhs = rho_vec_basis(g.bracket_basis(x1, x2, x3), x4);
          rhs += Rational(-1) * rho_vec_basis(g.bracket_basis(x1, x2, x4), x3);
          if (lhs == rhs) return std::nullopt;
          return Violation{"(" + basis_name(x1) + "," + basis_name(x2) + " | " + basis_name(x3) +
                               "," + basis_name(x4) + ")",
                           flatten(lhs), flatten(rhs)};
        }
        std::size_t j = idx - count1;
        auto [x1, x2, x3] = triple_at(d, j / d);
        std::size_t x4 = j % d;
        Matrix lhs = rho_vec_basis(g.bracket_basis(x1, x2, x3), x4);
        Matrix rhs = rep.rho_basis(x1, x2) * rep.rho_basis(x3, x4);
        rhs += rep.rho_basis(x2, x3) * rep.rho_basis(x1, x4);
        rhs += rep.rho_basis(x3, x1) * rep.rho_basis(x2, x4);
        if (lhs == rhs) return std::nullopt;
        return Violation{"(" + basis_name(x1) + "," + basis_name(x2) + "," + basis_name(x3) +
                             " | " + basis_name(x4) + ")",
                         flatten(lhs), flatten(rhs)};
      });
}

Report verify_representation(Representation& rep) {
  Report report = check_representation(rep);
  if (report.passed()) rep.mark_verified();
  return report;
}

TwoCochain::TwoCochain(std::size_t dim_g, std::size_t dim_v)
    : dim_g_(dim_g), dim_v_(dim_v), values_(triple_count(dim_g), zero_vec(dim_v)) {}

void TwoCochain::set_value(std::size_t i, std::size_t j, std::size_t k, Vec value) {
  if (!(i < j && j < k && k < dim_g_) || value.size() != dim_v_)
    throw Error(ErrorKind::dimension_mismatch, "cochain slot must be canonical i<j<k");
  values_[triple_index(dim_g_, i, j, k)] = std::move(value);
}

Vec TwoCochain::eval_basis(std::size_t i, std::size_t j, std::size_t k) const {
  int sign = sort3_sign(i, j, k);
  if (sign == 0) return zero_vec(dim_v_);
  const Vec& v = values_[triple_index(dim_g_, i, j, k)];
  return sign > 0 ? v : negate(v);
}

Vec TwoCochain::eval(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.size() != dim_g_ || y.size() != dim_g_ || z.size() != dim_g_)
    throw Error(ErrorKind::dimension_mismatch, "cochain argument has wrong dimension");
  Vec out = zero_vec(dim_v_);
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (tlie::is_zero(values_[t])) continue;
    auto [i, j, k] = triple_at(dim_g_, t);
    Rational coeff = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                     x[k] * (y[i] * z[j] - y[j] * z[i]);
    axpy(out, coeff, values_[t]);
  }
  return out;
}

bool TwoCochain::is_zero() const {
  for (const auto& v : values_)
    if (!tlie::is_zero(v)) return false;
  return true;
}

TwoCochain& TwoCochain::operator-=(const TwoCochain& other) {
  if (dim_g_ != other.dim_g_ || dim_v_ != other.dim_v_)
    throw Error(ErrorKind::dimension_mismatch, "cochain subtraction shape mismatch");
  for (std::size_t t = 0; t < values_.size(); ++t)
    values_[t] = sub(values_[t], other.values_[t]);
  verified_ = false;
  return *this;
}

Report check_2cocycle(const Representation& rep, const TwoCochain& phi) {
  const ThreeLieAlgebra& g = rep.carrier();
  const std::size_t d = g.dim();
  if (phi.dim_g() != d || phi.dim_v() != rep.dim_v())
    throw Error(ErrorKind::dimension_mismatch, "cochain does not fit the representation");
  const std::size_t pairs = pair_count(d), triples = triple_count(d);

  // Phi of a (general, basis, basis) argument list, linear in the first slot.
  auto phi_vec = [&](const Vec& x, std::size_t j, std::size_t k) {
    Vec out = zero_vec(phi.dim_v());
    for (std::size_t i = 0; i < d; ++i)
      if (x[i] != 0) axpy(out, x[i], phi.eval_basis(i, j, k));
    return out;
  };

  return detail::run_tuple_check(
      "two_cocycle", pairs * triples, [&](std::size_t idx) -> std::optional<Violation> {
        auto [x1, x2] = pair_at(d, idx / triples);
        auto [x3, x4, x5] = triple_at(d, idx % triples);

        Vec lhs = phi_vec(g.bracket_basis(x3, x4, x5), x1, x2);  // Phi(x1,x2,[x3,x4,x5]), cyclic
        axpy(lhs, 1, rep.rho_apply(x1, x2, phi.eval_basis(x3, x4, x5)));

        Vec rhs = phi_vec(g.bracket_basis(x1, x2, x3), x4, x5);
        axpy(rhs, 1, phi_vec(g.bracket_basis(x1, x2, x4), x5, x3));
        axpy(rhs, 1, phi_vec(g.bracket_basis(x1, x2, x5), x3, x4));
        axpy(rhs, 1, rep.rho_apply(x3, x4, phi.eval_basis(x1, x2, x5)));
        axpy(rhs, 1, rep.rho_apply(x4, x5, phi.eval_basis(x1, x2, x3)));
        axpy(rhs, 1, rep.rho_apply(x5, x3, phi.eval_basis(x1, x2, x4)));

        if (lhs == rhs) return std::nullopt;
        return Violation{"(" + basis_name(x1) + "," + basis_name(x2) + " | " + basis_name(x3) +
                             "," + basis_name(x4) + "," + basis_name(x5) + ")",
                         std::move(lhs), std::move(rhs)};
      });
}

Report verify_2cocycle(const Representation& rep, TwoCochain& phi) {
  Report report = check_2cocycle(rep, phi);
  if (report.passed()) phi.mark_verified();
  return report;
}

TwoCochain bracket_cochain(const ThreeLieAlgebra& a, int sign) {
  TwoCochain phi(a.dim(), a.dim());
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    Vec v = a.bracket_basis(i, j, k);
    phi.set_value(i, j, k, sign >= 0 ? v : negate(v));
  }
  return phi;
}

TwoCochain coboundary_of_linear(const Representation& rep, const Matrix& f) {
  const ThreeLieAlgebra& g = rep.carrier();
  const std::size_t d = g.dim();
  if (f.rows() != rep.dim_v() || f.cols() != d)
    throw Error(ErrorKind::dimension_mismatch, "linear map must be dim_v x dim");
  TwoCochain df(d, rep.dim_v());
  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    Vec value = negate(f.apply(g.bracket_basis(i, j, k)));
    axpy(value, 1, rep.rho_apply(i, j, f.col(k)));
    axpy(value, 1, rep.rho_apply(j, k, f.col(i)));
    axpy(value, 1, rep.rho_apply(k, i, f.col(j)));
    df.set_value(i, j, k, std::move(value));
  }
  return df;
}

ThreeLieAlgebra twisted_semidirect(const Representation& rep, const TwoCochain& phi) {
  if (!rep.verified())
    throw Error(ErrorKind::unverified_input, "semidirect product needs a verified representation");
  if (!phi.verified())
    throw Error(ErrorKind::unverified_input, "semidirect product needs a verified 2-cocycle");
  const std::size_t d = rep.dim(), dv = rep.dim_v(), n = d + dv;

  // Basis components of g (+) V; index < d is (e_i, 0), index >= d is (0, f_u).
  auto g_part = [&](std::size_t a) { Vec x = zero_vec(d); if (a < d) x[a] = 1; return x; };
  auto v_part = [&](std::size_t a) { Vec u = zero_vec(dv); if (a >= d) u[a - d] = 1; return u; };

  ThreeLieAlgebra out(n);
  for (std::size_t t = 0; t < triple_count(n); ++t) {
    auto [a, b, c] = triple_at(n, t);
    Vec xa = g_part(a), xb = g_part(b), xc = g_part(c);
    Vec ua = v_part(a), ub = v_part(b), uc = v_part(c);

    Vec bracket_g = rep.carrier().bracket(xa, xb, xc);
    Vec bracket_v = rep.rho_apply(xa, xb, uc);
    axpy(bracket_v, 1, rep.rho_apply(xb, xc, ua));
    axpy(bracket_v, 1, rep.rho_apply(xc, xa, ub));
    axpy(bracket_v, 1, phi.eval(xa, xb, xc));

    Vec value(n);
    for (std::size_t i = 0; i < d; ++i) value[i] = bracket_g[i];
    for (std::size_t u = 0; u < dv; ++u) value[d + u] = bracket_v[u];
    out.set_bracket(a, b, c, std::move(value));
  }
  out.mark_verified();
  return out;
}

Matrix psi_f(const Representation& rep, const Matrix& f) {
  const std::size_t d = rep.dim(), dv = rep.dim_v();
  if (f.rows() != dv || f.cols() != d)
    throw Error(ErrorKind::dimension_mismatch, "gauge map must be dim_v x dim");
  Matrix out = Matrix::identity(d + dv);
  for (std::size_t r = 0; r < dv; ++r)
    for (std::size_t c = 0; c < d; ++c) out(d + r, c) = f(r, c);
  return out;
}

}  // namespace tlie
