#include "tlie/ns_three_lie.hpp"

#include "tuple_check.hpp"

#include <utility>

namespace tlie {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

}  // namespace

NsThreeLie::NsThreeLie(std::size_t dim)
    : dim_(dim),
      curly_(pair_count(dim) * dim, zero_vec(dim)),
      square_(triple_count(dim), zero_vec(dim)) {}

void NsThreeLie::set_curly(std::size_t i, std::size_t j, std::size_t k, Vec value) {
  if (!(i < j && j < dim_ && k < dim_) || value.size() != dim_)
    throw Error(ErrorKind::dimension_mismatch, "curly slot must be i<j with any third index");
  curly_[pair_index(dim_, i, j) * dim_ + k] = std::move(value);
}

void NsThreeLie::set_square(std::size_t i, std::size_t j, std::size_t k, Vec value) {
  if (!(i < j && j < k && k < dim_) || value.size() != dim_)
    throw Error(ErrorKind::dimension_mismatch, "square slot must be canonical i<j<k");
  square_[triple_index(dim_, i, j, k)] = std::move(value);
}

Vec NsThreeLie::curly_basis(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return zero_vec(dim_);
  const Vec& v = curly_[pair_index(dim_, std::min(i, j), std::max(i, j)) * dim_ + k];
  return i < j ? v : negate(v);
}

Vec NsThreeLie::square_basis(std::size_t i, std::size_t j, std::size_t k) const {
  int sign = sort3_sign(i, j, k);
  if (sign == 0) return zero_vec(dim_);
  const Vec& v = square_[triple_index(dim_, i, j, k)];
  return sign > 0 ? v : negate(v);
}

Vec NsThreeLie::angle_basis(std::size_t i, std::size_t j, std::size_t k) const {
  Vec out = curly_basis(i, j, k);
  axpy(out, 1, curly_basis(j, k, i));
  axpy(out, 1, curly_basis(k, i, j));
  axpy(out, 1, square_basis(i, j, k));
  return out;
}

Vec NsThreeLie::curly(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = zero_vec(dim_);
  for (std::size_t p = 0; p < pair_count(dim_); ++p) {
    auto [i, j] = pair_at(dim_, p);
    Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (z[k] != 0) axpy(out, coeff * z[k], curly_[p * dim_ + k]);
  }
  return out;
}

Vec NsThreeLie::square(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = zero_vec(dim_);
  for (std::size_t t = 0; t < square_.size(); ++t) {
    if (tlie::is_zero(square_[t])) continue;
    auto [i, j, k] = triple_at(dim_, t);
    Rational coeff = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                     x[k] * (y[i] * z[j] - y[j] * z[i]);
    axpy(out, coeff, square_[t]);
  }
  return out;
}

Report check_ns_axioms(const NsThreeLie& a) {
  const std::size_t d = a.dim();
  const std::size_t pairs = pair_count(d), triples = triple_count(d);

  auto curly_apply = [&](std::size_t i, std::size_t j, const Vec& w) {
    Vec out = zero_vec(d);
    for (std::size_t t = 0; t < d; ++t)
      if (w[t] != 0) axpy(out, w[t], a.curly_basis(i, j, t));
    return out;
  };
  auto curly_left = [&](const Vec& w, std::size_t j, std::size_t k) {
    Vec out = zero_vec(d);
    for (std::size_t t = 0; t < d; ++t)
      if (w[t] != 0) axpy(out, w[t], a.curly_basis(t, j, k));
    return out;
  };
  auto curly_mid = [&](std::size_t i, const Vec& w, std::size_t k) {
    Vec out = zero_vec(d);
    for (std::size_t t = 0; t < d; ++t)
      if (w[t] != 0) axpy(out, w[t], a.curly_basis(i, t, k));
    return out;
  };
  auto square_apply = [&](std::size_t i, std::size_t j, const Vec& w) {
    Vec out = zero_vec(d);
    for (std::size_t t = 0; t < d; ++t)
      if (w[t] != 0) axpy(out, w[t], a.square_basis(i, j, t));
    return out;
  };

  const std::size_t count1 = pairs * d * d * d;      // (x1<x2; x3,x4,x5)
  const std::size_t count2 = triples * d * d;        // (x1<x2<x3; x4,x5)
  const std::size_t count3 = pairs * triples;        // (x1<x2; x3<x4<x5)

  return detail::run_tuple_check(
      "ns_axioms", count1 + count2 + count3, [&](std::size_t idx) -> std::optional<Violation> {
        if (idx < count1) {
          auto [x1, x2] = pair_at(d, idx / (d * d * d));
          std::size_t rest = idx % (d * d * d);
          std::size_t x3 = rest / (d * d), x4 = (rest / d) % d, x5 = rest % d;
          Vec lhs = curly_apply(x1, x2, a.curly_basis(x3, x4, x5));
          Vec rhs = curly_apply(x3, x4, a.curly_basis(x1, x2, x5));
          axpy(rhs, 1, curly_left(a.angle_basis(x1, x2, x3), x4, x5));
          axpy(rhs, 1, curly_mid(x3, a.angle_basis(x1, x2, x4), x5));
          if (lhs == rhs) return std::nullopt;
          return Violation{"curly-derivation (" + basis_name(x1) + "," + basis_name(x2) + " | " +
                               basis_name(x3) + "," + basis_name(x4) + "," + basis_name(x5) + ")",
                           std::move(lhs), std::move(rhs)};
        }
        if (idx < count1 + count2) {
          std::size_t j = idx - count1;
          auto [x1, x2, x3] = triple_at(d, j / (d * d));
          std::size_t x4 = (j / d) % d, x5 = j % d;
          Vec lhs = curly_left(a.angle_basis(x1, x2, x3), x4, x5);
          Vec rhs = curly_apply(x1, x2, a.curly_basis(x3, x4, x5));
          axpy(rhs, 1, curly_apply(x2, x3, a.curly_basis(x1, x4, x5)));
          axpy(rhs, 1, curly_apply(x3, x1, a.curly_basis(x2, x4, x5)));
          if (lhs == rhs) return std::nullopt;
          return Violation{"curly-composition (" + basis_name(x1) + "," + basis_name(x2) + "," +
                               basis_name(x3) + " | " + basis_name(x4) + "," + basis_name(x5) +
                               ")",
                           std::move(lhs), std::move(rhs)};
        }
        std::size_t j = idx - count1 - count2;
        auto [x1, x2] = pair_at(d, j / triples);
        auto [x3, x4, x5] = triple_at(d, j % triples);
        Vec lhs = square_apply(x1, x2, a.angle_basis(x3, x4, x5));
        Vec rhs = square_apply(x3, x4, a.angle_basis(x1, x2, x5));
        axpy(rhs, 1, square_apply(x4, x5, a.angle_basis(x1, x2, x3)));
        axpy(rhs, 1, square_apply(x5, x3, a.angle_basis(x1, x2, x4)));
        axpy(rhs, -1, curly_apply(x1, x2, a.square_basis(x3, x4, x5)));
        axpy(rhs, 1, curly_apply(x3, x4, a.square_basis(x1, x2, x5)));
        axpy(rhs, 1, curly_apply(x4, x5, a.square_basis(x1, x2, x3)));
        axpy(rhs, 1, curly_apply(x5, x3, a.square_basis(x1, x2, x4)));
        if (lhs == rhs) return std::nullopt;
        return Violation{"square-mixed (" + basis_name(x1) + "," + basis_name(x2) + " | " +
                             basis_name(x3) + "," + basis_name(x4) + "," + basis_name(x5) + ")",
                         std::move(lhs), std::move(rhs)};
      });
}

Report verify_ns_axioms(NsThreeLie& a) {
  Report report = check_ns_axioms(a);
  if (report.passed()) a.mark_verified();
  return report;
}

ThreeLieAlgebra subadjacent(const NsThreeLie& a) {
  if (!a.verified())
    throw Error(ErrorKind::unverified_input, "subadjacent needs verified NS axioms");
  ThreeLieAlgebra out(a.dim());
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    out.set_bracket(i, j, k, a.angle_basis(i, j, k));
  }
  out.mark_verified();
  return out;
}

Representation l_representation(const NsThreeLie& a) {
  if (!a.verified())
    throw Error(ErrorKind::unverified_input, "l_representation needs verified NS axioms");
  const std::size_t d = a.dim();
  Representation rep(subadjacent(a), d);
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) m.set_col(k, a.curly_basis(i, j, k));
    rep.set_rho(i, j, std::move(m));
  }
  rep.mark_verified();
  return rep;
}

NsThreeLie ns_from_trbo(const TwistedRbo& op) {
  if (!op.verified)
    throw Error(ErrorKind::unverified_input, "ns_from_trbo needs a verified operator");
  const std::size_t dv = op.dim_v();
  NsThreeLie out(dv);
  for (std::size_t p = 0; p < pair_count(dv); ++p) {
    auto [u, v] = pair_at(dv, p);
    Vec tu = op.t.col(u), tv = op.t.col(v);
    for (std::size_t w = 0; w < dv; ++w) {
      Vec e = zero_vec(dv);
      e[w] = 1;
      out.set_curly(u, v, w, op.rep.rho_apply(tu, tv, e));
    }
  }
  for (std::size_t t = 0; t < triple_count(dv); ++t) {
    auto [u, v, w] = triple_at(dv, t);
    out.set_square(u, v, w, op.phi.eval(op.t.col(u), op.t.col(v), op.t.col(w)));
  }
  out.mark_verified();
  return out;
}

bool check_ns_homomorphism(const Matrix& psi, const NsThreeLie& a, const NsThreeLie& b) {
  if (psi.rows() != b.dim() || psi.cols() != a.dim())
    throw Error(ErrorKind::dimension_mismatch, "homomorphism shape must be dim(B) x dim(A)");
  const std::size_t d = a.dim();
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    for (std::size_t k = 0; k < d; ++k) {
      Vec lhs = psi.apply(a.curly_basis(i, j, k));
      Vec rhs = b.curly(psi.col(i), psi.col(j), psi.col(k));
      if (lhs != rhs) return false;
    }
  }
  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    Vec lhs = psi.apply(a.square_basis(i, j, k));
    Vec rhs = b.square(psi.col(i), psi.col(j), psi.col(k));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace tlie
