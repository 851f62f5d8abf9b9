#include "tlie/three_lie.hpp"

#include "tuple_check.hpp"

#include <utility>

namespace tlie {

namespace {

std::size_t comb2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::size_t comb3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

}  // namespace

std::size_t pair_count(std::size_t dim) { return comb2(dim); }
std::size_t triple_count(std::size_t dim) { return comb3(dim); }

std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
  return comb2(dim) - comb2(dim - i) + (j - i - 1);
}

std::size_t triple_index(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) {
  return comb3(dim) - comb3(dim - i) + pair_index(dim - i - 1, j - i - 1, k - i - 1);
}

std::array<std::size_t, 2> pair_at(std::size_t dim, std::size_t index) {
  for (std::size_t i = 0;; ++i) {
    std::size_t row = dim - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
}

std::array<std::size_t, 3> triple_at(std::size_t dim, std::size_t index) {
  for (std::size_t i = 0;; ++i) {
    std::size_t block = comb2(dim - i - 1);
    if (index < block) {
      auto [j, k] = pair_at(dim - i - 1, index);
      return {i, i + 1 + j, i + 1 + k};
    }
    index -= block;
  }
}

int sort3_sign(std::size_t& i, std::size_t& j, std::size_t& k) {
  if (i == j || j == k || i == k) return 0;
  int sign = 1;
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  return sign;
}

ThreeLieAlgebra::ThreeLieAlgebra(std::size_t dim)
    : dim_(dim), c_(triple_count(dim), zero_vec(dim)) {}

void ThreeLieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec value) {
  if (!(i < j && j < k && k < dim_) || value.size() != dim_)
    throw Error(ErrorKind::dimension_mismatch, "bracket slot must be canonical i<j<k");
  c_[triple_index(dim_, i, j, k)] = std::move(value);
}

Vec ThreeLieAlgebra::bracket_basis(std::size_t i, std::size_t j, std::size_t k) const {
  int sign = sort3_sign(i, j, k);
  if (sign == 0) return zero_vec(dim_);
  const Vec& v = c_[triple_index(dim_, i, j, k)];
  return sign > 0 ? v : negate(v);
}

Vec ThreeLieAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw Error(ErrorKind::dimension_mismatch, "bracket argument has wrong dimension");
  Vec out = zero_vec(dim_);
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (is_zero(c_[t])) continue;
    auto [i, j, k] = triple_at(dim_, t);
    Rational coeff = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                     x[k] * (y[i] * z[j] - y[j] * z[i]);
    axpy(out, coeff, c_[t]);
  }
  return out;
}

Vec ThreeLieAlgebra::ad_apply(std::size_t i, std::size_t j, const Vec& w) const {
  Vec out = zero_vec(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    if (w[k] != 0) axpy(out, w[k], bracket_basis(i, j, k));
  return out;
}

Matrix ad_matrix(const ThreeLieAlgebra& a, std::size_t i, std::size_t j) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) m.set_col(k, a.bracket_basis(i, j, k));
  return m;
}

Report check_fundamental_identity(const ThreeLieAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t pairs = pair_count(d), triples = triple_count(d);
  return detail::run_tuple_check(
      "fundamental_identity", pairs * triples, [&](std::size_t idx) -> std::optional<Violation> {
        auto [x1, x2] = pair_at(d, idx / triples);
        auto [x3, x4, x5] = triple_at(d, idx % triples);

        Vec lhs = a.ad_apply(x1, x2, a.bracket_basis(x3, x4, x5));
        // Cyclic rotations keep each term in ad_{.,.} form.
        Vec rhs = a.ad_apply(x4, x5, a.bracket_basis(x1, x2, x3));
        axpy(rhs, 1, a.ad_apply(x5, x3, a.bracket_basis(x1, x2, x4)));
        axpy(rhs, 1, a.ad_apply(x3, x4, a.bracket_basis(x1, x2, x5)));

        if (lhs == rhs) return std::nullopt;
        return Violation{"(" + basis_name(x1) + "," + basis_name(x2) + " | " + basis_name(x3) +
                             "," + basis_name(x4) + "," + basis_name(x5) + ")",
                         std::move(lhs), std::move(rhs)};
      });
}

Report verify_fundamental_identity(ThreeLieAlgebra& a) {
  Report report = check_fundamental_identity(a);
  if (report.passed()) a.mark_verified();
  return report;
}

Report derivation_report(const ThreeLieAlgebra& a, const Matrix& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim())
    throw Error(ErrorKind::dimension_mismatch, "derivation must be an endomorphism of the algebra");
  return detail::run_tuple_check(
      "derivation", triple_count(a.dim()), [&](std::size_t t) -> std::optional<Violation> {
        auto [i, j, k] = triple_at(a.dim(), t);
        Vec lhs = d.apply(a.bracket_basis(i, j, k));
        Vec rhs = a.ad_apply(j, k, d.col(i));
        axpy(rhs, 1, a.ad_apply(k, i, d.col(j)));
        axpy(rhs, 1, a.ad_apply(i, j, d.col(k)));
        if (lhs == rhs) return std::nullopt;
        return Violation{"(" + basis_name(i) + "," + basis_name(j) + "," + basis_name(k) + ")",
                         std::move(lhs), std::move(rhs)};
      });
}

bool check_derivation(const ThreeLieAlgebra& a, const Matrix& d) {
  return derivation_report(a, d).passed();
}

bool check_homomorphism(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b, const Matrix& phi) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim())
    throw Error(ErrorKind::dimension_mismatch, "homomorphism shape must be dim(B) x dim(A)");
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    Vec lhs = phi.apply(a.bracket_basis(i, j, k));
    Vec rhs = b.bracket(phi.col(i), phi.col(j), phi.col(k));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace tlie
