#include "tlie/cochain.hpp"

#include "tlie/parallel.hpp"

#include <array>

namespace tlie {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

constexpr std::size_t kMaxDegree = 8;  // slot scratch bound, far above the caps

}  // namespace

NCochain::NCochain(std::size_t degree, std::size_t dim_g, std::size_t dim_v)
    : degree_(degree),
      dim_g_(dim_g),
      dim_v_(dim_v),
      values_(pow_size(pair_count(dim_g), degree - 1) * dim_g, zero_vec(dim_v)) {
  if (degree < 1) throw Error(ErrorKind::dimension_mismatch, "cochain degree must be >= 1");
}

std::size_t NCochain::tuple_index(std::span<const std::size_t> pairs, std::size_t last) const {
  const std::size_t P = pair_count(dim_g_);
  std::size_t idx = 0;
  for (std::size_t p : pairs) idx = idx * P + p;
  return idx * dim_g_ + last;
}

void NCochain::tuple_at(std::size_t index, std::span<std::size_t> pairs, std::size_t& last) const {
  const std::size_t P = pair_count(dim_g_);
  last = index % dim_g_;
  index /= dim_g_;
  for (std::size_t s = pairs.size(); s-- > 0;) {
    pairs[s] = index % P;
    index /= P;
  }
}

bool NCochain::is_zero() const {
  for (const auto& v : values_)
    if (!tlie::is_zero(v)) return false;
  return true;
}

NCochain cochain_from_linear_map(const Matrix& f) {
  NCochain out(1, f.cols(), f.rows());
  for (std::size_t k = 0; k < f.cols(); ++k) out.value(k) = f.col(k);
  return out;
}

Matrix linear_map_from_cochain(const NCochain& f) {
  if (f.degree() != 1) throw Error(ErrorKind::dimension_mismatch, "expected a degree-1 cochain");
  Matrix out(f.dim_v(), f.dim_g());
  for (std::size_t k = 0; k < f.dim_g(); ++k) out.set_col(k, f.value(k));
  return out;
}

NCochain embed(const TwoCochain& phi) {
  const std::size_t d = phi.dim_g();
  NCochain out(2, d, phi.dim_v());
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    for (std::size_t k = 0; k < d; ++k)
      out.value(p * d + k) = phi.eval_basis(i, j, k);
  }
  return out;
}

namespace {

/**
 * Enumerates the coboundary formula's contributions at one output tuple as
 * linear combinations of input-tuple values:
 *
 *   (d f)(X_1..X_n, z) =
 *       sum_{j<k} (-1)^j f(.., X_j deleted, .., [x_j,y_j,x_k]^y_k + x_k^[x_j,y_j,y_k] at k, .., z)
 *     + sum_j (-1)^j f(.., X_j deleted, .., [x_j,y_j,z])
 *     + sum_j (-1)^{j+1} rho(x_j,y_j) f(.., X_j deleted, .., z)
 *     + (-1)^{n+1} ( rho(y_n,z) f(X_1..X_{n-1}, x_n) + rho(z,x_n) f(X_1..X_{n-1}, y_n) )
 *
 * emit_scalar(in_tuple, w): contribution w * f[in_tuple]
 * emit_rho(in_tuple, a, b, w): contribution w * rho(e_a, e_b) f[in_tuple]
 */
template <class EmitScalar, class EmitRho>
void coboundary_terms(const Representation& rep, const NCochain& shape_in,
                      std::span<const std::size_t> out_pairs, std::size_t out_last,
                      EmitScalar&& emit_scalar, EmitRho&& emit_rho) {
  const ThreeLieAlgebra& g = rep.carrier();
  const std::size_t d = g.dim();
  const std::size_t n = out_pairs.size();  // input degree

  std::array<std::size_t, kMaxDegree> slots{};
  const std::size_t in_slots = n - 1;

  std::array<std::array<std::size_t, 2>, kMaxDegree> xy{};
  for (std::size_t s = 0; s < n; ++s) xy[s] = pair_at(d, out_pairs[s]);

  // S1: delete slot j, merge bracket into slot k.
  for (std::size_t j = 0; j < n; ++j) {
    const int sign_j = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1} in 0-based j
    for (std::size_t k = j + 1; k < n; ++k) {
      // Remaining pair slots in order, with position of the merged slot.
      std::size_t pos = 0, merged_pos = 0;
      for (std::size_t s = 0; s < n; ++s) {
        if (s == j) continue;
        if (s == k) merged_pos = pos;
        slots[pos++] = out_pairs[s];
      }
      auto [xj, yj] = xy[j];
      auto [xk, yk] = xy[k];
      Vec b1 = g.bracket_basis(xj, yj, xk);
      Vec b2 = g.bracket_basis(xj, yj, yk);
      for (std::size_t t = 0; t < d; ++t) {
        if (b1[t] != 0 && t != yk) {
          int s = t < yk ? 1 : -1;
          slots[merged_pos] = pair_index(d, std::min(t, yk), std::max(t, yk));
          emit_scalar(shape_in.tuple_index({slots.data(), in_slots}, out_last),
                      Rational(sign_j * s) * b1[t]);
        }
        if (b2[t] != 0 && t != xk) {
          int s = xk < t ? 1 : -1;
          slots[merged_pos] = pair_index(d, std::min(t, xk), std::max(t, xk));
          emit_scalar(shape_in.tuple_index({slots.data(), in_slots}, out_last),
                      Rational(sign_j * s) * b2[t]);
        }
      }
    }
  }

  // S2 and S3: delete slot j; bracket into the final slot, and the rho term.
  for (std::size_t j = 0; j < n; ++j) {
    const int sign_j = (j % 2 == 0) ? -1 : 1;
    std::size_t pos = 0;
    for (std::size_t s = 0; s < n; ++s)
      if (s != j) slots[pos++] = out_pairs[s];
    auto [xj, yj] = xy[j];
    Vec b = g.bracket_basis(xj, yj, out_last);
    for (std::size_t t = 0; t < d; ++t)
      if (b[t] != 0)
        emit_scalar(shape_in.tuple_index({slots.data(), in_slots}, t), Rational(sign_j) * b[t]);
    emit_rho(shape_in.tuple_index({slots.data(), in_slots}, out_last), xj, yj, Rational(-sign_j));
  }

  // S4: drop the last pair slot, feed its legs through the final slot.
  {
    const int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
    for (std::size_t s = 0; s + 1 < n; ++s) slots[s] = out_pairs[s];
    auto [xn, yn] = xy[n - 1];
    emit_rho(shape_in.tuple_index({slots.data(), in_slots}, xn), yn, out_last, Rational(sign));
    emit_rho(shape_in.tuple_index({slots.data(), in_slots}, yn), out_last, xn, Rational(sign));
  }
}

void require_fits(const Representation& rep, const NCochain& f, const CochainOptions& opts) {
  if (f.dim_g() != rep.dim() || f.dim_v() != rep.dim_v())
    throw Error(ErrorKind::dimension_mismatch, "cochain does not fit the representation");
  if (f.degree() > opts.degree_cap)
    throw Error(ErrorKind::resource_cap,
                "cochain degree " + std::to_string(f.degree()) + " exceeds cap " +
                    std::to_string(opts.degree_cap));
  if (rep.dim() > opts.dim_cap || rep.dim_v() > opts.dim_v_cap)
    throw Error(ErrorKind::resource_cap, "carrier dimensions exceed the configured cap");
}

}  // namespace

NCochain coboundary(const Representation& rep, const NCochain& f, const CochainOptions& opts) {
  require_fits(rep, f, opts);
  const std::size_t n = f.degree();
  NCochain out(n + 1, f.dim_g(), f.dim_v());

  const std::size_t total = out.tuple_count();
  parallel_for(total, [&](std::size_t tuple) {
    std::array<std::size_t, kMaxDegree> local_pairs{};
    std::size_t last = 0;
    out.tuple_at(tuple, {local_pairs.data(), n}, last);
    Vec acc = zero_vec(f.dim_v());
    coboundary_terms(
        rep, f, {local_pairs.data(), n}, last,
        [&](std::size_t in, const Rational& w) { axpy(acc, w, f.value(in)); },
        [&](std::size_t in, std::size_t a, std::size_t b, const Rational& w) {
          if (a == b || w == 0) return;
          Vec rv = rep.rho_apply(a, b, f.value(in));
          axpy(acc, w, rv);
        });
    out.value(tuple) = std::move(acc);
  });
  return out;
}

Matrix coboundary_matrix(const Representation& rep, std::size_t degree,
                         const CochainOptions& opts) {
  NCochain shape_in(degree, rep.dim(), rep.dim_v());
  require_fits(rep, shape_in, opts);
  NCochain shape_out(degree + 1, rep.dim(), rep.dim_v());
  const std::size_t dv = rep.dim_v();
  Matrix m(shape_out.dimension(), shape_in.dimension());

  parallel_for(shape_out.tuple_count(), [&](std::size_t tuple) {
    std::array<std::size_t, kMaxDegree> local_pairs{};
    std::size_t last = 0;
    shape_out.tuple_at(tuple, {local_pairs.data(), degree}, last);
    const std::size_t row0 = tuple * dv;
    coboundary_terms(
        rep, shape_in, {local_pairs.data(), degree}, last,
        [&](std::size_t in, const Rational& w) {
          for (std::size_t c = 0; c < dv; ++c) m(row0 + c, in * dv + c) += w;
        },
        [&](std::size_t in, std::size_t a, std::size_t b, const Rational& w) {
          if (a == b || w == 0) return;
          Matrix rm = rep.rho_basis(a, b);
          for (std::size_t r = 0; r < dv; ++r)
            for (std::size_t c = 0; c < dv; ++c)
              if (rm(r, c) != 0) m(row0 + r, in * dv + c) += w * rm(r, c);
        });
  });
  return m;
}

std::vector<CohomologyRow> cohomology_dims(const Representation& rep, std::size_t n_max,
                                           const CochainOptions& opts) {
  if (n_max < 1 || n_max > opts.degree_cap)
    throw Error(ErrorKind::resource_cap, "n_max outside 1..degree cap");
  if (!rep.verified())
    throw Error(ErrorKind::unverified_input, "cohomology needs a verified representation");

  std::vector<CohomologyRow> rows;
  std::size_t prev_rank = 0;  // B^1 = 0
  for (std::size_t n = 1; n <= n_max; ++n) {
    NCochain shape(n, rep.dim(), rep.dim_v());
    Matrix d_n = coboundary_matrix(rep, n, opts);
    std::size_t r = rank(d_n);
    CohomologyRow row;
    row.degree = n;
    row.cochains = shape.dimension();
    row.cocycles = row.cochains - r;
    row.coboundaries = prev_rank;
    row.cohomology = row.cocycles - row.coboundaries;
    rows.push_back(row);
    prev_rank = r;
  }
  return rows;
}

}  // namespace tlie
