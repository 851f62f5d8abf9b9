#include "tlie/twisted_rbo.hpp"

#include "tuple_check.hpp"

#include <utility>

namespace tlie {

namespace {

std::string basis_name(std::size_t i) { return "f" + std::to_string(i + 1); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

void require_verified(const TwistedRbo& op, const char* who) {
  if (!op.verified)
    throw Error(ErrorKind::unverified_input, std::string(who) + " needs a verified operator");
}

/// [u,v,w]_T evaluated on basis triples of V.
Vec induced_value(const TwistedRbo& op, std::size_t u, std::size_t v, std::size_t w) {
  const std::size_t dv = op.dim_v();
  Vec tu = op.t.col(u), tv = op.t.col(v), tw = op.t.col(w);
  Vec out = op.rep.rho_apply(tu, tv, unit(dv, w));
  axpy(out, 1, op.rep.rho_apply(tv, tw, unit(dv, u)));
  axpy(out, 1, op.rep.rho_apply(tw, tu, unit(dv, v)));
  axpy(out, 1, op.phi.eval(tu, tv, tw));
  return out;
}

bool same_structure(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t)
    if (a.canonical_slot(t) != b.canonical_slot(t)) return false;
  return true;
}

bool same_context(const TwistedRbo& a, const TwistedRbo& b) {
  if (a.dim_g() != b.dim_g() || a.dim_v() != b.dim_v()) return false;
  if (!same_structure(a.rep.carrier(), b.rep.carrier())) return false;
  for (std::size_t p = 0; p < pair_count(a.dim_g()); ++p)
    if (a.rep.rho_slot(p) != b.rep.rho_slot(p)) return false;
  for (std::size_t t = 0; t < triple_count(a.dim_g()); ++t)
    if (a.phi.slot(t) != b.phi.slot(t)) return false;
  return true;
}

using PolyMat = std::vector<Matrix>;  // coefficient matrices by t-degree

PolyMat pmul(const PolyMat& a, const PolyMat& b) {
  PolyMat out(a.size() + b.size() - 1, Matrix(a[0].rows(), b[0].cols()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

bool pequal(const PolyMat& a, const PolyMat& b) {
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const bool za = k >= a.size() || a[k].is_zero();
    const bool zb = k >= b.size() || b[k].is_zero();
    if (za && zb) continue;
    if (za != zb || !(a[k] == b[k])) return false;
  }
  return true;
}

}  // namespace

TwistedRbo make_twisted_rbo(Representation rep, TwoCochain phi, Matrix t) {
  if (phi.dim_g() != rep.dim() || phi.dim_v() != rep.dim_v())
    throw Error(ErrorKind::dimension_mismatch, "cochain does not fit the representation");
  if (t.rows() != rep.dim() || t.cols() != rep.dim_v())
    throw Error(ErrorKind::dimension_mismatch, "operator must map V into g");
  if (!rep.verified() || !rep.carrier().verified())
    throw Error(ErrorKind::unverified_input, "context representation is not verified");
  if (!phi.verified())
    throw Error(ErrorKind::unverified_input, "context 2-cocycle is not verified");
  return TwistedRbo{std::move(rep), std::move(phi), std::move(t), false};
}

Report check_twisted_rbo(const TwistedRbo& op) {
  const std::size_t dv = op.dim_v();
  return detail::run_tuple_check(
      "twisted_rota_baxter", triple_count(dv), [&](std::size_t idx) -> std::optional<Violation> {
        auto [u, v, w] = triple_at(dv, idx);
        Vec lhs = op.rep.carrier().bracket(op.t.col(u), op.t.col(v), op.t.col(w));
        Vec rhs = op.t.apply(induced_value(op, u, v, w));
        if (lhs == rhs) return std::nullopt;
        return Violation{
            "(" + basis_name(u) + "," + basis_name(v) + "," + basis_name(w) + ")",
            std::move(lhs), std::move(rhs)};
      });
}

Report verify_twisted_rbo(TwistedRbo& op) {
  Report report = check_twisted_rbo(op);
  if (report.passed()) op.verified = true;
  return report;
}

TwistedRbo trbo_from_invertible_map(const Representation& rep, const Matrix& f) {
  if (f.rows() != rep.dim_v() || f.cols() != rep.dim() || f.rows() != f.cols())
    throw Error(ErrorKind::dimension_mismatch, "map must be a square dim_v x dim matrix");
  auto inv = invert(f);
  if (!inv) throw Error(ErrorKind::singular, "map g -> V is singular");
  TwoCochain phi = TwoCochain(rep.dim(), rep.dim_v()) - coboundary_of_linear(rep, f);
  phi.mark_verified();  // -df is exact, hence closed
  TwistedRbo op = make_twisted_rbo(rep, std::move(phi), std::move(*inv));
  op.verified = true;
  return op;
}

bool graph_closure_check(const TwistedRbo& op) {
  const std::size_t d = op.dim_g(), dv = op.dim_v();
  ThreeLieAlgebra sd = twisted_semidirect(op.rep, op.phi);

  auto graph_vec = [&](std::size_t u) {
    Vec g(d + dv, Rational(0));
    for (std::size_t r = 0; r < d; ++r) g[r] = op.t(r, u);
    g[d + u] = 1;
    return g;
  };

  for (std::size_t idx = 0; idx < triple_count(dv); ++idx) {
    auto [u, v, w] = triple_at(dv, idx);
    Vec value = sd.bracket(graph_vec(u), graph_vec(v), graph_vec(w));
    Vec v_part(value.begin() + d, value.end());
    Vec g_part(value.begin(), value.begin() + d);
    if (g_part != op.t.apply(v_part)) return false;
  }
  return true;
}

ThreeLieAlgebra induced_bracket(const TwistedRbo& op) {
  require_verified(op, "induced_bracket");
  const std::size_t dv = op.dim_v();
  ThreeLieAlgebra out(dv);
  for (std::size_t idx = 0; idx < triple_count(dv); ++idx) {
    auto [u, v, w] = triple_at(dv, idx);
    out.set_bracket(u, v, w, induced_value(op, u, v, w));
  }
  out.mark_verified();
  return out;
}

Representation induced_rep_varrho(const TwistedRbo& op) {
  require_verified(op, "induced_rep_varrho");
  const std::size_t d = op.dim_g(), dv = op.dim_v();
  Representation rep(induced_bracket(op), d);
  for (std::size_t p = 0; p < pair_count(dv); ++p) {
    auto [u, v] = pair_at(dv, p);
    Vec tu = op.t.col(u), tv = op.t.col(v);
    Matrix m(d, d);
    for (std::size_t x = 0; x < d; ++x) {
      Vec ex = unit(d, x);
      Vec correction = op.rep.rho_apply(ex, tu, unit(dv, v));
      axpy(correction, 1, op.rep.rho_apply(tv, ex, unit(dv, u)));
      axpy(correction, 1, op.phi.eval(tu, tv, ex));
      Vec col = op.rep.carrier().bracket(tu, tv, ex);
      axpy(col, -1, op.t.apply(correction));
      m.set_col(x, col);
    }
    rep.set_rho(u, v, std::move(m));
  }
  rep.mark_verified();
  return rep;
}

Matrix delta(const TwistedRbo& op, const Vec& x, const Vec& y) {
  require_verified(op, "delta");
  const std::size_t d = op.dim_g(), dv = op.dim_v();
  Matrix out(d, dv);
  for (std::size_t v = 0; v < dv; ++v) {
    Vec tv = op.t.col(v);
    Vec col = op.t.apply(op.rep.rho_apply(x, y, unit(dv, v)));
    axpy(col, -1, op.rep.carrier().bracket(x, y, tv));
    axpy(col, 1, op.t.apply(op.phi.eval(x, y, tv)));
    out.set_col(v, col);
  }
  return out;
}

NCochain coboundary_dT(const TwistedRbo& op, const NCochain& f, const CochainOptions& opts) {
  require_verified(op, "coboundary_dT");
  return coboundary(induced_rep_varrho(op), f, opts);
}

std::vector<CohomologyRow> trbo_cohomology_dims(const TwistedRbo& op, std::size_t n_max,
                                                const CochainOptions& opts) {
  require_verified(op, "trbo_cohomology_dims");
  if (n_max < 1 || n_max > opts.degree_cap + 1)
    throw Error(ErrorKind::resource_cap, "n_max outside 1..degree cap");
  const std::size_t d = op.dim_g(), dv = op.dim_v();
  Representation varrho = induced_rep_varrho(op);

  // delta as one matrix from g^g to Hom(V, g), columns over pairs of g.
  Matrix delta_m(dv * d, pair_count(d));
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    Matrix dm = delta(op, unit(d, i), unit(d, j));
    for (std::size_t k = 0; k < dv; ++k)
      for (std::size_t c = 0; c < d; ++c) delta_m(k * d + c, p) = dm(c, k);
  }

  std::vector<CohomologyRow> rows;
  std::size_t prev_rank = rank(delta_m);
  {
    CohomologyRow row;
    row.degree = 1;
    row.cochains = pair_count(d);
    row.cocycles = row.cochains - prev_rank;
    row.coboundaries = 0;
    row.cohomology = row.cocycles;
    rows.push_back(row);
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    NCochain shape(n - 1, dv, d);
    Matrix d_n = coboundary_matrix(varrho, n - 1, opts);
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

TwistedRbo t_admissible_gauge(const TwistedRbo& op, const Matrix& f) {
  require_verified(op, "t_admissible_gauge");
  if (f.rows() != op.dim_v() || f.cols() != op.dim_g())
    throw Error(ErrorKind::dimension_mismatch, "gauge cocycle must be dim_v x dim");
  if (!coboundary_of_linear(op.rep, f).is_zero())
    throw Error(ErrorKind::not_a_cocycle, "gauge map is not a 1-cocycle");
  Matrix m = Matrix::identity(op.dim_v());
  m += f * op.t;
  auto inv = invert(m);
  if (!inv) throw Error(ErrorKind::not_admissible, "Id + f T is singular");
  TwistedRbo out = op;
  out.t = op.t * *inv;
  out.verified = true;
  return out;
}

bool check_trbo_homomorphism(const Matrix& phi_g, const Matrix& psi_v, const TwistedRbo& from,
                             const TwistedRbo& to) {
  if (!same_context(from, to))
    throw Error(ErrorKind::dimension_mismatch, "operators do not share a context");
  const std::size_t d = from.dim_g();
  const ThreeLieAlgebra& g = from.rep.carrier();
  if (!check_homomorphism(g, g, phi_g)) return false;
  if (!(phi_g * from.t == to.t * psi_v)) return false;
  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    Matrix lhs = psi_v * from.rep.rho_basis(i, j);
    Matrix rhs = from.rep.rho(phi_g.col(i), phi_g.col(j)) * psi_v;
    if (!(lhs == rhs)) return false;
  }
  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    Vec lhs = psi_v.apply(from.phi.eval_basis(i, j, k));
    Vec rhs = from.phi.eval(phi_g.col(i), phi_g.col(j), phi_g.col(k));
    if (lhs != rhs) return false;
  }
  return true;
}

DeformationReport check_deformation(const TwistedRbo& op, const Matrix& frak_t) {
  require_verified(op, "check_deformation");
  if (frak_t.rows() != op.dim_g() || frak_t.cols() != op.dim_v())
    throw Error(ErrorKind::dimension_mismatch, "deformation direction must map V into g");
  const std::size_t dv = op.dim_v();
  const ThreeLieAlgebra& g = op.rep.carrier();
  const Matrix& s = frak_t;

  // t-degree slices of rho(T_t u, T_t v)w + cyc + Phi(T_t u, T_t v, T_t w).
  auto slice0 = [&](std::size_t u, std::size_t v, std::size_t w) {
    return induced_value(op, u, v, w);
  };
  auto slice1 = [&](std::size_t u, std::size_t v, std::size_t w) {
    Vec tu = op.t.col(u), tv = op.t.col(v), tw = op.t.col(w);
    Vec su = s.col(u), sv = s.col(v), sw = s.col(w);
    Vec out = op.rep.rho_apply(su, tv, unit(dv, w));
    axpy(out, 1, op.rep.rho_apply(tu, sv, unit(dv, w)));
    axpy(out, 1, op.rep.rho_apply(sv, tw, unit(dv, u)));
    axpy(out, 1, op.rep.rho_apply(tv, sw, unit(dv, u)));
    axpy(out, 1, op.rep.rho_apply(sw, tu, unit(dv, v)));
    axpy(out, 1, op.rep.rho_apply(tw, su, unit(dv, v)));
    axpy(out, 1, op.phi.eval(su, tv, tw));
    axpy(out, 1, op.phi.eval(tu, sv, tw));
    axpy(out, 1, op.phi.eval(tu, tv, sw));
    return out;
  };
  auto slice2 = [&](std::size_t u, std::size_t v, std::size_t w) {
    Vec tu = op.t.col(u), tv = op.t.col(v), tw = op.t.col(w);
    Vec su = s.col(u), sv = s.col(v), sw = s.col(w);
    Vec out = op.rep.rho_apply(su, sv, unit(dv, w));
    axpy(out, 1, op.rep.rho_apply(sv, sw, unit(dv, u)));
    axpy(out, 1, op.rep.rho_apply(sw, su, unit(dv, v)));
    axpy(out, 1, op.phi.eval(su, sv, tw));
    axpy(out, 1, op.phi.eval(su, tv, sw));
    axpy(out, 1, op.phi.eval(tu, sv, sw));
    return out;
  };
  auto slice3 = [&](std::size_t u, std::size_t v, std::size_t w) {
    return op.phi.eval(s.col(u), s.col(v), s.col(w));
  };

  auto check_at = [&](const char* subject, auto&& lhs_fn, auto&& rhs_fn) {
    return detail::run_tuple_check(
        subject, triple_count(dv), [&](std::size_t idx) -> std::optional<Violation> {
          auto [u, v, w] = triple_at(dv, idx);
          Vec lhs = lhs_fn(u, v, w);
          Vec rhs = rhs_fn(u, v, w);
          if (lhs == rhs) return std::nullopt;
          return Violation{"(" + basis_name(u) + "," + basis_name(v) + "," + basis_name(w) + ")",
                           std::move(lhs), std::move(rhs)};
        });
  };

  DeformationReport out;
  out.identities[0] = check_at(
      "deformation_t1",
      [&](std::size_t u, std::size_t v, std::size_t w) {
        Vec lhs = g.bracket(s.col(u), op.t.col(v), op.t.col(w));
        axpy(lhs, 1, g.bracket(op.t.col(u), s.col(v), op.t.col(w)));
        axpy(lhs, 1, g.bracket(op.t.col(u), op.t.col(v), s.col(w)));
        return lhs;
      },
      [&](std::size_t u, std::size_t v, std::size_t w) {
        Vec rhs = op.t.apply(slice1(u, v, w));
        axpy(rhs, 1, s.apply(slice0(u, v, w)));
        return rhs;
      });
  out.identities[1] = check_at(
      "deformation_t2",
      [&](std::size_t u, std::size_t v, std::size_t w) {
        Vec lhs = g.bracket(s.col(u), s.col(v), op.t.col(w));
        axpy(lhs, 1, g.bracket(op.t.col(u), s.col(v), s.col(w)));
        axpy(lhs, 1, g.bracket(s.col(u), op.t.col(v), s.col(w)));
        return lhs;
      },
      [&](std::size_t u, std::size_t v, std::size_t w) {
        Vec rhs = op.t.apply(slice2(u, v, w));
        axpy(rhs, 1, s.apply(slice1(u, v, w)));
        return rhs;
      });
  out.identities[2] = check_at(
      "deformation_t3",
      [&](std::size_t u, std::size_t v, std::size_t w) {
        return g.bracket(s.col(u), s.col(v), s.col(w));
      },
      [&](std::size_t u, std::size_t v, std::size_t w) {
        Vec rhs = op.t.apply(slice3(u, v, w));
        axpy(rhs, 1, s.apply(slice2(u, v, w)));
        return rhs;
      });
  out.identities[3] = check_at(
      "deformation_t4",
      [&](std::size_t u, std::size_t v, std::size_t w) { return s.apply(slice3(u, v, w)); },
      [&](std::size_t, std::size_t, std::size_t) { return zero_vec(op.dim_g()); });
  return out;
}

bool check_deformation_equivalence(const TwistedRbo& op, const Matrix& frak1, const Matrix& frak2,
                                   const Vec& x, const Vec& y) {
  require_verified(op, "check_deformation_equivalence");
  if (!check_deformation(op, frak1).all_passed() || !check_deformation(op, frak2).all_passed())
    throw Error(ErrorKind::unverified_input, "both directions must generate deformations");

  const std::size_t dv = op.dim_v();
  const ThreeLieAlgebra& g = op.rep.carrier();
  Matrix diff = frak1;
  diff -= frak2;

  for (std::size_t u = 0; u < dv; ++u) {
    Vec tu = op.t.col(u);
    // Line 1 evaluated from the defining formula, not through delta().
    Vec rhs1 = op.t.apply(op.rep.rho_apply(x, y, unit(dv, u)));
    axpy(rhs1, -1, g.bracket(x, y, tu));
    axpy(rhs1, 1, op.t.apply(op.phi.eval(x, y, tu)));
    if (diff.col(u) != rhs1) return false;

    Vec rhs2_arg = op.rep.rho_apply(x, y, unit(dv, u));
    axpy(rhs2_arg, 1, op.phi.eval(x, y, tu));
    if (g.bracket(x, y, frak1.col(u)) != frak2.apply(rhs2_arg)) return false;
  }

  // The difference is the boundary of X in the operator complex, exactly.
  if (!(diff == delta(op, x, y)))
    throw Error(ErrorKind::unverified_input, "equivalence holds but difference is not delta(X)");
  return true;
}

bool check_formal_equivalence(const TwistedRbo& op, const Matrix& frak1, const Matrix& frak2,
                              const Vec& x, const Vec& y) {
  require_verified(op, "check_formal_equivalence");
  const std::size_t d = op.dim_g(), dv = op.dim_v();
  const ThreeLieAlgebra& g = op.rep.carrier();

  Matrix ad_x(d, d);
  for (std::size_t m = 0; m < d; ++m) ad_x.set_col(m, g.bracket(x, y, unit(d, m)));
  Matrix phi_xt(dv, dv);
  for (std::size_t u = 0; u < dv; ++u) phi_xt.set_col(u, op.phi.eval(x, y, op.t.col(u)));

  PolyMat phi_t = {Matrix::identity(d), ad_x};
  PolyMat psi_t = {Matrix::identity(dv), op.rep.rho(x, y) + phi_xt};
  PolyMat t1 = {op.t, frak1};
  PolyMat t2 = {op.t, frak2};

  if (!pequal(pmul(phi_t, t1), pmul(t2, psi_t))) return false;

  auto col_poly = [&](std::size_t i) {
    return std::array<Vec, 2>{unit(d, i), ad_x.col(i)};
  };

  for (std::size_t p = 0; p < pair_count(d); ++p) {
    auto [i, j] = pair_at(d, p);
    auto a = col_poly(i), b = col_poly(j);
    PolyMat rho_poly(3, Matrix(dv, dv));
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 2; ++n) rho_poly[m + n] += op.rep.rho(a[m], b[n]);
    PolyMat lhs = pmul(psi_t, PolyMat{op.rep.rho_basis(i, j)});
    PolyMat rhs = pmul(rho_poly, psi_t);
    if (!pequal(lhs, rhs)) return false;
  }

  auto vec_poly_equal = [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
      const Vec* va = k < a.size() ? &a[k] : nullptr;
      const Vec* vb = k < b.size() ? &b[k] : nullptr;
      if (va && vb && *va != *vb) return false;
      if (va && !vb && !is_zero(*va)) return false;
      if (!va && vb && !is_zero(*vb)) return false;
    }
    return true;
  };

  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    auto a = col_poly(i), b = col_poly(j), c = col_poly(k);

    std::vector<Vec> rhs_phi(4, zero_vec(dv));
    std::vector<Vec> rhs_bracket(4, zero_vec(d));
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t q = 0; q < 2; ++q) {
          axpy(rhs_phi[m + n + q], 1, op.phi.eval(a[m], b[n], c[q]));
          axpy(rhs_bracket[m + n + q], 1, g.bracket(a[m], b[n], c[q]));
        }

    Vec phi_ijk = op.phi.eval_basis(i, j, k);
    std::vector<Vec> lhs_phi = {phi_ijk, psi_t[1].apply(phi_ijk)};
    if (!vec_poly_equal(lhs_phi, rhs_phi)) return false;

    Vec br = g.bracket_basis(i, j, k);
    std::vector<Vec> lhs_bracket = {br, ad_x.apply(br)};
    if (!vec_poly_equal(lhs_bracket, rhs_bracket)) return false;
  }
  return true;
}

}  // namespace tlie
