#include "tlie/families.hpp"

#include "tuple_check.hpp"

#include <utility>

namespace tlie {

namespace {

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational sign_pow(long long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

std::string laurent_label(long long l) { return "t^" + std::to_string(l); }
std::string omega_label(OmegaIndex i) {
  return "w[" + std::to_string(i.mode) + "," + std::to_string(i.weight) + "]";
}

}  // namespace

LaurentTerm laurent_bracket(long long l, long long m, long long n) {
  Rational coeff = det3({{{sign_pow(l), sign_pow(m), sign_pow(n)},
                          {Rational(1), Rational(1), Rational(1)},
                          {Rational(l), Rational(m), Rational(n)}}});
  return {std::move(coeff), l + m + n - 1};
}

LaurentTerm laurent_reynolds_bracket(long long l, long long m, long long n) {
  if (l == 0 || m == 0 || n == 0 || l + m + n - 1 == 0)
    throw Error(ErrorKind::undefined_denominator, "Reynolds scaling undefined at this triple");
  LaurentTerm base = laurent_bracket(l, m, n);
  base.coeff *= Rational(l + m + n - 1) / (Rational(l) * Rational(m) * Rational(n));
  return base;
}

OmegaTerm omega_bracket(OmegaIndex a, OmegaIndex b, OmegaIndex c) {
  Rational coeff = det3({{{Rational(1), Rational(1), Rational(1)},
                          {Rational(a.mode), Rational(b.mode), Rational(c.mode)},
                          {Rational(a.weight), Rational(b.weight), Rational(c.weight)}}});
  return {std::move(coeff), {a.mode + b.mode + c.mode, a.weight + b.weight + c.weight + 1}};
}

OmegaTerm omega_reynolds_bracket(OmegaIndex a, OmegaIndex b, OmegaIndex c) {
  long long da = a.mode + a.weight + 1, db = b.mode + b.weight + 1, dc = c.mode + c.weight + 1;
  long long dt = a.mode + b.mode + c.mode + a.weight + b.weight + c.weight + 2;
  if (da == 0 || db == 0 || dc == 0 || dt == 0)
    throw Error(ErrorKind::undefined_denominator, "Reynolds scaling undefined at this triple");
  OmegaTerm base = omega_bracket(a, b, c);
  base.coeff *= Rational(dt) / (Rational(da) * Rational(db) * Rational(dc));
  return base;
}

Report check_laurent_reynolds(const std::vector<std::array<long long, 3>>& samples) {
  return detail::run_tuple_check(
      "laurent_reynolds", samples.size(), [&](std::size_t idx) -> std::optional<Violation> {
        auto [l, m, n] = samples[idx];
        if (l == 0 || m == 0 || n == 0 || l + m + n - 1 == 0)
          throw Error(ErrorKind::undefined_denominator,
                      "sampled triple has a vanishing denominator");
        LaurentTerm base = laurent_bracket(l, m, n);
        // [Rt^l, Rt^m, Rt^n]
        Rational lhs = base.coeff / (Rational(l) * Rational(m) * Rational(n));
        // R([Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz] - [Rx,Ry,Rz])
        Rational inner = Rational(1) / (Rational(l) * Rational(m)) +
                         Rational(1) / (Rational(m) * Rational(n)) +
                         Rational(1) / (Rational(l) * Rational(n)) -
                         Rational(1) / (Rational(l) * Rational(m) * Rational(n));
        Rational rhs = inner * base.coeff / Rational(l + m + n - 1);
        if (lhs == rhs) return std::nullopt;
        return Violation{"(" + laurent_label(l) + "," + laurent_label(m) + "," +
                             laurent_label(n) + ")",
                         Vec{lhs}, Vec{rhs}};
      });
}

Report check_omega_reynolds(const std::vector<std::array<OmegaIndex, 3>>& samples) {
  return detail::run_tuple_check(
      "omega_reynolds", samples.size(), [&](std::size_t idx) -> std::optional<Violation> {
        auto [a, b, c] = samples[idx];
        long long da = a.mode + a.weight + 1, db = b.mode + b.weight + 1,
                  dc = c.mode + c.weight + 1;
        long long dt =
            a.mode + b.mode + c.mode + a.weight + b.weight + c.weight + 2;
        if (da == 0 || db == 0 || dc == 0 || dt == 0)
          throw Error(ErrorKind::undefined_denominator,
                      "sampled triple has a vanishing denominator");
        OmegaTerm base = omega_bracket(a, b, c);
        Rational lhs = base.coeff / (Rational(da) * Rational(db) * Rational(dc));
        Rational inner = Rational(1) / (Rational(da) * Rational(db)) +
                         Rational(1) / (Rational(db) * Rational(dc)) +
                         Rational(1) / (Rational(da) * Rational(dc)) -
                         Rational(1) / (Rational(da) * Rational(db) * Rational(dc));
        Rational rhs = inner * base.coeff / Rational(dt);
        if (lhs == rhs) return std::nullopt;
        return Violation{"(" + omega_label(a) + "," + omega_label(b) + "," + omega_label(c) + ")",
                         Vec{lhs}, Vec{rhs}};
      });
}

std::vector<std::array<long long, 3>> laurent_sample_triples(long long lo, long long hi) {
  std::vector<std::array<long long, 3>> out;
  for (long long l = lo; l <= hi; ++l)
    for (long long m = l + 1; m <= hi; ++m)
      for (long long n = m + 1; n <= hi; ++n) {
        if (l == 0 || m == 0 || n == 0 || l + m + n - 1 == 0) continue;
        out.push_back({l, m, n});
      }
  return out;
}

std::vector<std::array<OmegaIndex, 3>> omega_sample_triples(long long mode_lo, long long mode_hi,
                                                            long long weight_lo,
                                                            long long weight_hi) {
  std::vector<OmegaIndex> grid;
  for (long long m = mode_lo; m <= mode_hi; ++m)
    for (long long a = weight_lo; a <= weight_hi; ++a)
      if (m + a + 1 != 0) grid.push_back({m, a});
  std::vector<std::array<OmegaIndex, 3>> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j)
      for (std::size_t k = j + 1; k < grid.size(); ++k) {
        long long dt = grid[i].mode + grid[j].mode + grid[k].mode + grid[i].weight +
                       grid[j].weight + grid[k].weight + 2;
        if (dt == 0) continue;
        out.push_back({grid[i], grid[j], grid[k]});
      }
  return out;
}

PartialAlgebra materialize_laurent_window(long long lo, long long hi) {
  if (lo > hi) throw Error(ErrorKind::dimension_mismatch, "empty window");
  const std::size_t d = static_cast<std::size_t>(hi - lo + 1);
  PartialAlgebra pa{ThreeLieAlgebra(d), {}, {}, {}};
  for (long long l = lo; l <= hi; ++l) {
    pa.labels.push_back(laurent_label(l));
    pa.reynolds_scale.push_back(l == 0 ? std::optional<Rational>()
                                       : std::optional<Rational>(Rational(1) / Rational(l)));
  }
  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    LaurentTerm term = laurent_bracket(lo + static_cast<long long>(i),
                                       lo + static_cast<long long>(j),
                                       lo + static_cast<long long>(k));
    if (term.coeff == 0) continue;
    if (term.exponent < lo || term.exponent > hi) {
      pa.escaping.insert(t);
      continue;
    }
    Vec v = zero_vec(d);
    v[static_cast<std::size_t>(term.exponent - lo)] = term.coeff;
    pa.algebra.set_bracket(i, j, k, std::move(v));
  }
  return pa;
}

PartialAlgebra materialize_omega_window(long long mode_lo, long long mode_hi, long long weight_lo,
                                        long long weight_hi) {
  if (mode_lo > mode_hi || weight_lo > weight_hi)
    throw Error(ErrorKind::dimension_mismatch, "empty window");
  const long long wspan = weight_hi - weight_lo + 1;
  const std::size_t d = static_cast<std::size_t>((mode_hi - mode_lo + 1) * wspan);
  auto index_of = [&](OmegaIndex x) -> std::optional<std::size_t> {
    if (x.mode < mode_lo || x.mode > mode_hi || x.weight < weight_lo || x.weight > weight_hi)
      return std::nullopt;
    return static_cast<std::size_t>((x.mode - mode_lo) * wspan + (x.weight - weight_lo));
  };
  auto at = [&](std::size_t b) -> OmegaIndex {
    return {mode_lo + static_cast<long long>(b) / wspan,
            weight_lo + static_cast<long long>(b) % wspan};
  };

  PartialAlgebra pa{ThreeLieAlgebra(d), {}, {}, {}};
  for (std::size_t b = 0; b < d; ++b) {
    OmegaIndex x = at(b);
    pa.labels.push_back(omega_label(x));
    long long den = x.mode + x.weight + 1;
    pa.reynolds_scale.push_back(den == 0 ? std::optional<Rational>()
                                         : std::optional<Rational>(Rational(1) / Rational(den)));
  }
  for (std::size_t t = 0; t < triple_count(d); ++t) {
    auto [i, j, k] = triple_at(d, t);
    OmegaTerm term = omega_bracket(at(i), at(j), at(k));
    if (term.coeff == 0) continue;
    auto target = index_of(term.index);
    if (!target) {
      pa.escaping.insert(t);
      continue;
    }
    Vec v = zero_vec(d);
    v[*target] = term.coeff;
    pa.algebra.set_bracket(i, j, k, std::move(v));
  }
  return pa;
}

std::optional<Vec> tracked_ad_apply(const PartialAlgebra& pa, std::size_t i, std::size_t j,
                                    const Vec& w) {
  const std::size_t d = pa.algebra.dim();
  Vec out = zero_vec(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (w[k] == 0) continue;
    std::size_t a = i, b = j, c = k;
    int sign = sort3_sign(a, b, c);
    if (sign == 0) continue;
    if (pa.escaping.contains(triple_index(d, a, b, c))) return std::nullopt;
    axpy(out, w[k], pa.algebra.bracket_basis(i, j, k));
  }
  return out;
}

Report check_fi_windowed(PartialAlgebra& pa) {
  auto start = std::chrono::steady_clock::now();
  const std::size_t d = pa.algebra.dim();
  const std::size_t pairs = pair_count(d), triples = triple_count(d);

  auto tuple_name = [&](std::size_t x1, std::size_t x2, std::size_t x3, std::size_t x4,
                        std::size_t x5) {
    return "(" + pa.labels[x1] + "," + pa.labels[x2] + " | " + pa.labels[x3] + "," +
           pa.labels[x4] + "," + pa.labels[x5] + ")";
  };

  // A basis triple is usable when its bracket did not escape.
  auto basis_value = [&](std::size_t i, std::size_t j, std::size_t k) -> std::optional<Vec> {
    std::size_t a = i, b = j, c = k;
    if (sort3_sign(a, b, c) == 0) return zero_vec(d);
    if (pa.escaping.contains(triple_index(d, a, b, c))) return std::nullopt;
    return pa.algebra.bracket_basis(i, j, k);
  };

  Report report;
  report.subject = "fundamental_identity_windowed";
  for (std::size_t pi = 0; pi < pairs; ++pi) {
    auto [x1, x2] = pair_at(d, pi);
    for (std::size_t ti = 0; ti < triples; ++ti) {
      auto [x3, x4, x5] = triple_at(d, ti);

      auto skip = [&] { report.skipped.push_back(tuple_name(x1, x2, x3, x4, x5)); };
      auto inner_lhs = basis_value(x3, x4, x5);
      auto inner1 = basis_value(x1, x2, x3);
      auto inner2 = basis_value(x1, x2, x4);
      auto inner3 = basis_value(x1, x2, x5);
      if (!inner_lhs || !inner1 || !inner2 || !inner3) {
        skip();
        continue;
      }
      auto lhs = tracked_ad_apply(pa, x1, x2, *inner_lhs);
      auto r1 = tracked_ad_apply(pa, x4, x5, *inner1);
      auto r2 = tracked_ad_apply(pa, x5, x3, *inner2);
      auto r3 = tracked_ad_apply(pa, x3, x4, *inner3);
      if (!lhs || !r1 || !r2 || !r3) {
        skip();
        continue;
      }
      ++report.tuples_checked;
      Vec rhs = *r1;
      axpy(rhs, 1, *r2);
      axpy(rhs, 1, *r3);
      if (*lhs != rhs)
        report.violations.push_back(
            Violation{tuple_name(x1, x2, x3, x4, x5), std::move(*lhs), std::move(rhs)});
    }
  }
  report.outcome = report.violations.empty() ? Outcome::pass : Outcome::fail;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (report.passed()) pa.algebra.mark_verified();
  return report;
}

Matrix reynolds_endo(const PartialAlgebra& pa) {
  const std::size_t d = pa.algebra.dim();
  Matrix r(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!pa.reynolds_scale[i])
      throw Error(ErrorKind::undefined_denominator,
                  "window contains a generator with no Reynolds scale: " + pa.labels[i]);
    r(i, i) = *pa.reynolds_scale[i];
  }
  return r;
}

}  // namespace tlie
