#pragma once

#include "tlie/representation.hpp"

#include <span>

namespace tlie {

/**
 * An n-cochain on the complex of a 3-Lie algebra g with coefficients in a
 * representation V: a multilinear map on (n-1) wedge-pair slots and one final
 * g slot, stored on the basis of strictly increasing pairs. The pair slots
 * are tensor factors: no ordering is imposed across them.
 */
class NCochain {
 public:
  NCochain(std::size_t degree, std::size_t dim_g, std::size_t dim_v);

  std::size_t degree() const { return degree_; }
  std::size_t dim_g() const { return dim_g_; }
  std::size_t dim_v() const { return dim_v_; }

  /// Number of basis tuples: pair_count(dim_g)^(degree-1) * dim_g.
  std::size_t tuple_count() const { return values_.size(); }
  /// Dimension of the cochain space: tuple_count() * dim_v.
  std::size_t dimension() const { return values_.size() * dim_v_; }

  std::size_t tuple_index(std::span<const std::size_t> pairs, std::size_t last) const;
  /// Decodes a tuple index into pair-slot indices plus the final basis index.
  void tuple_at(std::size_t index, std::span<std::size_t> pairs, std::size_t& last) const;

  Vec& value(std::size_t tuple) { return values_[tuple]; }
  const Vec& value(std::size_t tuple) const { return values_[tuple]; }

  bool is_zero() const;
  friend bool operator==(const NCochain& a, const NCochain& b) = default;

 private:
  std::size_t degree_;
  std::size_t dim_g_;
  std::size_t dim_v_;
  std::vector<Vec> values_;
};

struct CochainOptions {
  std::size_t degree_cap = 4;
  std::size_t dim_cap = 6;
  std::size_t dim_v_cap = 6;
};

/// Degree-1 cochain from a linear map g -> V given as a dim_v x dim matrix.
NCochain cochain_from_linear_map(const Matrix& f);
Matrix linear_map_from_cochain(const NCochain& f);

/// A TwoCochain (alternating 3-form) as a degree-2 cochain on pair x final
/// slots, for feeding the generic coboundary.
NCochain embed(const TwoCochain& phi);

/**
 * The coboundary d f of the cochain complex of (rep.carrier(); rep), by
 * literal evaluation of the defining formula on every basis tuple of
 * degree n+1. Throws resource_cap when f.degree() exceeds opts.degree_cap.
 */
NCochain coboundary(const Representation& rep, const NCochain& f, const CochainOptions& opts = {});

/// Matrix of d on the degree-n basis: dim C^{n+1} rows by dim C^n columns,
/// in tuple-major, value-component-minor coordinates.
Matrix coboundary_matrix(const Representation& rep, std::size_t degree,
                         const CochainOptions& opts = {});

struct CohomologyRow {
  std::size_t degree = 0;
  std::size_t cochains = 0;      // dim C^n
  std::size_t cocycles = 0;      // dim Z^n
  std::size_t coboundaries = 0;  // dim B^n
  std::size_t cohomology = 0;    // dim H^n
};

/// Cocycle/coboundary/cohomology dimensions for degrees 1..n_max
/// (B^1 = 0; each Z^n comes from the kernel of the assembled d matrix).
std::vector<CohomologyRow> cohomology_dims(const Representation& rep, std::size_t n_max,
                                           const CochainOptions& opts = {});

}  // namespace tlie
