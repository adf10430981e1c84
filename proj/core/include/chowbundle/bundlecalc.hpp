#pragma once

#include <cstddef>
#include <vector>

#include "chowbundle/fibered.hpp"
#include "chowbundle/polynomial.hpp"
#include "chowbundle/series.hpp"

namespace chowbundle {

using FiberedSeries = BasicSeries<FiberedClass>;

/// A rank-r bundle E of relative degree `ell` on a P¹-bundle, twisted by O(m).
///
/// Chern classes of E are c_i(E) = a_i + a_i'·z with a_1' replaced by the
/// integer `ell`. Chern classes of π_*E(m) are only meaningful through
/// t^{m·r + ell}; `order` is the requested truncation.
struct BundleParams {
  unsigned r = 1;
  long ell = 0;
  unsigned m = 0;
  std::size_t order = 0;
  bool mod_w = true;

  /// m·r + ell, the highest order at which Chern classes of π_*E(m) are determined.
  long asserted_order() const { return static_cast<long>(m) * static_cast<long>(r) + ell; }
  /// Rank of π_*E(m): (m+1)·r + ell.
  long pushforward_rank() const { return static_cast<long>(m + 1) * static_cast<long>(r) + ell; }
};

/// 1 + a_1 t + ... + a_r t^r over `ring`.
TruncatedSeries tautological_total_class(unsigned r, const RingPtr& ring, std::size_t order);

/// F(t) = exp ∫ [ell·(a_1 + a_2 t + .. + a_r t^{r-1}) − (a_2' + a_3' t + .. + a_r' t^{r-2})]
///             / (1 + a_1 t + .. + a_r t^r) dt,
/// truncated at `order`, over dagger_ring(r). Any integer degree `ell` is accepted.
TruncatedSeries capital_F(unsigned r, long ell, std::size_t order);

/// Σ c_i(π_*E(m)) t^i modulo w1, w2 as F(t)·(1 + a_1 t + .. + a_r t^r)^{m+1},
/// truncated at min(order, m·r + ell), over dagger_ring(r). Requires ell >= 0.
TruncatedSeries pushforward_chern_mod_w(const BundleParams& params);

/// Total Chern class of E as a series over the fibered ring:
/// 1 + Σ_i (a_i + a_i' z) t^i with a_1' = ell. Uses base_ring(r) unless `mod_w`.
FiberedSeries fibered_total_chern(unsigned r, long ell, bool mod_w, std::size_t order);

/// Chern character of π_*E(m) by Grothendieck–Riemann–Roch on the universal
/// P¹-bundle with w1, w2 retained: element k is ch_k for k = 0..order, so
/// element 0 is the rank. Over base_ring(r).
std::vector<GradedPolynomial> pushforward_character_full(const BundleParams& params);

/// Total Chern class of π_*E(m) over base_ring(r) with w1, w2 retained.
/// Throws DomainError for order > m·r + ell.
TruncatedSeries pushforward_chern_full(const BundleParams& params);

/// Dispatches on params.mod_w.
TruncatedSeries pushforward_chern(const BundleParams& params);

/// Images of the variables of `ring` (dagger_ring(r) or base_ring(r)) under
/// E ↦ E(1): the classes a_i, a_i' of the twisted bundle in terms of those of
/// E, with a_1' = ell. Computed in the fibered ring, mod w when the ring has no w1, w2.
std::vector<GradedPolynomial> twist_images(const RingPtr& ring, unsigned r, long ell);

/// Evaluates `p` (a class written in the tautological variables of a degree
/// ell + r bundle) at the classes of E(1) expressed through E of degree ell.
GradedPolynomial twist_substitute(const GradedPolynomial& p, unsigned r, long ell);

/// Coefficients of the Todd series x/(1 − e^{−x}) up to x^order.
std::vector<Rational> todd_coefficients(std::size_t order);

}  // namespace chowbundle
