#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chowbundle/polynomial.hpp"
#include "chowbundle/series.hpp"

namespace chowbundle {

/// Newton polynomial p_j(x_1..x_r) over symmetric_ring(r): p_j evaluated at the
/// elementary symmetric functions of r roots is the j-th power sum of those roots.
///
/// Computed by the Newton recurrence and memoized per (j, r); thread-safe.
const GradedPolynomial& power_sum_poly(unsigned j, unsigned r);

/// ∂p_j/∂x_i over symmetric_ring(r); zero when j < i. Requires 1 <= i <= r.
GradedPolynomial power_sum_partial(unsigned j, unsigned i, unsigned r);

/// Power sums p_1..p_N from the elementary values e_1..e_N stored in a series
/// with constant term 1 (the Newton recurrence evaluated directly in C).
template <SeriesCoefficient C>
std::vector<C> power_sums(const BasicSeries<C>& elementary) {
  if (!elementary[0].is_one()) throw DomainError("power sums need a series with constant term 1");
  const std::size_t n = elementary.order();
  std::vector<C> p;
  p.reserve(n + 1);
  p.push_back(elementary[0].zero_like());  // index 0 unused
  for (std::size_t j = 1; j <= n; ++j) {
    // p_j = Σ_{i=1}^{j-1} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j
    const long sj = static_cast<long>(j);
    C acc = elementary[j] * Rational(j % 2 == 1 ? sj : -sj);
    for (std::size_t i = 1; i < j; ++i) {
      if (elementary[i].is_zero()) continue;
      C term = elementary[i] * p[j - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    p.push_back(std::move(acc));
  }
  return p;
}

/// Chern character components ch_1..ch_N (index 0 of the result is ch_1) of a
/// total Chern class c = 1 + c_1 t + ... + c_N t^N: ch_j = p_j(c_1, ..)/j!.
template <SeriesCoefficient C>
std::vector<C> chern_to_char(const BasicSeries<C>& total_chern) {
  auto p = power_sums(total_chern);
  std::vector<C> ch;
  ch.reserve(total_chern.order());
  for (std::size_t j = 1; j < p.size(); ++j) {
    ch.push_back(p[j] * Rational(mpz_class(1), factorial(static_cast<unsigned>(j))));
  }
  return ch;
}

/// Total Chern class exp(Σ_{j>=1} (j-1)! (-1)^{j+1} ch_j t^j) truncated at `order`.
/// `ch[k]` is ch_{k+1}; `zero` fixes the coefficient ring.
template <SeriesCoefficient C>
BasicSeries<C> char_to_chern(std::span<const C> ch, std::size_t order, const C& zero) {
  if (ch.size() < order) throw StructuralError("char_to_chern needs ch_1..ch_N");
  std::vector<C> exponent(order + 1, zero);
  for (std::size_t j = 1; j <= order; ++j) {
    Rational w(factorial(static_cast<unsigned>(j - 1)));
    if (j % 2 == 0) w = -w;
    exponent[j] = ch[j - 1] * w;
  }
  return BasicSeries<C>(order, std::move(exponent)).exp();
}

/// chern_to_char for TruncatedSeries.
std::vector<GradedPolynomial> chern_to_char(const TruncatedSeries& total_chern);

/// char_to_chern for polynomial coefficients over `ring`.
TruncatedSeries char_to_chern(const RingPtr& ring, std::span<const GradedPolynomial> ch,
                              std::size_t order);

}  // namespace chowbundle
