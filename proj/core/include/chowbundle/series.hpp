#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chowbundle/errors.hpp"
#include "chowbundle/polynomial.hpp"
#include "chowbundle/rational.hpp"

namespace chowbundle {

/// Coefficient rings usable inside BasicSeries.
template <class C>
concept SeriesCoefficient = requires(const C& a, const C& b, const Rational& q) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a * q } -> std::convertible_to<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<C>;
  { a.one_like() } -> std::convertible_to<C>;
};

/// Power series Σ c_j t^j truncated after t^order.
///
/// The order is explicit state. Combining series of different orders is a
/// StructuralError; use truncated() to lower an order deliberately.
template <SeriesCoefficient C>
class BasicSeries {
 public:
  /// `coeffs` must hold order+1 entries.
  BasicSeries(std::size_t order, std::vector<C> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (c_.size() != order_ + 1) {
      throw StructuralError("series of order " + std::to_string(order_) + " needs " +
                            std::to_string(order_ + 1) + " coefficients");
    }
  }

  /// The series with constant term `c` and every other coefficient zero.
  static BasicSeries constant(std::size_t order, const C& c) {
    std::vector<C> coeffs(order + 1, c.zero_like());
    coeffs[0] = c;
    return BasicSeries(order, std::move(coeffs));
  }

  /// Builds a series from leading coefficients, padding with zeros of the same ring.
  static BasicSeries from_prefix(std::size_t order, std::vector<C> prefix, const C& zero) {
    prefix.resize(std::min(prefix.size(), order + 1), zero);
    while (prefix.size() < order + 1) prefix.push_back(zero);
    return BasicSeries(order, std::move(prefix));
  }

  std::size_t order() const noexcept { return order_; }
  const C& operator[](std::size_t j) const { return c_.at(j); }
  const std::vector<C>& coeffs() const noexcept { return c_; }

  BasicSeries truncated(std::size_t order) const {
    if (order > order_) throw StructuralError("cannot raise the order of a truncated series");
    return BasicSeries(order, std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    a.require_same_order(b);
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (std::size_t j = 0; j <= a.order_; ++j) out.push_back(a.c_[j] + b.c_[j]);
    return BasicSeries(a.order_, std::move(out));
  }

  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
    a.require_same_order(b);
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (std::size_t j = 0; j <= a.order_; ++j) out.push_back(a.c_[j] - b.c_[j]);
    return BasicSeries(a.order_, std::move(out));
  }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    a.require_same_order(b);
    std::vector<C> out(a.c_.size(), a.c_[0].zero_like());
    for (std::size_t i = 0; i <= a.order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= a.order_; ++j) {
        if (b.c_[j].is_zero()) continue;
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return BasicSeries(a.order_, std::move(out));
  }

  friend BasicSeries operator*(const BasicSeries& a, const Rational& q) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(c * q);
    return BasicSeries(a.order_, std::move(out));
  }

  /// Multiplies every coefficient by the ring element `c`.
  BasicSeries scaled(const C& c) const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x * c);
    return BasicSeries(order_, std::move(out));
  }

  BasicSeries pow(unsigned k) const {
    BasicSeries result = constant(order_, c_[0].one_like());
    BasicSeries base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Multiplicative inverse; the constant term must be exactly 1.
  BasicSeries inverse() const {
    if (!c_[0].is_one()) throw DomainError("series inverse needs constant term 1");
    std::vector<C> v;
    v.reserve(c_.size());
    v.push_back(c_[0].one_like());
    for (std::size_t n = 1; n <= order_; ++n) {
      C acc = c_[0].zero_like();
      for (std::size_t k = 1; k <= n; ++k) {
        if (!c_[k].is_zero()) acc = acc + c_[k] * v[n - k];
      }
      v.push_back(acc * Rational(-1));
    }
    return BasicSeries(order_, std::move(v));
  }

  /// Formal antiderivative with zero constant term; the result has order + 1.
  BasicSeries integrate() const {
    std::vector<C> out;
    out.reserve(c_.size() + 1);
    out.push_back(c_[0].zero_like());
    for (std::size_t j = 0; j <= order_; ++j) {
      out.push_back(c_[j] * Rational(1, static_cast<long>(j + 1)));
    }
    return BasicSeries(order_ + 1, std::move(out));
  }

  /// Formal derivative d/dt; the result has order - 1 (order 0 stays 0).
  BasicSeries differentiate() const {
    if (order_ == 0) return constant(0, c_[0].zero_like());
    std::vector<C> out;
    out.reserve(order_);
    for (std::size_t j = 1; j <= order_; ++j) out.push_back(c_[j] * Rational(static_cast<long>(j)));
    return BasicSeries(order_ - 1, std::move(out));
  }

  /// exp(s) for s with zero constant term, via n·e_n = Σ_{k=1}^{n} k·s_k·e_{n-k}.
  BasicSeries exp() const {
    if (!c_[0].is_zero()) throw DomainError("series exp needs constant term 0");
    std::vector<C> e;
    e.reserve(c_.size());
    e.push_back(c_[0].one_like());
    for (std::size_t n = 1; n <= order_; ++n) {
      C acc = c_[0].zero_like();
      for (std::size_t k = 1; k <= n; ++k) {
        if (c_[k].is_zero()) continue;
        acc = acc + (c_[k] * e[n - k]) * Rational(static_cast<long>(k));
      }
      e.push_back(acc * Rational(1, static_cast<long>(n)));
    }
    return BasicSeries(order_, std::move(e));
  }

  /// log(s) for s with constant term 1, via n·l_n = n·s_n − Σ_{k=1}^{n-1} k·l_k·s_{n-k}.
  BasicSeries log() const {
    if (!c_[0].is_one()) throw DomainError("series log needs constant term 1");
    std::vector<C> l;
    l.reserve(c_.size());
    l.push_back(c_[0].zero_like());
    for (std::size_t n = 1; n <= order_; ++n) {
      C acc = c_[n] * Rational(static_cast<long>(n));
      for (std::size_t k = 1; k < n; ++k) {
        if (l[k].is_zero() || c_[n - k].is_zero()) continue;
        acc = acc - (l[k] * c_[n - k]) * Rational(static_cast<long>(k));
      }
      l.push_back(acc * Rational(1, static_cast<long>(n)));
    }
    return BasicSeries(order_, std::move(l));
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  void require_same_order(const BasicSeries& o) const {
    if (order_ != o.order_) {
      throw StructuralError("series orders differ: " + std::to_string(order_) + " vs " +
                            std::to_string(o.order_));
    }
  }

  std::size_t order_;
  std::vector<C> c_;
};

/// Truncated power series with GradedPolynomial coefficients.
using TruncatedSeries = BasicSeries<GradedPolynomial>;

/// 1 + x_1 t + ... + x_k t^k truncated at `order`, from the coefficient list {x_1..x_k}.
TruncatedSeries unit_series(std::size_t order, const RingPtr& ring,
                            std::span<const GradedPolynomial> tail);

/// True when the coefficient of t^j is weighted-homogeneous of degree j + shift for all j.
bool is_graded(const TruncatedSeries& s, int shift = 0);

}  // namespace chowbundle
