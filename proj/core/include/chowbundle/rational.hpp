#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chowbundle {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : q_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Parses decimal numerator and denominator strings.
  static Rational parse(std::string_view num, std::string_view den = "1");

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  Rational abs() const { return Rational(::abs(q_)); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer.
mpz_class factorial(unsigned n);

}  // namespace chowbundle
