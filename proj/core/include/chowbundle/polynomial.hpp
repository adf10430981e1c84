#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowbundle/rational.hpp"
#include "chowbundle/ring.hpp"

namespace chowbundle {

/// Sparse polynomial with exact rational coefficients over a weighted RingSpec.
///
/// Terms are kept in the canonical monomial order and never carry a zero
/// coefficient, so structural equality is mathematical equality.
class GradedPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

  explicit GradedPolynomial(RingPtr ring);

  static GradedPolynomial zero(RingPtr ring) { return GradedPolynomial(std::move(ring)); }
  static GradedPolynomial constant(RingPtr ring, const Rational& c);
  static GradedPolynomial variable(RingPtr ring, std::string_view name);
  static GradedPolynomial variable(RingPtr ring, std::size_t index);
  static GradedPolynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Adds c·m in place; terms that cancel are erased.
  void add_term(const Monomial& m, const Rational& c);

  /// Ring elements of the same ring with value 0 / 1 (used by generic series code).
  GradedPolynomial zero_like() const { return GradedPolynomial(ring_); }
  GradedPolynomial one_like() const { return constant(ring_, 1); }

  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const Rational& c);

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { return a *= c; }
  friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { return a *= c; }
  GradedPolynomial operator-() const;

  GradedPolynomial pow(unsigned k) const;

  /// True for the zero polynomial and for polynomials whose terms all have weighted degree `degree`.
  bool is_homogeneous(unsigned degree) const;
  GradedPolynomial homogeneous_part(unsigned degree) const;

  GradedPolynomial derivative(std::size_t index) const;
  GradedPolynomial derivative(std::string_view name) const;

  /// Ring homomorphism into `target` sending variable i to images[i].
  GradedPolynomial substitute(const RingPtr& target, std::span<const GradedPolynomial> images) const;

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws StructuralError if a variable that occurs is absent from `target`.
  GradedPolynomial embed(const RingPtr& target) const;

  /// Exact evaluation; every variable occurring in the polynomial must be assigned.
  Rational specialize(const std::map<std::string, Rational, std::less<>>& assignment) const;

  std::string str() const;

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);

 private:
  void require_same_ring(const GradedPolynomial& o) const;

  RingPtr ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedPolynomial& p);

/// Formats a monomial like "a1^2*a2'"; "1" for the unit monomial.
std::string monomial_str(const RingSpec& ring, const Monomial& m);

}  // namespace chowbundle
