#pragma once

#include <span>
#include <vector>

#include "chowbundle/polynomial.hpp"

namespace chowbundle {

/// Normal-form element Σ γ_{a,b} z^a ζ^b (a <= 1, b <= d−1) of
/// A[z, ζ]/(z² + w1 z + w2, ζ^d + t_1 ζ^{d−1} + ... + t_d), A = relations_ring(r, d).
///
/// z and ζ have weight 1. Every operation returns a reduced element.
class BiProjElement {
 public:
  BiProjElement(unsigned r, unsigned d);  // zero

  static BiProjElement one(unsigned r, unsigned d);
  /// c · z^z_power · ζ^zeta_power, reduced.
  static BiProjElement monomial(unsigned r, unsigned d, unsigned z_power, unsigned zeta_power,
                                const GradedPolynomial& c);

  unsigned r() const noexcept { return r_; }
  unsigned d() const noexcept { return d_; }
  const RingPtr& ring() const noexcept { return ring_; }
  const GradedPolynomial& coefficient(unsigned a, unsigned b) const;

  BiProjElement times_z() const;
  BiProjElement times_zeta() const;

  friend BiProjElement operator+(const BiProjElement& x, const BiProjElement& y);
  friend BiProjElement operator-(const BiProjElement& x, const BiProjElement& y);
  friend BiProjElement operator*(const BiProjElement& x, const BiProjElement& y);
  friend BiProjElement operator*(const BiProjElement& x, const GradedPolynomial& c);

  /// γ_{a,b} homogeneous of degree `degree` − a − b for all (a, b).
  bool is_homogeneous(unsigned degree) const;

  friend bool operator==(const BiProjElement& x, const BiProjElement& y) {
    return x.r_ == y.r_ && x.d_ == y.d_ && x.table_ == y.table_;
  }

 private:
  GradedPolynomial& at(unsigned a, unsigned b) { return table_[a * d_ + b]; }

  unsigned r_;
  unsigned d_;
  RingPtr ring_;
  std::vector<GradedPolynomial> table_;
};

/// One summand c · z^z_power · ζ^zeta_power of an unreduced expression.
struct BiProjTerm {
  unsigned z_power = 0;
  unsigned zeta_power = 0;
  GradedPolynomial coefficient;
};

BiProjElement reduce(unsigned r, unsigned d, std::span<const BiProjTerm> expr);

/// β = Σ_{i=0}^{r+d} (ζ + z)^{r+d−i} u_i with u_0 = 1, reduced.
BiProjElement beta_class(unsigned r, unsigned d);

/// Pushforward along the relative-dimension-d map: the coefficient of z ζ^{d−1}.
GradedPolynomial sigma_pushforward(const BiProjElement& el);

/// σ_*(z ζ^{d−1+i}) by the ordered-partition formula: 0 for i < 0, 1 for i = 0,
/// otherwise Σ (−1)^{Σm} (Σm)!/(m_1!..m_d!) t_1^{m_1}..t_d^{m_d} over Σ k·m_k = i.
/// Over relations_ring(r, d).
GradedPolynomial closed_pushforward(long i, unsigned r, unsigned d);

/// f_{i,j} = σ_*(β · z^i ζ^j) for i in {0, 1}, 0 <= j <= d−1.
GradedPolynomial f_class(unsigned i, unsigned j, unsigned r, unsigned d);

/// Coefficients of the singleton monomials t_n and u_n in a polynomial over relations_ring(r, d).
struct LeadingPart {
  unsigned degree = 0;
  bool has_t = false;  // t_n exists only for n <= d
  Rational t_coefficient;
  Rational u_coefficient;
};

LeadingPart leading_part(const GradedPolynomial& f, unsigned degree);

}  // namespace chowbundle
