#pragma once

#include "chowbundle/polynomial.hpp"

namespace chowbundle {

/// Element base + fiber·z of A[z]/(z² + w1·z + w2), where A is a polynomial
/// ring and z the hyperplane class of a P¹-bundle over it.
///
/// With `mod_w` set, w1 = w2 = 0 and the relation becomes z² = 0; the ring
/// then need not contain w1, w2 at all. Without it, the ring must contain
/// variables named "w1" and "w2".
class FiberedClass {
 public:
  FiberedClass(GradedPolynomial base, GradedPolynomial fiber, bool mod_w);

  static FiberedClass from_base(GradedPolynomial base, bool mod_w);
  static FiberedClass z(const RingPtr& ring, bool mod_w);

  const GradedPolynomial& base() const noexcept { return base_; }
  const GradedPolynomial& fiber() const noexcept { return fiber_; }
  const RingPtr& ring() const noexcept { return base_.ring(); }
  bool mod_w() const noexcept { return mod_w_; }

  /// Pushforward along the P¹-bundle: π_*(p + q·z) = q.
  const GradedPolynomial& pushforward() const noexcept { return fiber_; }

  bool is_zero() const noexcept { return base_.is_zero() && fiber_.is_zero(); }
  bool is_one() const { return base_.is_one() && fiber_.is_zero(); }
  FiberedClass zero_like() const;
  FiberedClass one_like() const;

  /// True when base is homogeneous of `degree` and fiber of `degree - 1` (z has weight 1).
  bool is_homogeneous(unsigned degree) const;

  friend FiberedClass operator+(const FiberedClass& a, const FiberedClass& b);
  friend FiberedClass operator-(const FiberedClass& a, const FiberedClass& b);
  friend FiberedClass operator*(const FiberedClass& a, const FiberedClass& b);
  friend FiberedClass operator*(const FiberedClass& a, const Rational& q);

  friend bool operator==(const FiberedClass&, const FiberedClass&) = default;

 private:
  struct Trusted {};
  FiberedClass(Trusted, GradedPolynomial base, GradedPolynomial fiber, bool mod_w)
      : base_(std::move(base)), fiber_(std::move(fiber)), mod_w_(mod_w) {}

  GradedPolynomial base_;
  GradedPolynomial fiber_;
  bool mod_w_;
};

}  // namespace chowbundle
