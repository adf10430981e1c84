#include "chowbundle/fibered.hpp"

#include "chowbundle/errors.hpp"

namespace chowbundle {

namespace {

bool mentions(const GradedPolynomial& p, std::size_t index) {
  for (const auto& [m, c] : p.terms()) {
    if (m[index] != 0) return true;
  }
  return false;
}

void require_compatible(const FiberedClass& a, const FiberedClass& b) {
  if (a.mod_w() != b.mod_w()) throw StructuralError("mixing mod-w and full fibered classes");
}

}  // namespace

FiberedClass::FiberedClass(GradedPolynomial base, GradedPolynomial fiber, bool mod_w)
    : base_(std::move(base)), fiber_(std::move(fiber)), mod_w_(mod_w) {
  if (!same_ring(base_.ring(), fiber_.ring())) {
    throw StructuralError("fibered class parts belong to different rings");
  }
  const auto& ring = *base_.ring();
  const auto w1 = ring.find("w1");
  const auto w2 = ring.find("w2");
  if (!mod_w_ && (!w1 || !w2)) {
    throw StructuralError("the full relation z^2 + w1 z + w2 needs w1 and w2 in the ring");
  }
  if (mod_w_) {
    for (auto w : {w1, w2}) {
      if (w && (mentions(base_, *w) || mentions(fiber_, *w))) {
        throw StructuralError("mod-w fibered class may not involve w1 or w2");
      }
    }
  }
}

FiberedClass FiberedClass::from_base(GradedPolynomial base, bool mod_w) {
  GradedPolynomial zero = base.zero_like();
  return FiberedClass(std::move(base), std::move(zero), mod_w);
}

FiberedClass FiberedClass::z(const RingPtr& ring, bool mod_w) {
  return FiberedClass(GradedPolynomial::zero(ring), GradedPolynomial::constant(ring, 1), mod_w);
}

FiberedClass FiberedClass::zero_like() const {
  return FiberedClass(Trusted{}, base_.zero_like(), base_.zero_like(), mod_w_);
}

FiberedClass FiberedClass::one_like() const {
  return FiberedClass(Trusted{}, base_.one_like(), base_.zero_like(), mod_w_);
}

bool FiberedClass::is_homogeneous(unsigned degree) const {
  if (!base_.is_homogeneous(degree)) return false;
  if (fiber_.is_zero()) return true;
  return degree >= 1 && fiber_.is_homogeneous(degree - 1);
}

FiberedClass operator+(const FiberedClass& a, const FiberedClass& b) {
  require_compatible(a, b);
  return FiberedClass(FiberedClass::Trusted{}, a.base_ + b.base_, a.fiber_ + b.fiber_, a.mod_w_);
}

FiberedClass operator-(const FiberedClass& a, const FiberedClass& b) {
  require_compatible(a, b);
  return FiberedClass(FiberedClass::Trusted{}, a.base_ - b.base_, a.fiber_ - b.fiber_, a.mod_w_);
}

FiberedClass operator*(const FiberedClass& a, const FiberedClass& b) {
  require_compatible(a, b);
  GradedPolynomial base = a.base_ * b.base_;
  GradedPolynomial fiber = a.base_ * b.fiber_ + a.fiber_ * b.base_;
  if (!a.mod_w_ && !a.fiber_.is_zero() && !b.fiber_.is_zero()) {
    // z² = −w1·z − w2
    const GradedPolynomial zz = a.fiber_ * b.fiber_;
    const RingPtr& ring = a.ring();
    base -= zz * GradedPolynomial::variable(ring, "w2");
    fiber -= zz * GradedPolynomial::variable(ring, "w1");
  }
  return FiberedClass(FiberedClass::Trusted{}, std::move(base), std::move(fiber), a.mod_w_);
}

FiberedClass operator*(const FiberedClass& a, const Rational& q) {
  return FiberedClass(FiberedClass::Trusted{}, a.base_ * q, a.fiber_ * q, a.mod_w_);
}

}  // namespace chowbundle
