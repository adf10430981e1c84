#include "chowbundle/series.hpp"

namespace chowbundle {

TruncatedSeries unit_series(std::size_t order, const RingPtr& ring,
                            std::span<const GradedPolynomial> tail) {
  std::vector<GradedPolynomial> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(GradedPolynomial::constant(ring, 1));
  for (std::size_t j = 1; j <= order; ++j) {
    coeffs.push_back(j <= tail.size() ? tail[j - 1].embed(ring) : GradedPolynomial::zero(ring));
  }
  return TruncatedSeries(order, std::move(coeffs));
}

bool is_graded(const TruncatedSeries& s, int shift) {
  for (std::size_t j = 0; j <= s.order(); ++j) {
    const long degree = static_cast<long>(j) + shift;
    if (s[j].is_zero()) continue;
    if (degree < 0 || !s[j].is_homogeneous(static_cast<unsigned>(degree))) return false;
  }
  return true;
}

}  // namespace chowbundle
