#include "chowbundle/symfunc.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "chowbundle/errors.hpp"

namespace chowbundle {

namespace {

struct PowerSumCache {
  std::mutex mu;
  // Nodes are never erased, so references handed out stay valid.
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<const GradedPolynomial>> table;
};

PowerSumCache& cache() {
  static PowerSumCache c;
  return c;
}

GradedPolynomial compute_power_sum(unsigned j, unsigned r) {
  const RingPtr ring = symmetric_ring(r);
  std::vector<GradedPolynomial> p{GradedPolynomial::zero(ring)};
  for (unsigned n = 1; n <= j; ++n) {
    GradedPolynomial acc(ring);
    if (n <= r) {
      acc = GradedPolynomial::variable(ring, n - 1) * Rational(n % 2 == 1 ? long(n) : -long(n));
    }
    for (unsigned i = 1; i < n && i <= r; ++i) {
      GradedPolynomial term = GradedPolynomial::variable(ring, i - 1) * p[n - i];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    p.push_back(std::move(acc));
  }
  return p[j];
}

}  // namespace

const GradedPolynomial& power_sum_poly(unsigned j, unsigned r) {
  if (j == 0 || r == 0) throw DomainError("power_sum_poly needs j >= 1 and r >= 1");
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    auto it = c.table.find({j, r});
    if (it != c.table.end()) return *it->second;
  }
  auto computed = std::make_unique<const GradedPolynomial>(compute_power_sum(j, r));
  std::lock_guard lock(c.mu);
  // A concurrent writer may have won; both computed the same value.
  auto [it, inserted] = c.table.try_emplace({j, r}, std::move(computed));
  return *it->second;
}

GradedPolynomial power_sum_partial(unsigned j, unsigned i, unsigned r) {
  if (i == 0 || i > r) throw DomainError("power_sum_partial needs 1 <= i <= r");
  return power_sum_poly(j, r).derivative(i - 1);
}

std::vector<GradedPolynomial> chern_to_char(const TruncatedSeries& total_chern) {
  return chern_to_char<GradedPolynomial>(total_chern);
}

TruncatedSeries char_to_chern(const RingPtr& ring, std::span<const GradedPolynomial> ch,
                              std::size_t order) {
  return char_to_chern<GradedPolynomial>(ch, order, GradedPolynomial::zero(ring));
}

}  // namespace chowbundle
