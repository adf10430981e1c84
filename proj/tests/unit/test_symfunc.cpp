#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "chowbundle/errors.hpp"
#include "chowbundle/symfunc.hpp"
#include "oracles.hpp"

using namespace chowbundle;
namespace t = chowbundle::testing;

namespace {

GradedPolynomial x(unsigned r, unsigned i) { return GradedPolynomial::variable(symmetric_ring(r), "x" + std::to_string(i)); }
GradedPolynomial num(const RingPtr& ring, long n, long d = 1) {
  return GradedPolynomial::constant(ring, Rational(mpz_class(n), mpz_class(d)));
}

/// 1 + x_1 t + ... + x_r t^r at order n.
TruncatedSeries elementary_series(unsigned r, std::size_t n) {
  const RingPtr ring = symmetric_ring(r);
  std::vector<GradedPolynomial> c{num(ring, 1)};
  for (std::size_t i = 1; i <= n; ++i) c.push_back(i <= r ? x(r, static_cast<unsigned>(i)) : num(ring, 0));
  return TruncatedSeries(n, std::move(c));
}

}  // namespace

TEST(PowerSum, SmallExamples) {
  EXPECT_EQ(power_sum_poly(1, 3), x(3, 1));
  EXPECT_EQ(power_sum_poly(2, 2), x(2, 1).pow(2) - x(2, 2) * Rational(2));
  EXPECT_EQ(power_sum_poly(3, 3), x(3, 1).pow(3) - x(3, 1) * x(3, 2) * Rational(3) + x(3, 3) * Rational(3));
  EXPECT_THROW(power_sum_poly(0, 2), DomainError);
  EXPECT_THROW(power_sum_poly(2, 0), DomainError);
}

TEST(PowerSum, PartialExamples) {
  EXPECT_EQ(power_sum_partial(2, 1, 2), x(2, 1) * Rational(2));
  EXPECT_EQ(power_sum_partial(2, 2, 2), num(symmetric_ring(2), -2));
  EXPECT_TRUE(power_sum_partial(1, 2, 2).is_zero());
  EXPECT_THROW(power_sum_partial(2, 3, 2), DomainError);
}

TEST(PowerSum, FormalRootOracle) {
  for (unsigned r = 1; r <= 4; ++r) {
    const auto e = t::elementary_in_roots(r);
    const std::vector<GradedPolynomial> images(e.begin() + 1, e.end());
    for (unsigned j = 1; j <= 8; ++j) {
      EXPECT_EQ(power_sum_poly(j, r).substitute(t::root_ring(r), images), t::power_sum_in_roots(j, r))
          << "r=" << r << " j=" << j;
    }
  }
}

TEST(PowerSum, LogIdentity) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto log_c = elementary_series(r, n).log();
      const RingPtr ring = symmetric_ring(r);
      for (std::size_t j = 1; j <= n; ++j) {
        Rational w(mpz_class(1), mpz_class(static_cast<unsigned long>(j)));
        if (j % 2 == 0) w = -w;
        ASSERT_EQ(log_c[j], power_sum_poly(static_cast<unsigned>(j), r) * w) << "r=" << r << " j=" << j;
      }
    }
  }
}

TEST(PowerSum, PartialMatchesDerivativeOfLog) {
  // ∂/∂x_i log c(t) = t^i / c(t)
  for (unsigned r = 1; r <= 4; ++r) {
    const std::size_t n = 9;
    const auto inv = elementary_series(r, n).inverse();
    for (unsigned i = 1; i <= r; ++i) {
      for (unsigned j = 1; j <= n; ++j) {
        const GradedPolynomial lhs = j >= i ? inv[j - i] : num(symmetric_ring(r), 0);
        Rational w(mpz_class(1), mpz_class(j));
        if (j % 2 == 0) w = -w;
        ASSERT_EQ(lhs, power_sum_partial(j, i, r) * w) << "r=" << r << " i=" << i << " j=" << j;
        ASSERT_EQ(power_sum_partial(j, i, r), power_sum_poly(j, r).derivative(i - 1));
      }
    }
  }
}

TEST(PowerSum, ConcurrentMemoization) {
  std::vector<std::thread> threads;
  std::vector<std::string> out(4);
  for (int k = 0; k < 4; ++k) {
    threads.emplace_back([&out, k] { out[static_cast<std::size_t>(k)] = power_sum_poly(14, 5).str(); });
  }
  for (auto& th : threads) th.join();
  for (const auto& s : out) EXPECT_EQ(s, out.front());
}

TEST(ChernCharacter, LineBundle) {
  const RingPtr ring = dagger_ring(1);
  const auto c1 = GradedPolynomial::variable(ring, "a1");
  const TruncatedSeries c(5, {num(ring, 1), c1, num(ring, 0), num(ring, 0), num(ring, 0), num(ring, 0)});
  const auto ch = chern_to_char(c);
  ASSERT_EQ(ch.size(), 5u);
  for (unsigned j = 1; j <= 5; ++j) EXPECT_EQ(ch[j - 1], c1.pow(j) * Rational(mpz_class(1), factorial(j)));
  EXPECT_EQ(char_to_chern(ring, ch, 5), c);
}

TEST(ChernCharacter, TrivialAndRankTwo) {
  const RingPtr ring = dagger_ring(2);
  const auto one = TruncatedSeries::constant(4, num(ring, 1));
  for (const auto& p : chern_to_char(one)) EXPECT_TRUE(p.is_zero());
  const std::vector<GradedPolynomial> zeros(4, num(ring, 0));
  EXPECT_EQ(char_to_chern(ring, zeros, 4), one);

  const auto a1 = GradedPolynomial::variable(ring, "a1");
  const auto a2 = GradedPolynomial::variable(ring, "a2");
  const TruncatedSeries c(3, {num(ring, 1), a1, a2, num(ring, 0)});
  const auto ch = chern_to_char(c);
  EXPECT_EQ(ch[1], (a1 * a1 - a2 * Rational(2)) * Rational(mpz_class(1), mpz_class(2)));
  EXPECT_EQ(char_to_chern(ring, ch, 3), c);
}

TEST(ChernCharacter, Errors) {
  const RingPtr ring = dagger_ring(2);
  EXPECT_THROW(chern_to_char(TruncatedSeries::constant(2, num(ring, 2))), DomainError);
  const std::vector<GradedPolynomial> short_ch(1, num(ring, 0));
  EXPECT_THROW(char_to_chern(ring, short_ch, 3), StructuralError);
}

TEST(ChernCharacter, RoundTripRandomized) {
  std::mt19937_64 rng(41);
  const RingPtr ring = base_ring(3);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<GradedPolynomial> c{num(ring, 1)};
      std::vector<GradedPolynomial> ch;
      for (std::size_t i = 1; i <= n; ++i) {
        c.push_back(t::random_homogeneous(ring, static_cast<unsigned>(i), rng, 2));
        ch.push_back(t::random_homogeneous(ring, static_cast<unsigned>(i), rng, 2));
      }
      const TruncatedSeries C(n, c);
      ASSERT_EQ(char_to_chern(ring, chern_to_char(C), n), C);
      ASSERT_EQ(chern_to_char(char_to_chern(ring, ch, n)), ch);
      // independent Newton inversion
      ASSERT_EQ(t::chern_from_character(ring, ch, n), char_to_chern(ring, ch, n));
    }
  }
}
