#include <gtest/gtest.h>

#include <random>

#include "chowbundle/errors.hpp"
#include "chowbundle/relations.hpp"
#include "oracles.hpp"

using namespace chowbundle;

namespace {

GradedPolynomial var(const RingPtr& ring, const std::string& name) { return GradedPolynomial::variable(ring, name); }
GradedPolynomial one(unsigned r, unsigned d) { return GradedPolynomial::constant(relations_ring(r, d), 1); }

}  // namespace

TEST(Reduce, Relations) {
  const unsigned r = 2, d = 2;
  const RingPtr ring = relations_ring(r, d);
  const auto zz = BiProjElement::monomial(r, d, 2, 0, one(r, d));
  EXPECT_EQ(zz.coefficient(0, 0), -var(ring, "w2"));
  EXPECT_EQ(zz.coefficient(1, 0), -var(ring, "w1"));
  const auto zeta2 = BiProjElement::monomial(r, d, 0, 2, one(r, d));
  EXPECT_EQ(zeta2.coefficient(0, 1), -var(ring, "t1"));
  EXPECT_EQ(zeta2.coefficient(0, 0), -var(ring, "t2"));
  const auto zzeta = BiProjElement::monomial(r, d, 1, 1, one(r, d));
  EXPECT_TRUE(zzeta.coefficient(1, 1).is_one());
  EXPECT_TRUE(zzeta.coefficient(0, 0).is_zero());

  const std::vector<BiProjTerm> expr{{2, 0, one(r, d)}, {0, 2, one(r, d)}};
  EXPECT_EQ(chowbundle::reduce(r, d, expr), zz + zeta2);
  EXPECT_THROW(zz.coefficient(2, 0), StructuralError);
  EXPECT_THROW(BiProjElement(2, 0), DomainError);
}

TEST(Reduce, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(17);
  const unsigned r = 1, d = 3;
  const RingPtr ring = relations_ring(r, d);
  auto rnd = [&] {
    BiProjElement e(r, d);
    for (unsigned a = 0; a <= 1; ++a)
      for (unsigned b = 0; b < d; ++b)
        e = e + BiProjElement::monomial(r, d, a, b, chowbundle::testing::random_polynomial(ring, rng, 2, 1));
    return e;
  };
  for (int n = 0; n < 60; ++n) {
    const auto x = rnd(), y = rnd(), w = rnd();
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x * y) * w, x * (y * w));
    ASSERT_EQ(x * (y + w), x * y + x * w);
  }
}

TEST(Beta, HomogeneousAndSmallestCase) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned d = 1; d <= 3; ++d) EXPECT_TRUE(beta_class(r, d).is_homogeneous(r + d)) << r << "," << d;
  }
  // d = 1: ζ = −t_1, so β = (z − t_1)² + (z − t_1)u_1 + u_2 reduced.
  const RingPtr ring = relations_ring(1, 1);
  const auto t1 = var(ring, "t1"), u1 = var(ring, "u1"), u2 = var(ring, "u2");
  const auto w1 = var(ring, "w1"), w2 = var(ring, "w2");
  const auto beta = beta_class(1, 1);
  EXPECT_EQ(beta.coefficient(1, 0), t1 * Rational(-2) - w1 + u1);
  EXPECT_EQ(beta.coefficient(0, 0), t1 * t1 - w2 - t1 * u1 + u2);
}

TEST(Beta, SpecializationOracle) {
  // Evaluate Σ (ζ + z)^{n−i} u_i at random rationals by expanding binomially, then reduce.
  std::mt19937_64 rng(23);
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned d = 1; r + d <= 6; ++d) {
      const RingPtr ring = relations_ring(r, d);
      std::map<std::string, Rational, std::less<>> at;
      for (const auto& v : ring->variables()) at[v.name] = chowbundle::testing::random_rational(rng);
      std::vector<BiProjTerm> expr;
      const unsigned n = r + d;
      for (unsigned i = 0; i <= n; ++i) {
        const Rational ui = i == 0 ? Rational(1) : at["u" + std::to_string(i)];
        const unsigned k = n - i;
        for (unsigned a = 0; a <= k; ++a) {
          const Rational binom(mpz_class(factorial(k) / (factorial(a) * factorial(k - a))));
          expr.push_back({a, k - a, GradedPolynomial::constant(ring, ui * binom)});
        }
      }
      const auto expected = chowbundle::reduce(r, d, expr);
      const auto beta = beta_class(r, d);
      for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b < d; ++b) {
          auto partial = at;
          for (unsigned i = 1; i <= n; ++i) partial.erase("u" + std::to_string(i));
          ASSERT_EQ(beta.coefficient(a, b).specialize(at), expected.coefficient(a, b).specialize(partial))
              << "r=" << r << " d=" << d << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(SigmaPushforward, Examples) {
  for (unsigned d = 1; d <= 4; ++d) {
    EXPECT_TRUE(sigma_pushforward(BiProjElement::monomial(2, d, 1, d - 1, one(2, d))).is_one());
    EXPECT_TRUE(sigma_pushforward(BiProjElement::monomial(2, d, 0, d - 1, one(2, d))).is_zero());
  }
  for (unsigned d = 2; d <= 4; ++d) EXPECT_TRUE(sigma_pushforward(BiProjElement::monomial(2, d, 1, 0, one(2, d))).is_zero());
}

TEST(SigmaPushforward, Linear) {
  std::mt19937_64 rng(29);
  const unsigned r = 2, d = 3;
  const RingPtr ring = relations_ring(r, d);
  for (int n = 0; n < 30; ++n) {
    const auto c = chowbundle::testing::random_polynomial(ring, rng);
    const auto el = beta_class(r, d).times_zeta();
    ASSERT_EQ(sigma_pushforward(el * c), sigma_pushforward(el) * c);
  }
}

TEST(ClosedPushforward, Examples) {
  const RingPtr ring = relations_ring(1, 3);
  EXPECT_TRUE(closed_pushforward(0, 1, 3).is_one());
  EXPECT_EQ(closed_pushforward(1, 1, 3), -var(ring, "t1"));
  EXPECT_EQ(closed_pushforward(2, 1, 3), var(ring, "t1") * var(ring, "t1") - var(ring, "t2"));
  EXPECT_TRUE(closed_pushforward(-3, 1, 3).is_zero());
}

TEST(ClosedPushforward, MatchesReduction) {
  for (unsigned r = 1; r <= 2; ++r) {
    for (unsigned d = 1; d <= 5; ++d) {
      for (unsigned i = 0; i <= 6; ++i) {
        const auto reduced = sigma_pushforward(BiProjElement::monomial(r, d, 1, d - 1 + i, one(r, d)));
        EXPECT_EQ(closed_pushforward(i, r, d), reduced) << "r=" << r << " d=" << d << " i=" << i;
      }
    }
  }
}

TEST(FClass, DegreesAndLeadingParts) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (unsigned i = 0; i <= 1; ++i) {
        for (unsigned j = 0; j < d; ++j) EXPECT_TRUE(f_class(i, j, r, d).is_homogeneous(r + i + j));
      }
      for (unsigned j = 1; j <= d; ++j) {
        const auto lp = leading_part(f_class(1, j - 1, r, d), j + r);
        EXPECT_EQ(lp.u_coefficient, Rational(1));
        EXPECT_EQ(lp.has_t, j + r <= d);
        if (lp.has_t) {
          EXPECT_EQ(lp.t_coefficient, Rational(-1));
        }
      }
      for (unsigned j = 0; j < d; ++j) {
        const auto lp = leading_part(f_class(0, j, r, d), j + r);
        EXPECT_EQ(lp.u_coefficient, Rational(static_cast<long>(d - j)));
        if (lp.has_t) {
          EXPECT_EQ(lp.t_coefficient, Rational(-static_cast<long>(r + d)));
        }
        // det [[−1, 1], [−(r+d), d−j]] = r + j
        const long det = -static_cast<long>(d - j) + static_cast<long>(r + d);
        EXPECT_NE(det, 0);
      }
    }
  }
  EXPECT_THROW(f_class(2, 0, 2, 2), DomainError);
  EXPECT_THROW(f_class(0, 2, 2, 2), DomainError);
}
