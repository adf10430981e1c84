#include <gtest/gtest.h>

#include <random>

#include "chowbundle/errors.hpp"
#include "chowbundle/polynomial.hpp"
#include "chowbundle/rational.hpp"
#include "chowbundle/ring.hpp"
#include "chowbundle/serialize.hpp"
#include "chowbundle/series.hpp"
#include "oracles.hpp"

using namespace chowbundle;
using chowbundle::testing::random_homogeneous;
using chowbundle::testing::random_polynomial;
using chowbundle::testing::random_rational;

namespace {

const RingPtr& R2() {
  static const RingPtr ring = dagger_ring(2);
  return ring;
}
GradedPolynomial a1() { return GradedPolynomial::variable(R2(), "a1"); }
GradedPolynomial a2() { return GradedPolynomial::variable(R2(), "a2"); }
GradedPolynomial b2() { return GradedPolynomial::variable(R2(), "a2'"); }
GradedPolynomial k(long n, long d = 1) { return GradedPolynomial::constant(R2(), Rational(mpz_class(n), mpz_class(d))); }

TruncatedSeries series(std::vector<GradedPolynomial> c) {
  const std::size_t n = c.size() - 1;
  return TruncatedSeries(n, std::move(c));
}

}  // namespace

TEST(Rational, NormalizesSignAndLowestTerms) {
  const Rational q(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_EQ(Rational::parse("10", "4"), Rational(mpz_class(5), mpz_class(2)));
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DomainError);
  EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Rational, FactorialAndOrdering) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(11), 39916800);
  EXPECT_LT(Rational(-1), Rational(mpz_class(1), mpz_class(3)));
}

TEST(RingSpec, RejectsDuplicateNamesAndZeroWeights) {
  EXPECT_THROW(make_ring({{"x", 1}, {"x", 2}}), StructuralError);
  EXPECT_THROW(make_ring({{"x", 0}}), StructuralError);
}

TEST(RingSpec, StandardRings) {
  const auto base = base_ring(3);
  EXPECT_EQ(base->size(), 2u + 3u + 2u);
  EXPECT_EQ(base->weight(base->index_of("w2")), 2u);
  EXPECT_EQ(base->weight(base->index_of("a3'")), 2u);
  EXPECT_FALSE(dagger_ring(3)->find("w1").has_value());
  EXPECT_FALSE(dagger_ring(1)->find("a1'").has_value());
}

TEST(Polynomial, DifferenceOfSquares) {
  EXPECT_EQ((a1() + b2()) * (a1() - b2()), a1() * a1() - b2() * b2());
}

TEST(Polynomial, ZeroAnnihilates) {
  const auto p = a1() * a2() + k(3) * b2();
  EXPECT_TRUE((p * GradedPolynomial::zero(R2())).is_zero());
  EXPECT_EQ((p - p).terms().size(), 0u);
}

TEST(Polynomial, RationalNormalization) {
  EXPECT_EQ(a1() * Rational(mpz_class(1), mpz_class(2)) + a1() * Rational(mpz_class(1), mpz_class(2)), a1());
}

TEST(Polynomial, MismatchedRingsThrow) {
  const auto other = GradedPolynomial::variable(dagger_ring(3), "a1");
  EXPECT_THROW(a1() + other, StructuralError);
  EXPECT_THROW(a1() * other, StructuralError);
  EXPECT_THROW(GradedPolynomial::variable(R2(), "a7"), StructuralError);
}

TEST(Polynomial, CanonicalOrderInOutput) {
  EXPECT_EQ(((a1() + b2()).pow(2) + a2()).str(), "a1^2 + 2*a1*a2' + a2 + a2'^2");
  EXPECT_EQ((k(1) + a2() + a1()).str(), "1 + a1 + a2");
  EXPECT_EQ((a1() * Rational(-1) + k(1, 2)).str(), "1/2 - a1");
}

TEST(Polynomial, HomogeneityAndParts) {
  const auto p = a1() * a1() + a2() + a1();
  EXPECT_FALSE(p.is_homogeneous(2));
  EXPECT_EQ(p.homogeneous_part(2), a1() * a1() + a2());
  EXPECT_TRUE(GradedPolynomial::zero(R2()).is_homogeneous(7));
}

TEST(Polynomial, DerivativeAndSubstitute) {
  const auto p = a1().pow(3) * b2() + a2();
  EXPECT_EQ(p.derivative("a1"), k(3) * a1() * a1() * b2());
  std::vector<GradedPolynomial> images{a1() + k(1), a2(), b2() * Rational(2)};
  EXPECT_EQ(p.substitute(R2(), images), (a1() + k(1)).pow(3) * b2() * Rational(2) + a2());
}

TEST(Polynomial, EmbedByName) {
  const auto base = base_ring(2);
  const auto q = (a1() * b2()).embed(base);
  EXPECT_EQ(q, GradedPolynomial::variable(base, "a1") * GradedPolynomial::variable(base, "a2'"));
  EXPECT_THROW(GradedPolynomial::variable(base, "w1").embed(R2()), StructuralError);
}

TEST(Specialize, Examples) {
  EXPECT_EQ((a1() * a1() - b2() * b2()).specialize({{"a1", 3}, {"a2'", 1}, {"a2", 0}}), Rational(8));
  EXPECT_EQ(GradedPolynomial::zero(R2()).specialize({}), Rational(0));
  const auto f2 = (a1() * b2() + b2() * b2()) * Rational(mpz_class(1), mpz_class(2));
  EXPECT_EQ(f2.specialize({{"a1", 1}, {"a2'", 2}}), Rational(3));
}

TEST(Specialize, MissingVariableThrows) {
  EXPECT_THROW((a1() * a2()).specialize({{"a1", 1}}), StructuralError);
  EXPECT_THROW(a1().specialize({{"a1", 1}, {"zz", 2}}), StructuralError);
}

TEST(PolynomialProperty, RingAxiomsRandomized) {
  std::mt19937_64 rng(20261015);
  const RingPtr ring = base_ring(2);
  for (int n = 0; n < 1000; ++n) {
    const auto p = random_polynomial(ring, rng);
    const auto q = random_polynomial(ring, rng);
    const auto s = random_polynomial(ring, rng);
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p + q) + s, p + (q + s));
    ASSERT_EQ((p * q) * s, p * (q * s));
    ASSERT_EQ(p * (q + s), p * q + p * s);
    ASSERT_EQ(p - p, GradedPolynomial::zero(ring));
  }
}

TEST(PolynomialProperty, SpecializeIsHomomorphism) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 300; ++n) {
    const auto p = random_polynomial(R2(), rng);
    const auto q = random_polynomial(R2(), rng);
    std::map<std::string, Rational, std::less<>> at{
        {"a1", random_rational(rng)}, {"a2", random_rational(rng)}, {"a2'", random_rational(rng)}};
    ASSERT_EQ((p * q).specialize(at), p.specialize(at) * q.specialize(at));
    ASSERT_EQ((p + q).specialize(at), p.specialize(at) + q.specialize(at));
  }
}

TEST(Series, ProductExamples) {
  const auto t = a1().one_like();
  EXPECT_EQ(series({k(1), k(1)}) * series({k(1), k(-1)}), series({k(1), k(0)}));
  const auto lhs = series({k(1), a1(), k(0)}) * series({k(1), b2(), k(0)});
  EXPECT_EQ(lhs, series({k(1), a1() + b2(), a1() * b2()}));
  const auto s = series({k(1), a1(), a2() + b2() * b2()});
  EXPECT_EQ(s * TruncatedSeries::constant(2, t), s);
}

TEST(Series, OrderMismatchThrows) {
  EXPECT_THROW(series({k(1), k(1)}) + series({k(1), k(1), k(0)}), StructuralError);
  EXPECT_THROW(series({k(1), k(1)}) * series({k(1), k(1), k(0)}), StructuralError);
  EXPECT_THROW(TruncatedSeries(3, {k(1)}), StructuralError);
}

TEST(Series, InverseExamples) {
  EXPECT_EQ(series({k(1), k(1), k(0), k(0)}).inverse(), series({k(1), k(-1), k(1), k(-1)}));
  EXPECT_EQ(series({k(1)}).inverse(), series({k(1)}));
  const auto s = series({k(1), a1(), a2()});
  EXPECT_EQ(s.inverse(), series({k(1), -a1(), a1() * a1() - a2()}));
  EXPECT_THROW(series({k(2), k(1)}).inverse(), DomainError);
  EXPECT_THROW(series({a1(), k(1)}).inverse(), DomainError);
}

TEST(Series, IntegrateExamples) {
  const auto one = series({k(1)}).integrate();
  EXPECT_EQ(one.order(), 1u);
  EXPECT_EQ(one, series({k(0), k(1)}));
  EXPECT_EQ(series({k(1), k(-1), k(1)}).integrate(), series({k(0), k(1), k(-1, 2), k(1, 3)}));
  EXPECT_EQ(series({a1(), a2() * Rational(2)}).integrate(), series({k(0), a1(), a2()}));
}

TEST(Series, ExpLogExamples) {
  EXPECT_EQ(series({k(0), k(1), k(0), k(0)}).exp(), series({k(1), k(1), k(1, 2), k(1, 6)}));
  for (std::size_t n : {1u, 4u, 9u}) {
    std::vector<GradedPolynomial> c(n + 1, k(0));
    c[0] = k(1);
    c[1] = k(1);
    const TruncatedSeries one_plus_t(n, c);
    const auto back = one_plus_t.truncated(n - 1).inverse().integrate().exp();
    EXPECT_EQ(back, one_plus_t) << "order " << n;
  }
  EXPECT_EQ(series({k(1), a1(), a2()}).log(),
            series({k(0), a1(), a2() - a1() * a1() * Rational(mpz_class(1), mpz_class(2))}));
}

TEST(Series, ExpLogPreconditions) {
  EXPECT_THROW(series({k(1), k(1)}).exp(), DomainError);
  EXPECT_THROW(series({k(2), k(1)}).log(), DomainError);
  EXPECT_THROW(series({k(0), k(1)}).log(), DomainError);
}

TEST(SeriesProperty, RingAxiomsRandomized) {
  std::mt19937_64 rng(99);
  for (int n = 0; n < 1000; ++n) {
    auto rand_series = [&] {
      std::vector<GradedPolynomial> c;
      for (int i = 0; i <= 3; ++i) c.push_back(random_polynomial(R2(), rng, 2, 1));
      return TruncatedSeries(3, std::move(c));
    };
    const auto s = rand_series();
    const auto u = rand_series();
    const auto v = rand_series();
    ASSERT_EQ(s * u, u * s);
    ASSERT_EQ(s + u, u + s);
    ASSERT_EQ((s * u) * v, s * (u * v));
    ASSERT_EQ(s * (u + v), s * u + s * v);
  }
}

TEST(SeriesProperty, ExpLogRoundTrip) {
  std::mt19937_64 rng(12);
  for (std::size_t order = 1; order <= 12; ++order) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<GradedPolynomial> s{k(1)};
      std::vector<GradedPolynomial> u{k(0)};
      for (std::size_t i = 1; i <= order; ++i) {
        s.push_back(random_homogeneous(R2(), static_cast<unsigned>(i), rng, 2));
        u.push_back(random_homogeneous(R2(), static_cast<unsigned>(i), rng, 2));
      }
      const TruncatedSeries S(order, s);
      const TruncatedSeries U(order, u);
      ASSERT_EQ(S.log().exp(), S) << "order " << order;
      ASSERT_EQ(U.exp().log(), U) << "order " << order;
      ASSERT_TRUE(is_graded(S.log()));
      ASSERT_TRUE(is_graded(U.exp()));
    }
  }
}

TEST(SeriesProperty, InverseIsTwoSided) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<GradedPolynomial> c{k(1)};
    for (unsigned i = 1; i <= 6; ++i) c.push_back(random_homogeneous(R2(), i, rng, 2));
    const TruncatedSeries s(6, c);
    const auto one = TruncatedSeries::constant(6, k(1));
    ASSERT_EQ(s * s.inverse(), one);
    ASSERT_EQ(s.inverse() * s, one);
    ASSERT_TRUE(is_graded(s.inverse()));
    ASSERT_TRUE(is_graded(s.pow(3)));
  }
}

TEST(Serialize, PolynomialRoundTrip) {
  const auto p = a1() * b2() * Rational(mpz_class(-3), mpz_class(2)) + k(5) + a2().pow(2);
  const auto j = to_json(p);
  EXPECT_EQ(j.dump(),
            R"([{"d":"1","m":{},"n":"5"},{"d":"2","m":{"a1":1,"a2'":1},"n":"-3"},{"d":"1","m":{"a2":2},"n":"1"}])");
  EXPECT_EQ(polynomial_from_json(R2(), j), p);
}

TEST(Serialize, SeriesRoundTripAndErrors) {
  const auto s = series({k(1), a1(), a2()});
  EXPECT_EQ(series_from_json(R2(), to_json(s)), s);
  EXPECT_THROW(polynomial_from_json(R2(), nlohmann::json::parse(R"([{"m":{"q":1},"n":"1","d":"1"}])")),
               StructuralError);
  EXPECT_THROW(polynomial_from_json(R2(), nlohmann::json::parse(R"({"m":{}})")), StructuralError);
  EXPECT_THROW(series_from_json(R2(), nlohmann::json::parse(R"({"order":2,"coeffs":[[]]})")), StructuralError);
}
