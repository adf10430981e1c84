#include <gtest/gtest.h>

#include "chowbundle/errors.hpp"
#include "chowbundle/strata.hpp"
#include "oracles.hpp"

using namespace chowbundle;

namespace {

std::vector<std::vector<long>> values(const std::vector<SplittingType>& types) {
  std::vector<std::vector<long>> out;
  for (const auto& t : types) out.push_back(t.values());
  return out;
}

}  // namespace

TEST(SplittingType, Validation) {
  EXPECT_THROW(SplittingType({1, 0}), DomainError);
  EXPECT_THROW(SplittingType({}), DomainError);
  const SplittingType e({-1, -1, 0, 2, 2, 2});
  EXPECT_EQ(e.degree(), 4);
  EXPECT_EQ(e.multiplicities(), (std::vector<unsigned>{2, 1, 3}));
}

TEST(UInvariant, Examples) {
  EXPECT_EQ(u_invariant(SplittingType({0, 0})), 0u);
  EXPECT_EQ(u_invariant(SplittingType({-1, 1})), 1u);
  EXPECT_EQ(u_invariant(SplittingType({-2, 2})), 3u);
  EXPECT_EQ(u_invariant(SplittingType({0, 0, 1})), 0u);
}

TEST(UInvariant, ShiftInvariantAndBalancedIffZero) {
  for (const auto& e : chowbundle::testing::brute_force_types(3, 1, 20, 8)) {
    std::vector<long> shifted = e;
    for (auto& x : shifted) x += 5;
    const SplittingType t(e);
    EXPECT_EQ(u_invariant(t), u_invariant(SplittingType(shifted)));
    const bool balanced = e.back() - e.front() <= 1;
    EXPECT_EQ(u_invariant(t) == 0, balanced);
  }
  for (unsigned r = 1; r <= 5; ++r) {
    for (long ell = -4; ell <= 6; ++ell) EXPECT_EQ(enumerate_types(r, ell, 0).size(), 1u);
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(values(enumerate_types(2, 0, 2)), (std::vector<std::vector<long>>{{-1, 1}, {0, 0}}));
  EXPECT_EQ(values(enumerate_types(2, 1, 0)), (std::vector<std::vector<long>>{{0, 1}}));
  EXPECT_EQ(values(enumerate_types(3, 0, 1)), (std::vector<std::vector<long>>{{-1, 0, 1}, {0, 0, 0}}));
  EXPECT_THROW(enumerate_types(0, 0, 1), DomainError);
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (long ell = -3; ell <= 4; ++ell) {
      for (std::uint64_t u = 0; u <= 6; ++u) {
        EXPECT_EQ(values(enumerate_types(r, ell, u)), chowbundle::testing::brute_force_types(r, ell, u, 12))
            << "r=" << r << " ell=" << ell << " u=" << u;
      }
    }
  }
}

TEST(Hilbert, StratumExamples) {
  EXPECT_EQ(stratum_hilbert(SplittingType({0, 0}), 4, true), (IntSeries{1, 1, 2, 2, 3}));
  EXPECT_EQ(stratum_hilbert(SplittingType({-1, 1}), 4, true), (IntSeries{1, 2, 3, 4, 5}));
  EXPECT_EQ(stratum_hilbert(SplittingType({0, 0}), 4, false), (IntSeries{1, 2, 5, 8, 14}));
}

TEST(Hilbert, AmbientExamples) {
  EXPECT_EQ(ambient_hilbert(2, 3, false)[3], 16);
  EXPECT_EQ(ambient_hilbert(1, 5, true), (IntSeries{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(ambient_hilbert(2, 2, true), (IntSeries{1, 2, 4}));
  EXPECT_THROW(free_algebra_hilbert({1, 0}, 3), DomainError);
}

TEST(RankIdentity, Examples) {
  EXPECT_TRUE(rank_identity_check(2, 0, 10, false).ok);
  EXPECT_TRUE(rank_identity_check(2, 1, 10, true).ok);
  EXPECT_TRUE(rank_identity_check(3, 2, 8, false).ok);
}

TEST(RankIdentity, AllSmallCases) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (long ell = -2; ell < static_cast<long>(r) + 2; ++ell) {
      for (bool dagger : {true, false}) {
        const auto report = rank_identity_check(r, ell, 10, dagger);
        EXPECT_TRUE(report.ok) << "r=" << r << " ell=" << ell << " dagger=" << dagger;
        EXPECT_FALSE(report.first_failing_degree.has_value());
        EXPECT_EQ(report.degrees.size(), 11u);
      }
    }
  }
}

TEST(RankIdentity, ReportShape) {
  const auto report = rank_identity_check(2, 0, 3, true);
  const auto j = to_json(report);
  EXPECT_EQ(j["degrees"].size(), 4u);
  EXPECT_EQ(j["degrees"][1]["ambient"], 2);
  EXPECT_EQ(j["degrees"][1]["strata_sum"], 2);
  // (0,0) contributes 1 in degree 1; (−1,1) has u = 1 and contributes its degree-0 rank.
  ASSERT_EQ(j["degrees"][1]["per_stratum"].size(), 2u);
  EXPECT_TRUE(j["first_failing_degree"].is_null());
}

TEST(Codimension, Examples) {
  const auto a = complement_codim_check(2, 0, 0);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.witness->values(), (std::vector<long>{-1, 1}));
  const auto b = complement_codim_check(2, 1, 0);
  EXPECT_TRUE(b.ok);
  EXPECT_EQ(*b.minimum, 2u);
  const auto c = complement_codim_check(3, 0, 1);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.expected, 4u);
}

TEST(Codimension, SmallCasesAndEmptyComplement) {
  for (unsigned r = 2; r <= 4; ++r) {
    for (long ell = 0; ell < static_cast<long>(r); ++ell) {
      for (unsigned m = 0; m <= 3; ++m) {
        const auto report = complement_codim_check(r, ell, m);
        EXPECT_TRUE(report.ok) << "r=" << r << " ell=" << ell << " m=" << m;
        EXPECT_FALSE(report.complement_empty);
      }
    }
  }
  const auto line = complement_codim_check(1, 0, 2);
  EXPECT_TRUE(line.complement_empty);
  EXPECT_FALSE(line.minimum.has_value());
  EXPECT_TRUE(line.ok);
  EXPECT_THROW(complement_codim_check(2, -5, 0), DomainError);
}
