#include "genbell/moment_analysis.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace {

using namespace genbell;
namespace ma = genbell::moment_analysis;

TEST(Bareiss, MatchesLeibnizOnRandomMatrices) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng) * (trial % 3 == 0 ? 0 : 1) + (trial % 3 == 0 ? entry(rng) % 2 : 0);
    EXPECT_EQ(ma::bareiss_determinant(m), oracles::leibniz_determinant(m)) << "trial " << trial;
  }
}

TEST(Bareiss, SingularAndPivoting) {
  EXPECT_EQ(ma::bareiss_determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(ma::bareiss_determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(ma::bareiss_determinant({}), 1);
  EXPECT_THROW(ma::bareiss_determinant({{1, 2}}), Error);
}

TEST(Hankel, SmallExamples) {
  const auto classical = normal_order::bell_sequence(FamilyParams(1, 1), 4);
  EXPECT_EQ(ma::hankel_determinants(classical, 2).det0, 1);
  const auto lah = normal_order::bell_sequence(FamilyParams(2, 1), 4);
  EXPECT_EQ(ma::hankel_determinants(lah, 2).det0, 2);
  for (unsigned r = 1; r <= 3; ++r) {
    const auto seq = normal_order::bell_sequence(FamilyParams(r, 1), 2);
    const auto h = ma::hankel_determinants(seq, 1);
    EXPECT_EQ(h.det0, 1);
    EXPECT_EQ(h.det1, 1);
  }
}

TEST(Hankel, InsufficientSequence) {
  const auto seq = normal_order::bell_sequence(FamilyParams(2, 1), 4);  // 5 entries
  try {
    ma::hankel_determinants(seq, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientSequence);
  }
}

TEST(Hankel, PositiveForAllSmallFamilies) {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned s = 1; s <= r; ++s) {
      const auto seq = normal_order::bell_sequence(FamilyParams(r, s), 16);
      for (unsigned order = 1; order <= 8; ++order) {
        const auto h = ma::hankel_determinants(seq, order);
        EXPECT_GT(h.det0, 0) << r << s << " order " << order;
        EXPECT_GT(h.det1, 0) << r << s << " order " << order;
      }
    }
}

TEST(Asymptotics, TwoOneFirstTermOvershoots) {
  const auto rep = ma::asymptotic_b21(1, PrecisionContext{});
  EXPECT_EQ(rep.exact, 1);
  EXPECT_NEAR(rep.ratio.to_double(), 1.0 / 1.263, 2e-3);
}

TEST(Asymptotics, TwoOneApproachesOne) {
  const PrecisionContext ctx;
  EXPECT_LT(std::abs(ma::asymptotic_b21(100, ctx).ratio.to_double() - 1.0), 0.02);
  double previous = 1.0;
  for (unsigned n : {50U, 100U, 200U, 400U}) {
    const auto rep = ma::asymptotic_b21(n, ctx);
    const double gap = std::abs(rep.ratio.to_double() - 1.0);
    EXPECT_LT(gap, previous) << n;
    previous = gap;
    // Consistency of the report itself.
    EXPECT_LT(abs(rep.asymptotic * rep.ratio - Real(rep.exact)) / Real(rep.exact), Real(1e-60));
  }
}

// The B_{3,1} expansion evaluated with its subleading coefficient as given:
// positive, monotone toward 1, but 15% low at n = 100 while the leading term
// alone is within 2%.
TEST(MomentAnalysis, B31ExpansionAsGiven) {
  const PrecisionContext ctx;
  const auto at1 = ma::asymptotic_b31(1, ctx);
  EXPECT_GT(at1.ratio, Real(0));
  const auto at100 = ma::asymptotic_b31(100, ctx);
  EXPECT_NEAR(at100.ratio.to_double(), 0.8517, 5e-4);
  EXPECT_NEAR(at100.leading_only_ratio.to_double(), 0.9881, 5e-4);
  double previous = 1.0;
  for (unsigned n : {50U, 100U, 200U, 400U}) {
    const double gap = std::abs(ma::asymptotic_b31(n, ctx).ratio.to_double() - 1.0);
    EXPECT_LT(gap, previous) << n;
    previous = gap;
  }
}

TEST(Asymptotics, RejectsZero) { EXPECT_THROW(ma::asymptotic_b21(0, PrecisionContext{}), Error); }

}  // namespace
