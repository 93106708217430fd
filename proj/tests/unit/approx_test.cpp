#include "genbell/approx.hpp"

#include <gtest/gtest.h>

namespace {

using namespace genbell;

TEST(Real, PrecisionScopeRestores) {
  const unsigned before = working_precision();
  {
    PrecisionScope scope(512);
    EXPECT_EQ(working_precision(), 512);
    EXPECT_EQ(Real(1).precision(), 512);
  }
  EXPECT_EQ(working_precision(), before);
}

TEST(Real, ExactConversions) {
  PrecisionScope scope(256);
  const BigInt big("9011375448568566265");
  EXPECT_EQ(Real(big).round_to_integer(), big);
  EXPECT_EQ(Real(Rational(1, 4)), Real(0.25));
  EXPECT_EQ(Real::from_string("1.5"), Real(1.5));
}

TEST(Real, Constants) {
  PrecisionScope scope(256);
  EXPECT_LT(abs(log(const_e()) - Real(1)), Real(1e-70));
  EXPECT_LT(abs(sin(const_pi())), Real(1e-70));
  EXPECT_LT(abs(gamma(Real(0.5)) - sqrt(const_pi())), Real(1e-70));
}

TEST(Real, ComplexLogExp) {
  PrecisionScope scope(256);
  const Complex z(Real(0.3), Real(-1.2));
  const Complex back = exp(log(z));
  EXPECT_LT((back - z).abs(), Real(1e-70));
  EXPECT_EQ(pow(Complex(Real(0), Real(1)), 2).re, Real(-1));
}

TEST(SumSeries, ExponentialWithinBound) {
  const PrecisionContext ctx;
  PrecisionScope scope(ctx.precision_bits);
  Real term(1);
  const ApproxValue e = sum_series(
      [&](std::size_t k) {
        if (k > 0) term /= Real(static_cast<unsigned long>(k));
        return term;
      },
      ctx);
  EXPECT_TRUE(e.rigorous);
  EXPECT_TRUE(e.contains(const_e()));
  EXPECT_LT(e.error_bound, Real(1e-29) * e.value);
}

// Property: the bound covers the true value across tail settings.
TEST(SumSeries, BoundCoversGeometricSeries) {
  for (double tail : {1e-5, 1e-12, 1e-30}) {
    PrecisionContext ctx;
    ctx.tail_relative_bound = tail;
    PrecisionScope scope(ctx.precision_bits);
    const ApproxValue s = sum_series([](std::size_t k) { return ldexp(Real(1), -static_cast<long>(2 * k)); }, ctx);
    EXPECT_TRUE(s.contains(Real(4) / Real(3))) << tail;
    EXPECT_LT(abs(s.value - Real(4) / Real(3)), Real(tail) * Real(2));
  }
}

TEST(SumSeries, MaxTerms) {
  PrecisionContext ctx;
  ctx.max_terms = 50;
  try {
    sum_series([](std::size_t) { return Real(1); }, ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MaxTermsExceeded);
  }
}

TEST(SumSeries, NegativeTermRejected) {
  EXPECT_THROW(sum_series([](std::size_t k) { return Real(k == 2 ? -1 : 0); }, PrecisionContext{}, {.min_terms = 4}),
               Error);
}

TEST(PrecisionContext, Validation) {
  PrecisionContext ctx;
  ctx.precision_bits = 32;
  EXPECT_THROW(ctx.validate(), Error);
  ctx = {};
  ctx.tail_relative_bound = 0.0;
  EXPECT_THROW(ctx.validate(), Error);
}

TEST(RecoverInteger, DoublesPrecisionUntilCertain) {
  // 2^200 + 1 needs more than 200 bits to round correctly.
  const BigInt want = (BigInt(1) << 200) + 1;
  const IntegerRecovery rec = recover_integer(
      [&](const PrecisionContext& c) {
        ApproxValue v;
        v.value = Real(want);
        v.error_bound = abs(v.value) * ldexp(Real(1), -static_cast<long>(c.precision_bits));
        v.rigorous = true;
        return v;
      },
      PrecisionContext{}.with_bits(128));
  EXPECT_TRUE(rec.certain);
  EXPECT_EQ(rec.value, want);
  EXPECT_GE(rec.bits_used, 256U);
}

}  // namespace
