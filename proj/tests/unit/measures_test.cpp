#include "genbell/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "genbell/normal_order.hpp"

namespace {

using namespace genbell;
using namespace genbell::measures;

PrecisionContext bits(unsigned b) { return PrecisionContext{}.with_bits(b); }

PrecisionContext tight(unsigned b) {
  PrecisionContext ctx = bits(b);
  ctx.tail_relative_bound = 1e-75;
  return ctx;
}

// (1/pi) int_0^pi exp(x cos t) cos(n t) dt by the trapezoid rule, which is
// spectrally accurate for this periodic integrand.
Real bessel_i_integral(long n, const Real& x, int points) {
  const Real h = const_pi() / Real(points);
  Real acc;
  for (int j = 0; j <= points; ++j) {
    const Real t = h * Real(j);
    Real f = exp(x * cos(t)) * cos(Real(n) * t);
    if (j == 0 || j == points) f /= Real(2);
    acc += f;
  }
  return acc * h / const_pi();
}

// int_0^inf exp(-x cosh t) cosh(nu t) dt, trapezoid on the even extension.
Real bessel_k_integral(const Real& nu, const Real& x) {
  const Real h = Real(1) / Real(64);
  Real acc = exp(-x) / Real(2);
  for (int j = 1;; ++j) {
    const Real t = h * Real(j);
    const Real f = exp(-x * cosh(t)) * cosh(nu * t);
    acc += f;
    if (f < acc * Real(1e-80)) break;
  }
  return acc * h;
}

// int_0^inf x^n W(x) dx = int exp((n+1) t) W(e^t) dt, trapezoid in t.
Real log_trapezoid_moment(const std::function<ApproxValue(const Real&)>& w, unsigned n, double lo, double hi,
                          double h) {
  Real acc;
  for (double t = lo; t <= hi; t += h) {
    const Real x = exp(Real(t));
    acc += pow(x, static_cast<long>(n + 1)) * w(x).value;
  }
  return acc * Real(h);
}

TEST(Bessel, IntegerOrderMatchesIntegral) {
  const PrecisionContext ctx = tight(256);
  PrecisionScope scope(256);
  for (long n : {0L, 1L, 2L, 3L})
    for (double x : {0.1, 1.0, 7.5, 20.0}) {
      const ApproxValue i = bessel_i(Real(n), Real(x), ctx);
      EXPECT_TRUE(i.rigorous);
      const Real ref = bessel_i_integral(n, Real(x), 256);
      EXPECT_LT(abs(i.value - ref), Real(1e-50) * ref) << n << " " << x;
    }
}

TEST(Bessel, RecurrenceForFractionalOrder) {
  const PrecisionContext ctx = tight(256);
  PrecisionScope scope(256);
  const Real nu = Real(4) / Real(3);
  for (double xd : {0.5, 3.0, 12.0}) {
    const Real x(xd);
    const Real lhs = bessel_i(nu - Real(1), x, ctx).value - bessel_i(nu + Real(1), x, ctx).value;
    const Real rhs = Real(2) * nu / x * bessel_i(nu, x, ctx).value;
    EXPECT_LT(abs(lhs - rhs), Real(1e-60) * rhs) << xd;
  }
}

// With the default 1e-30 tail bound K keeps that relative accuracy even where
// I_nu and I_-nu cancel to e^-2x.
TEST(Bessel, KRelativeAccuracyFollowsTailBound) {
  const PrecisionContext ctx;
  PrecisionScope scope(ctx.precision_bits);
  for (double xd : {1.0, 60.0, 150.0}) {
    const Real x(xd);
    const ApproxValue k = bessel_k(Real(0.5), x, ctx);
    const Real want = sqrt(const_pi() / (Real(2) * x)) * exp(-x);
    EXPECT_TRUE(k.contains(want)) << xd;
    EXPECT_LT(k.error_bound, Real(1e-28) * want) << xd;
  }
}

TEST(Bessel, KHalfIsElementary) {
  const PrecisionContext ctx = tight(256);
  PrecisionScope scope(256);
  for (double xd : {0.01, 1.0, 10.0, 60.0, 150.0}) {
    const Real x(xd);
    const ApproxValue k = bessel_k(Real(0.5), x, ctx);
    const Real want = sqrt(const_pi() / (Real(2) * x)) * exp(-x);
    EXPECT_LT(abs(k.value - want), Real(1e-60) * want) << xd;
    EXPECT_TRUE(k.contains(want)) << xd;
    EXPECT_EQ(k.value.precision(), 256);
  }
}

TEST(Bessel, KThirdMatchesIntegral) {
  const PrecisionContext ctx = tight(256);
  PrecisionScope scope(256);
  const Real nu = Real(1) / Real(3);
  for (double xd : {0.2, 2.0, 25.0}) {
    const Real x(xd);
    const Real ref = bessel_k_integral(nu, x);
    EXPECT_LT(abs(bessel_k(nu, x, ctx).value - ref), Real(1e-40) * ref) << xd;
  }
}

TEST(Bessel, KPrecisionDoublingAgrees) {
  PrecisionScope scope(512);
  const Real nu = Real(1) / Real(3);
  const ApproxValue lo = bessel_k(nu, Real(80), tight(256));
  const ApproxValue hi = bessel_k(nu, Real(80), tight(512));
  EXPECT_LT(abs(Real(lo.value) - hi.value), Real(1e-70) * hi.value);
}

TEST(Bessel, Errors) {
  const PrecisionContext ctx;
  try {
    bessel_k(Real(1), Real(1), ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IntegerOrderUnsupported);
  }
  EXPECT_THROW(bessel_k(Real(0.5), Real(0), ctx), Error);
  EXPECT_THROW(bessel_i(Real(-0.5), Real(1), ctx), Error);
}

TEST(WeightSpec, KindsAndFamilies) {
  EXPECT_EQ(WeightSpec::for_family(FamilyParams(2, 1)).kind(), WeightKind::Closed21);
  EXPECT_EQ(WeightSpec::for_family(FamilyParams(3, 1)).kind(), WeightKind::Closed31);
  EXPECT_EQ(WeightSpec::for_family(FamilyParams(5, 2)).kind(), WeightKind::Closed52);
  EXPECT_EQ(WeightSpec::for_family(FamilyParams(4, 2)).kind(), WeightKind::Closed2rr);
  EXPECT_EQ(WeightSpec::for_family(FamilyParams(5, 1)).kind(), WeightKind::SeriesR1);
  EXPECT_EQ(WeightSpec::for_family(FamilyParams(3, 3)).kind(), WeightKind::DiracComb);
  EXPECT_THROW(WeightSpec(FamilyParams(3, 1), WeightKind::Closed21), Error);
  try {
    WeightSpec::for_family(FamilyParams(5, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedKind);
  }
  // (2,1) is also a valid SeriesR1 and Closed2rr family.
  EXPECT_NO_THROW(WeightSpec(FamilyParams(2, 1), WeightKind::SeriesR1));
  EXPECT_NO_THROW(WeightSpec(FamilyParams(2, 1), WeightKind::Closed2rr));
}

TEST(Weights, RepresentationsOfTwoOneAgree) {
  const PrecisionContext ctx = bits(256);
  PrecisionScope scope(256);
  const FamilyParams p(2, 1);
  for (double xd : {0.05, 1.0, 9.0}) {
    const Real x(xd);
    const Real a = eval_weight(WeightSpec(p, WeightKind::Closed21), x, ctx).value;
    const Real b = eval_weight(WeightSpec(p, WeightKind::SeriesR1), x, ctx).value;
    const Real c = eval_weight(WeightSpec(p, WeightKind::Closed2rr), x, ctx).value;
    EXPECT_LT(abs(a - b), Real(1e-60) * a);
    EXPECT_LT(abs(a - c), Real(1e-60) * a);
  }
}

TEST(Weights, FirstMomentsByLogTrapezoid) {
  const PrecisionContext ctx = bits(128);
  PrecisionScope scope(128);
  struct Case {
    unsigned r, s;
    double hi;
  };
  for (const Case& c : {Case{2, 1, 5.0}, Case{3, 1, 6.0}, Case{5, 2, 11.5}, Case{4, 1, 6.5}}) {
    const WeightSpec spec = WeightSpec::for_family(FamilyParams(c.r, c.s));
    auto w = [&](const Real& x) { return eval_weight(spec, x, ctx); };
    for (unsigned n : {1U, 2U}) {
      const Real m = log_trapezoid_moment(w, n, -40.0, c.hi, 1.0 / 32);
      const Real exact(normal_order::bell_number(spec.params(), n));
      EXPECT_LT(abs(m - exact) / exact, Real(1e-12)) << c.r << c.s << " n=" << n;
    }
  }
}

TEST(Weights, PrintedSeriesPrefactorScalesByRMinusOne) {
  const PrecisionContext ctx = bits(256);
  PrecisionScope scope(256);
  for (unsigned r : {2U, 3U, 4U}) {
    const WeightSpec spec(FamilyParams(r, 1), WeightKind::SeriesR1);
    for (double xd : {0.3, 4.0}) {
      const Real printed = as_printed::weight_r1(r, Real(xd), ctx).value;
      const Real derived = eval_weight(spec, Real(xd), ctx).value;
      EXPECT_LT(abs(printed - Real(r - 1) * derived), Real(1e-60) * printed);
    }
  }
}

TEST(Weights, PrintedClosedFormsMissTheMoments) {
  const PrecisionContext ctx = bits(128);
  PrecisionScope scope(128);
  auto w31 = [&](const Real& x) { return as_printed::weight_31(x, ctx); };
  const Real m31 = log_trapezoid_moment(w31, 1, -40.0, 6.0, 1.0 / 16);
  EXPECT_GT(abs(m31 - Real(1)), Real(0.1));
  auto w52 = [&](const Real& x) { return as_printed::weight_52(x, ctx); };
  const Real m52 = log_trapezoid_moment(w52, 1, -40.0, 11.5, 1.0 / 16);
  EXPECT_GT(abs(m52 - Real(1)), Real(0.01));
}

// Property: the envelope dominates the weight wherever we sample it.
TEST(Weights, EnvelopeDominates) {
  const PrecisionContext ctx = bits(128);
  PrecisionScope scope(128);
  for (auto [r, s] : {std::pair{2U, 1U}, {3U, 1U}, {5U, 2U}, {4U, 2U}, {6U, 3U}, {4U, 1U}, {6U, 1U}}) {
    const WeightSpec spec = WeightSpec::for_family(FamilyParams(r, s));
    for (double x = 1e-4; x < 5e3; x *= 1.7) {
      const double w = eval_weight(spec, Real(x), ctx).value.to_double();
      if (w <= 0.0) continue;  // underflow far out
      EXPECT_GE(log_envelope(spec, x), std::log(w)) << r << s << " x=" << x;
    }
  }
}

TEST(Moments, ContinuousWeightsReproduceBellNumbers) {
  const PrecisionContext ctx;
  struct Case {
    unsigned r, s, max_n;
  };
  for (const Case& c : {Case{2, 1, 10}, Case{3, 1, 6}, Case{4, 2, 6}, Case{5, 2, 4}, Case{4, 1, 4}}) {
    const auto reports = moment_quadrature_batch(WeightSpec::for_family(FamilyParams(c.r, c.s)), c.max_n, ctx);
    ASSERT_EQ(reports.size(), c.max_n);
    for (const auto& rep : reports) {
      EXPECT_LE(rep.relative_error, 1e-8) << c.r << c.s << " n=" << rep.n;
      EXPECT_FALSE(rep.quadrature.rigorous);
      EXPECT_EQ(rep.exact, normal_order::bell_number(FamilyParams(c.r, c.s), rep.n));
    }
  }
}

TEST(Moments, SingleOrderMatchesBatch) {
  const PrecisionContext ctx;
  const WeightSpec spec = WeightSpec::for_family(FamilyParams(2, 1));
  const MomentReport one = moment_quadrature(spec, 4, ctx);
  EXPECT_EQ(one.exact, 73);
  EXPECT_LE(one.relative_error, 1e-8);
  EXPECT_THROW(moment_quadrature(spec, 0, ctx), Error);
}

TEST(Moments, TwoOneMassIsOneMinusInverseE) {
  const PrecisionContext ctx;
  PrecisionScope scope(ctx.precision_bits);
  const ApproxValue mass = total_mass(WeightSpec::for_family(FamilyParams(2, 1)), ctx);
  const Real want = Real(1) - exp(Real(-1));
  EXPECT_LT(abs(mass.value - want), Real(1e-9));
}

TEST(Moments, CombMatchesBellNumbers) {
  const PrecisionContext ctx;
  PrecisionScope scope(ctx.precision_bits);
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned n = 1; n <= 6; ++n) {
      const ApproxValue m = comb_moment(r, n, ctx);
      const BigInt exact = normal_order::bell_number(FamilyParams(r, r), n);
      EXPECT_TRUE(m.contains(exact)) << r << " " << n;
      EXPECT_LT(abs(m.value - Real(exact)) / Real(exact), Real(1e-25));
    }
  const auto atom = WeightSpec::for_family(FamilyParams(2, 2)).atom(3);
  EXPECT_EQ(atom.position, 12);
  EXPECT_EQ(atom.mass_denominator, 24);
}

TEST(Moments, CombHasNoDensity) {
  const WeightSpec comb = WeightSpec::for_family(FamilyParams(2, 2));
  EXPECT_THROW(eval_weight(comb, Real(1), PrecisionContext{}), Error);
  EXPECT_THROW(moment_quadrature(comb, 1, PrecisionContext{}), Error);
}

}  // namespace
