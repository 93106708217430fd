#include "genbell/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "genbell/dobinski.hpp"
#include "genbell/normal_order.hpp"

namespace genbell::measures {

const char* to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::DiracComb: return "dirac_comb";
    case WeightKind::SeriesR1: return "series_r1";
    case WeightKind::Closed21: return "closed_21";
    case WeightKind::Closed31: return "closed_31";
    case WeightKind::Closed52: return "closed_52";
    case WeightKind::Closed2rr: return "closed_2rr";
  }
  return "unknown";
}

namespace {

bool kind_matches(const FamilyParams& p, WeightKind kind) {
  const unsigned r = p.r();
  const unsigned s = p.s();
  switch (kind) {
    case WeightKind::DiracComb: return r == s;
    case WeightKind::SeriesR1: return s == 1 && r >= 2;
    case WeightKind::Closed21: return r == 2 && s == 1;
    case WeightKind::Closed31: return r == 3 && s == 1;
    case WeightKind::Closed52: return r == 5 && s == 2;
    case WeightKind::Closed2rr: return r == 2 * s;
  }
  return false;
}

}  // namespace

WeightSpec::WeightSpec(FamilyParams params, WeightKind kind) : params_(params), kind_(kind) {
  if (!kind_matches(params_, kind_)) {
    throw Error(ErrorCode::UnsupportedKind,
                std::string(to_string(kind_)) + " does not describe family " + genbell::to_string(params_));
  }
}

WeightSpec WeightSpec::for_family(const FamilyParams& params) {
  for (WeightKind kind : {WeightKind::DiracComb, WeightKind::Closed21, WeightKind::Closed31, WeightKind::Closed52,
                          WeightKind::Closed2rr, WeightKind::SeriesR1}) {
    if (kind_matches(params, kind)) return WeightSpec(params, kind);
  }
  throw Error(ErrorCode::UnsupportedKind, "no weight function is known for " + genbell::to_string(params));
}

WeightSpec::Atom WeightSpec::atom(unsigned long k) const {
  if (kind_ != WeightKind::DiracComb) throw Error(ErrorCode::UnsupportedKind, "atoms exist only for the comb");
  const unsigned r = params_.r();
  Atom out;
  out.position = normal_order::falling_factorial(k + r - 1, r);
  mpz_fac_ui(out.mass_denominator.get_mpz_t(), k + r - 1);
  return out;
}

namespace {

ApproxValue exact_zero() {
  ApproxValue out;
  out.rigorous = true;
  return out;
}

ApproxValue exact_one() {
  ApproxValue out;
  out.value = Real(1);
  out.rigorous = true;
  return out;
}

// Ascending series; valid for any order > -1 (negative orders are needed
// for K).
ApproxValue bessel_i_series(const Real& order, const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.precision_bits);
  if (x.is_zero()) {
    if (order.is_zero()) return exact_one();
    if (order.sign() > 0) return exact_zero();
    throw Error(ErrorCode::InvalidArgument, "I_nu(0) is infinite for negative order");
  }
  const Real half = x / Real(2);
  const Real half_sq = half * half;
  Real term = pow(half, order) / gamma(order + Real(1));
  ApproxValue out = sum_series(
      [&](std::size_t m) {
        if (m > 0) term = term * half_sq / (Real(static_cast<unsigned long>(m)) * (Real(static_cast<unsigned long>(m)) + order));
        return term;
      },
      ctx);
  // Leading term carries a pow and a gamma rounding.
  out.error_bound += abs(out.value) * Real(8) * epsilon();
  return out;
}

ApproxValue hyp0(std::vector<Rational> lower, const Real& z, const PrecisionContext& ctx) {
  return dobinski::hypergeometric_pFq({{}, std::move(lower), z}, ctx);
}

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Real rational_power(const Real& x, long num, long den) { return pow(x, Real(q(num, den))); }

ApproxValue weight_21(const Real& x, const PrecisionContext& ctx) {
  const Real root = sqrt(x);
  const ApproxValue i1 = bessel_i(Real(1), root * Real(2), ctx);
  return scaled(i1, exp(-x) / (const_e() * root));
}

ApproxValue weight_2rr(unsigned order, const Real& x, const PrecisionContext& ctx) {
  const long r = order;
  const ApproxValue ir = bessel_i(Real(r), Real(2) * rational_power(x, 1, 2 * r), ctx);
  const Real factor = rational_power(x, 2 - 3 * r, 2 * r) * exp(-rational_power(x, 1, r)) / (const_e() * Real(r));
  return scaled(ir, factor);
}

ApproxValue weight_31_impl(const Real& x, const PrecisionContext& ctx, bool printed) {
  const Real z = x / Real(8);
  const ApproxValue f1 = hyp0({q(1, 2), q(3, 2)}, z, ctx);
  const ApproxValue f2 = hyp0({q(3, 2), Rational(2)}, z, ctx);
  const Real c1 = Real(2) / sqrt(const_pi());
  const Real c2 = printed ? x / sqrt(Real(2)) : sqrt(x / Real(2));
  const ApproxValue bracket = scaled(f1, c1) + scaled(f2, c2);
  return scaled(bracket, exp(-x / Real(2)) / (const_e() * sqrt(Real(8) * x)));
}

ApproxValue weight_52_impl(const Real& x, const PrecisionContext& ctx, bool printed) {
  const Real z = x / Real(243);
  const ApproxValue fa = hyp0({q(1, 3), q(2, 3), q(4, 3), q(5, 3)}, z, ctx);
  const ApproxValue fb = hyp0({q(2, 3), q(4, 3), q(5, 3), Rational(2)}, z, ctx);
  const Real third = Real(q(1, 3));
  const Real sixth = Real(q(1, 6));
  const ApproxValue fc = hyp0({q(4, 3), q(5, 3), Rational(2), q(7, 3)}, z, ctx);
  const Real three(3);
  const Real ca = Real(24) * sqrt(three);
  Real cb;
  Real cc;
  if (printed) {
    cb = Real(8) * pow(three, Real(q(5, 6)));
    cc = three * pow(three, sixth);
  } else {
    cb = Real(8) * pow(three, -sixth) * gamma(third);
    cc = Real(2) * pow(three, sixth) * gamma(Real(q(2, 3)));
  }
  const ApproxValue bracket =
      scaled(fa, ca) + scaled(fb, cb * pow(x, third)) + scaled(fc, cc * pow(x, Real(q(2, 3))));
  const ApproxValue u = scaled(bracket, Real(3) / (Real(32) * const_pi()));
  const ApproxValue k = bessel_k(third, Real(2) * sqrt(x) / three, ctx);
  return scaled(k * u, Real(2) / (Real(27) * const_e() * sqrt(x)));
}

ApproxValue weight_r1_impl(unsigned r, const Real& x, const PrecisionContext& ctx, bool printed) {
  const long d = static_cast<long>(r) - 1;
  const Real t = x / Real(d);
  const Real step = pow(t, Real(q(1, d)));
  Real power(1);
  BigInt k_factorial = 1;
  const ApproxValue series = sum_series(
      [&](std::size_t k) {
        if (k > 0) {
          power *= step;
          k_factorial *= static_cast<unsigned long>(k);
        }
        const Real g = gamma(Real(q(static_cast<long>(r + k), d)));
        return power / (Real(k_factorial) * g);
      },
      ctx);
  const Real scale = printed ? Real(d) : Real(d * d);
  const Real factor = pow(t, Real(q(2 - static_cast<long>(r), d))) * exp(-t) / (const_e() * scale);
  ApproxValue out = scaled(series, factor);
  // Each term carries a gamma rounding.
  out.error_bound += abs(out.value) * Real(4) * epsilon();
  return out;
}

void require_positive_x(const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "weight functions need x > 0");
}

}  // namespace

ApproxValue bessel_i(const Real& order, const Real& x, const PrecisionContext& ctx) {
  if (order.sign() < 0) throw Error(ErrorCode::InvalidArgument, "bessel_i needs order >= 0");
  if (x.sign() < 0) throw Error(ErrorCode::InvalidArgument, "bessel_i needs x >= 0");
  return bessel_i_series(order, x, ctx);
}

ApproxValue bessel_k(const Real& order, const Real& x, const PrecisionContext& ctx) {
  if (floor(order) == order) {
    throw Error(ErrorCode::IntegerOrderUnsupported, "bessel_k supports non-integer order only");
  }
  if (x.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "bessel_k needs x > 0");
  ctx.validate();
  // I_{-nu} and I_nu both grow like e^x while K decays like e^-x.
  const double xd = x.to_double();
  const auto extra = static_cast<unsigned>(2.0 * xd * std::numbers::log2e) + 64U;
  PrecisionContext wide = ctx.with_bits(ctx.precision_bits + extra);
  wide.tail_relative_bound = std::max(1e-300, ctx.tail_relative_bound * std::exp(-2.0 * xd - 2.0));

  Real value;
  Real bound;
  bool rigorous = false;
  {
    PrecisionScope scope(wide.precision_bits);
    const Real wide_x = x * Real(1);
    const ApproxValue plus = bessel_i_series(order, wide_x, wide);
    const ApproxValue minus = bessel_i_series(-order, wide_x, wide);
    const Real factor = const_pi() / (Real(2) * sin(order * const_pi()));
    value = (minus.value - plus.value) * factor;
    bound = abs(factor) * (plus.error_bound + minus.error_bound) + abs(value) * Real(8) * epsilon();
    rigorous = plus.rigorous && minus.rigorous;
  }
  PrecisionScope scope(ctx.precision_bits);
  ApproxValue out;
  out.value = value * Real(1);
  out.error_bound = bound * Real(1) + abs(out.value) * Real(2) * epsilon();
  out.rigorous = rigorous;
  return out;
}

ApproxValue eval_weight(const WeightSpec& spec, const Real& x, const PrecisionContext& ctx) {
  require_positive_x(x);
  PrecisionScope scope(ctx.precision_bits);
  switch (spec.kind()) {
    case WeightKind::DiracComb:
      throw Error(ErrorCode::UnsupportedKind, "the comb has no pointwise density");
    case WeightKind::SeriesR1: return weight_r1_impl(spec.params().r(), x, ctx, false);
    case WeightKind::Closed21: return weight_21(x, ctx);
    case WeightKind::Closed31: return weight_31_impl(x, ctx, false);
    case WeightKind::Closed52: return weight_52_impl(x, ctx, false);
    case WeightKind::Closed2rr: return weight_2rr(spec.params().s(), x, ctx);
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown weight kind");
}

namespace as_printed {

ApproxValue weight_r1(unsigned r, const Real& x, const PrecisionContext& ctx) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "weight_r1 needs r >= 2");
  require_positive_x(x);
  PrecisionScope scope(ctx.precision_bits);
  return weight_r1_impl(r, x, ctx, true);
}

ApproxValue weight_31(const Real& x, const PrecisionContext& ctx) {
  require_positive_x(x);
  PrecisionScope scope(ctx.precision_bits);
  return weight_31_impl(x, ctx, true);
}

ApproxValue weight_52(const Real& x, const PrecisionContext& ctx) {
  require_positive_x(x);
  PrecisionScope scope(ctx.precision_bits);
  return weight_52_impl(x, ctx, true);
}

}  // namespace as_printed

// Envelopes. Ingredients, all for x > 0:
//   I_nu(y) <= (y/2)^nu e^y / Gamma(nu + 1)              (nu >= 0)
//   K_{1/3}(y) <= K_{1/2}(y) = sqrt(pi / (2y)) e^-y
//   0F2(1/2, 3/2; z) <= 1.5 exp(3 (3z)^(1/3)),  0F2(3/2, 2; z) <= exp(3 (3z)^(1/3))
//   0F4(b; z) <= max(1, 1/prod b) exp(5 (16z)^(1/5))    via (b)_k >= b k!/k
//   Gamma(t) >= 0.8856 for t > 0
double log_envelope(const WeightSpec& spec, double x) {
  const double pi = std::numbers::pi;
  switch (spec.kind()) {
    case WeightKind::DiracComb:
      throw Error(ErrorCode::UnsupportedKind, "the comb has no pointwise density");
    case WeightKind::Closed21: return -1.0 - x + 2.0 * std::sqrt(x);
    case WeightKind::Closed2rr: {
      const double r = spec.params().s();
      return -1.0 - std::log(r) - std::lgamma(r + 1.0) + (1.0 - r) / r * std::log(x) - std::pow(x, 1.0 / r) +
             2.0 * std::pow(x, 1.0 / (2.0 * r));
    }
    case WeightKind::Closed31:
      return -x / 2.0 - 1.0 - 0.5 * std::log(8.0 * x) + std::log(3.0 / std::sqrt(pi) + std::sqrt(x / 2.0)) +
             3.0 * std::cbrt(3.0 * x / 8.0);
    case WeightKind::Closed52: {
      const double y = 2.0 * std::sqrt(x) / 3.0;
      const double bracket = 24.0 * std::sqrt(3.0) * 81.0 / 40.0 +
                             8.0 * std::pow(3.0, -1.0 / 6.0) * std::tgamma(1.0 / 3.0) * std::cbrt(x) +
                             2.0 * std::pow(3.0, 1.0 / 6.0) * std::tgamma(2.0 / 3.0) * std::pow(x, 2.0 / 3.0);
      return std::log(2.0 / 27.0) - 1.0 - 0.5 * std::log(x) + 0.5 * std::log(pi / (2.0 * y)) - y +
             std::log(3.0 / (32.0 * pi) * bracket) + 5.0 * std::pow(16.0 * x / 243.0, 0.2);
    }
    case WeightKind::SeriesR1: {
      const double r = spec.params().r();
      const double d = r - 1.0;
      const double t = x / d;
      return -1.0 - 2.0 * std::log(d) - std::log(0.8856) + (2.0 - r) / d * std::log(t) - t + std::pow(t, 1.0 / d);
    }
  }
  return std::numeric_limits<double>::infinity();
}

ApproxValue comb_moment(unsigned r, unsigned n, const PrecisionContext& ctx) {
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "comb_moment needs r >= 1");
  const WeightSpec spec(FamilyParams(r, r), WeightKind::DiracComb);
  PrecisionScope scope(ctx.precision_bits);
  const ApproxValue sum = sum_series(
      [&](std::size_t k) {
        const WeightSpec::Atom atom = spec.atom(k);
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), atom.position.get_mpz_t(), n);  // 0^0 = 1
        return Real(Rational(power, atom.mass_denominator));
      },
      ctx, {.min_terms = 4});
  return scaled(sum, exp(Real(-1)));
}

namespace {

unsigned substitution_power(const WeightSpec& spec) {
  switch (spec.kind()) {
    case WeightKind::Closed21:
    case WeightKind::Closed31: return 2;
    case WeightKind::Closed52: return 3;
    case WeightKind::Closed2rr: return spec.params().s();
    case WeightKind::SeriesR1: return std::max(1U, spec.params().r() - 1);
    case WeightKind::DiracComb: break;
  }
  throw Error(ErrorCode::UnsupportedKind, "quadrature needs a continuous weight");
}

// log of q u^(q-1) x^n env(x) at x = u^q.
double log_tail_integrand(const WeightSpec& spec, unsigned power, unsigned n, double u) {
  const double x = std::pow(u, power);
  return std::log(static_cast<double>(power)) + (power - 1.0 + static_cast<double>(n) * power) * std::log(u) +
         log_envelope(spec, x);
}

// log of the envelope integral over [upper, infinity), trapezoid rule in u
// with a factor 2 of slack.
double log_envelope_tail(const WeightSpec& spec, unsigned power, unsigned n, double upper) {
  const double h = std::max(upper, 1.0) / 512.0;
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  for (double u = upper;; u += h) {
    const double g = log_tail_integrand(spec, power, n, u);
    logs.push_back(g);
    peak = std::max(peak, g);
    if (g < peak - 80.0 && logs.size() > 16) break;
    if (logs.size() > 2'000'000) return std::numeric_limits<double>::infinity();
  }
  double acc = 0.0;
  for (double g : logs) acc += std::exp(g - peak);
  return peak + std::log(acc * h) + std::log(2.0);
}

double log_of(const BigInt& v) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

struct TanhSinhNode {
  Real u;
  Real weight;  // du/dt
};

// u = U / (1 + exp(-pi sinh t)), the tanh-sinh map of [0, U].
TanhSinhNode tanh_sinh_node(const Real& t, const Real& upper) {
  const Real s = const_pi() * sinh(t);
  const Real decay = exp(-s);
  const Real sigma = Real(1) / (Real(1) + decay);
  const Real complement = decay / (Real(1) + decay);
  return {upper * sigma, upper * const_pi() * cosh(t) * sigma * complement};
}

std::vector<ApproxValue> integrate_moments(const WeightSpec& spec, const std::vector<unsigned>& orders,
                                           const std::vector<double>& log_scales, const PrecisionContext& ctx,
                                           const QuadratureOptions& options) {
  ctx.validate();
  const unsigned power = substitution_power(spec);
  const double tol = options.relative_tolerance;

  // Cut: grow U until every envelope tail is below a quarter of the tolerance.
  double upper = 1.0;
  std::vector<double> log_tails(orders.size());
  for (int iter = 0;; ++iter) {
    bool ok = true;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      log_tails[i] = log_envelope_tail(spec, power, orders[i], upper);
      if (log_tails[i] > std::log(tol / 4.0) + log_scales[i]) ok = false;
    }
    if (ok) break;
    if (iter > 400) throw Error(ErrorCode::TailBoundFailure, "could not bound the tail of the moment integral");
    upper *= 1.25;
  }

  PrecisionScope scope(ctx.precision_bits);
  const Real big_u(upper);
  constexpr double kTMax = 4.5;
  std::vector<Real> sums(orders.size());
  std::vector<Real> weight_error(orders.size());
  std::vector<Real> previous(orders.size());
  std::vector<Real> current(orders.size());

  auto accumulate = [&](const Real& t) {
    const TanhSinhNode node = tanh_sinh_node(t, big_u);
    if (node.u.sign() <= 0 || node.weight.is_zero()) return;
    const Real x = pow(node.u, static_cast<long>(power));
    if (x.sign() <= 0) return;
    const ApproxValue w = eval_weight(spec, x, ctx);
    const Real jacobian = Real(power) * pow(node.u, static_cast<long>(power) - 1) * node.weight;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const Real factor = jacobian * pow(x, static_cast<long>(orders[i]));
      sums[i] += factor * w.value;
      weight_error[i] += abs(factor) * w.error_bound;
    }
  };

  // Level 0: integer t.
  for (int j = -static_cast<int>(kTMax); j <= static_cast<int>(kTMax); ++j) accumulate(Real(j));
  for (std::size_t i = 0; i < orders.size(); ++i) current[i] = sums[i];

  for (unsigned level = 1; level <= options.max_level; ++level) {
    const Real h = ldexp(Real(1), -static_cast<long>(level));
    const long count = static_cast<long>(kTMax * std::ldexp(1.0, static_cast<int>(level)));
    for (long j = -count; j <= count; ++j) {
      if (j % 2 == 0) continue;
      accumulate(Real(j) * h);
    }
    bool settled = level >= options.min_level;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      previous[i] = current[i];
      current[i] = sums[i] * h;
      const Real delta = abs(current[i] - previous[i]);
      if (delta > Real(tol / 2.0) * abs(current[i])) settled = false;
    }
    if (settled) {
      std::vector<ApproxValue> out;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        ApproxValue v;
        v.value = current[i];
        v.error_bound = abs(current[i] - previous[i]) + Real(std::exp(log_tails[i])) + weight_error[i] * h +
                        abs(current[i]) * Real(1e-30);
        v.rigorous = false;
        out.push_back(std::move(v));
      }
      return out;
    }
  }
  throw Error(ErrorCode::TailBoundFailure, "tanh-sinh quadrature did not settle for " +
                                               std::string(to_string(spec.kind())));
}

}  // namespace

std::vector<MomentReport> moment_quadrature_batch(const WeightSpec& spec, unsigned max_n,
                                                  const PrecisionContext& ctx, const QuadratureOptions& options) {
  if (!spec.continuous()) throw Error(ErrorCode::UnsupportedKind, "quadrature needs a continuous weight");
  if (max_n == 0) throw Error(ErrorCode::InvalidArgument, "moment checks start at n = 1");
  std::vector<unsigned> orders;
  std::vector<BigInt> exact;
  std::vector<double> scales;
  for (unsigned n = 1; n <= max_n; ++n) {
    orders.push_back(n);
    exact.push_back(normal_order::bell_number(spec.params(), n));
    scales.push_back(log_of(exact.back()));
  }
  std::vector<ApproxValue> values = integrate_moments(spec, orders, scales, ctx, options);
  PrecisionScope scope(ctx.precision_bits);
  std::vector<MomentReport> reports;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    MomentReport report;
    report.n = orders[i];
    report.exact = exact[i];
    const Real exact_real(exact[i]);
    report.relative_error = (abs(values[i].value - exact_real) / exact_real).to_double();
    report.quadrature = std::move(values[i]);
    reports.push_back(std::move(report));
  }
  return reports;
}

MomentReport moment_quadrature(const WeightSpec& spec, unsigned n, const PrecisionContext& ctx,
                               const QuadratureOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "moment checks start at n = 1; see total_mass");
  if (!spec.continuous()) throw Error(ErrorCode::UnsupportedKind, "quadrature needs a continuous weight");
  const BigInt exact = normal_order::bell_number(spec.params(), n);
  std::vector<ApproxValue> values = integrate_moments(spec, {n}, {log_of(exact)}, ctx, options);
  PrecisionScope scope(ctx.precision_bits);
  MomentReport report;
  report.n = n;
  report.exact = exact;
  const Real exact_real(exact);
  report.relative_error = (abs(values[0].value - exact_real) / exact_real).to_double();
  report.quadrature = std::move(values[0]);
  return report;
}

ApproxValue total_mass(const WeightSpec& spec, const PrecisionContext& ctx, const QuadratureOptions& options) {
  if (!spec.continuous()) throw Error(ErrorCode::UnsupportedKind, "quadrature needs a continuous weight");
  return integrate_moments(spec, {0}, {0.0}, ctx, options).front();
}

}  // namespace genbell::measures
