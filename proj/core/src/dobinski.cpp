#include "genbell/dobinski.hpp"

#include <string>

#include "genbell/normal_order.hpp"

namespace genbell::dobinski {
namespace {

void require_positive_n(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Dobinski series are defined for n >= 1");
}

// (1/e) * sum, with the rounding of the final product folded into the bound.
ApproxValue scale_by_inverse_e(const ApproxValue& sum, const Real& factor = Real(1)) {
  ApproxValue out;
  const Real inv_e = exp(Real(-1));
  out.value = sum.value * factor * inv_e;
  out.error_bound = sum.error_bound * abs(factor) * inv_e + abs(out.value) * Real(4) * epsilon();
  out.rigorous = sum.rigorous;
  return out;
}

// Sums exact rational numerators over k!, starting at k = first_k.
ApproxValue sum_over_factorial(const std::function<Rational(unsigned long)>& numerator, unsigned long first_k,
                               const PrecisionContext& ctx) {
  BigInt k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), first_k);
  return sum_series(
      [&](std::size_t i) {
        const unsigned long k = first_k + i;
        if (i > 0) k_factorial *= k;
        Rational term = numerator(k) / Rational(k_factorial);
        return Real(term);
      },
      ctx);
}

}  // namespace

Rational gamma_ratio(unsigned n, const Rational& c) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "gamma_ratio needs n >= 1");
  Rational out = 1;
  for (unsigned i = 1; i < n; ++i) out *= c + i;
  return out;
}

ApproxValue dobinski_rr(unsigned r, unsigned n, const PrecisionContext& ctx) {
  require_positive_n(n);
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "dobinski_rr needs r >= 1");
  PrecisionScope scope(ctx.precision_bits);
  const ApproxValue sum = sum_over_factorial(
      [&](unsigned long k) -> Rational {
        BigInt base = normal_order::falling_factorial(k + r, r);
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n - 1);
        return Rational(power);
      },
      0, ctx);
  return scale_by_inverse_e(sum);
}

ApproxValue dobinski_r1(unsigned r, unsigned n, const PrecisionContext& ctx) {
  require_positive_n(n);
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "dobinski_r1 needs r >= 2");
  PrecisionScope scope(ctx.precision_bits);
  const unsigned long d = r - 1;
  BigInt d_power;
  mpz_ui_pow_ui(d_power.get_mpz_t(), d, n);
  const ApproxValue sum = sum_over_factorial(
      [&](unsigned long k) -> Rational {
        // Gamma(n + c) / Gamma(c) = c * Gamma(n + c) / Gamma(1 + c), c = k / d.
        Rational c{BigInt(k), BigInt(d)};
        c.canonicalize();
        return Rational(d_power) * c * gamma_ratio(n, c);
      },
      1, ctx);
  return scale_by_inverse_e(sum);
}

ApproxValue dobinski_rs(const FamilyParams& params, unsigned n, const PrecisionContext& ctx) {
  require_positive_n(n);
  if (params.shift() == 0) throw Error(ErrorCode::InvalidArgument, "dobinski_rs needs r > s");
  PrecisionScope scope(ctx.precision_bits);
  const unsigned long d = params.shift();
  BigInt prefactor;
  mpz_ui_pow_ui(prefactor.get_mpz_t(), d, static_cast<unsigned long>(params.s()) * (n - 1));
  const ApproxValue sum = sum_over_factorial(
      [&](unsigned long k) -> Rational {
        Rational product(prefactor);
        for (unsigned j = 1; j <= params.s(); ++j) {
          Rational c(BigInt(k + j), BigInt(d));
          c.canonicalize();
          product *= gamma_ratio(n, c);
        }
        return product;
      },
      0, ctx);
  return scale_by_inverse_e(sum);
}

ApproxValue dobinski(const FamilyParams& params, unsigned n, const PrecisionContext& ctx) {
  if (params.shift() == 0) return dobinski_rr(params.r(), n, ctx);
  return dobinski_rs(params, n, ctx);
}

IntegerRecovery dobinski_integer(const FamilyParams& params, unsigned n, const PrecisionContext& ctx) {
  return recover_integer([&](const PrecisionContext& c) { return dobinski(params, n, c); }, ctx);
}

namespace {

bool is_nonpositive_integer(const Rational& q) { return q.get_den() == 1 && q <= 0; }

}  // namespace

ApproxValue hypergeometric_pFq(const HypergeometricSpec& spec, const PrecisionContext& ctx) {
  for (const auto& b : spec.lower) {
    if (is_nonpositive_integer(b)) {
      throw Error(ErrorCode::InvalidArgument, "lower parameter is zero or a negative integer");
    }
  }
  bool terminating = false;
  bool all_positive = spec.argument.sign() >= 0;
  for (const auto& a : spec.upper) {
    if (is_nonpositive_integer(a)) terminating = true;
    if (a <= 0) all_positive = false;
  }
  for (const auto& b : spec.lower) {
    if (b <= 0) all_positive = false;
  }
  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  PrecisionScope scope(ctx.precision_bits);
  const Real x = spec.argument;

  SeriesOptions options;
  options.require_positive = all_positive;
  if (!terminating && !x.is_zero()) {
    if (p > q + 1) throw Error(ErrorCode::Divergent, "pFq with p > q + 1 diverges");
    if (p == q + 1) {
      const double ax = abs(x).to_double();
      if (ax >= 1.0) throw Error(ErrorCode::Divergent, "pFq with p = q + 1 needs |x| < 1");
      options.ratio_ceiling = (1.0 + ax) / 2.0;
      options.require_decreasing_ratio = false;
      options.rigorous = false;
    }
  }

  Real term(1);
  return sum_series(
      [&](std::size_t k) {
        if (k == 0) return term;
        const unsigned long j = k - 1;
        Rational factor(1, 1);
        for (const auto& a : spec.upper) factor *= a + j;
        for (const auto& b : spec.lower) factor /= b + j;
        factor /= j + 1;
        term = term * Real(factor) * x;
        return term;
      },
      ctx, options);
}

const char* to_string(BellShape shape) {
  switch (shape) {
    case BellShape::RPlusOneR: return "(r+1,r)";
    case BellShape::TwoRR: return "(2r,r)";
    case BellShape::GeneralPrPpr: return "(pr+p,pr)";
  }
  return "unknown";
}

namespace {

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

HypergeometricBell bell_hypergeometric(const FamilyParams& params, unsigned n, const PrecisionContext& ctx) {
  require_positive_n(n);
  const unsigned r = params.r();
  const unsigned s = params.s();
  if (r == s) throw Error(ErrorCode::UnsupportedShape, "no hypergeometric shape for r = s");

  PrecisionScope scope(ctx.precision_bits);
  HypergeometricSpec spec{{}, {}, Real(1)};
  Rational prefactor(1);
  BellShape shape;
  if (r == s + 1) {
    shape = BellShape::RPlusOneR;
    for (unsigned j = 1; j <= s; ++j) {
      prefactor *= Rational(factorial(n - 1 + j), factorial(j));
      spec.upper.emplace_back(n + j);
      spec.lower.emplace_back(j + 1);
    }
  } else if (r == 2 * s) {
    shape = BellShape::TwoRR;
    prefactor = Rational(factorial(static_cast<unsigned long>(s) * n), factorial(s));
    spec.upper.emplace_back(s * n + 1);
    spec.lower.emplace_back(s + 1);
  } else if (s % (r - s) == 0) {
    shape = BellShape::GeneralPrPpr;
    const unsigned p = r - s;
    const unsigned count = s / p;
    for (unsigned j = 1; j <= count; ++j) {
      prefactor *= Rational(factorial(p * (n - 1) + j), factorial(p * j));
    }
    for (unsigned i = 0; i < count; ++i) {
      spec.upper.emplace_back(p * n + 1 + p * i);
      spec.lower.emplace_back(1 + p + p * i);
    }
  } else {
    throw Error(ErrorCode::UnsupportedShape, "no hypergeometric shape covers " + to_string(params));
  }
  prefactor.canonicalize();

  const ApproxValue series = hypergeometric_pFq(spec, ctx);
  HypergeometricBell out{shape, scale_by_inverse_e(series, Real(prefactor)), normal_order::bell_number(params, n)};
  out.consistent = out.value.contains(out.exact);
  return out;
}

}  // namespace genbell::dobinski
