#include "genbell/generating_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "genbell/normal_order.hpp"

namespace genbell::generating_functions {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::InvalidArgument, "power series orders differ");
}

Rational factorial(std::size_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coefficients_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw Error(ErrorCode::InvalidArgument, "a power series needs a constant term");
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries operator*(const PowerSeries& a, const Rational& b) {
  PowerSeries out = a;
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] *= b;
  return out;
}

PowerSeries PowerSeries::inverse() const {
  const Rational& c0 = coefficients_[0];
  if (c0 == 0) throw Error(ErrorCode::InvalidArgument, "series inverse needs a nonzero constant term");
  PowerSeries out(order());
  out[0] = 1 / c0;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += coefficients_[k] * out[n - k];
    out[n] = -acc / c0;
  }
  return out;
}

PowerSeries PowerSeries::sqrt() const {
  if (coefficients_[0] != 1) throw Error(ErrorCode::InvalidArgument, "series sqrt needs constant term 1");
  PowerSeries out(order());
  out[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = coefficients_[n];
    for (std::size_t k = 1; k < n; ++k) acc -= out[k] * out[n - k];
    out[n] = acc / 2;
  }
  return out;
}

PowerSeries PowerSeries::exp() const {
  if (coefficients_[0] != 0) throw Error(ErrorCode::InvalidArgument, "series exp needs constant term 0");
  PowerSeries out(order());
  out[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<unsigned long>(k)) * coefficients_[k] * out[n - k];
    out[n] = acc / Rational(static_cast<unsigned long>(n));
  }
  return out;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  require_same_order(*this, inner);
  if (inner[0] != 0) throw Error(ErrorCode::InvalidArgument, "composition needs an inner series without constant term");
  PowerSeries out(order());
  for (std::size_t k = order() + 1; k-- > 0;) {
    out = out * inner;
    out[0] += coefficients_[k];
  }
  return out;
}

std::vector<Rational> PowerSeries::egf_values() const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (std::size_t n = 0; n < coefficients_.size(); ++n) out.push_back(coefficients_[n] * factorial(n));
  return out;
}

PowerSeries geometric(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order + 1, Rational(1)));
}

PowerSeries exponential(std::size_t order) {
  PowerSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) out[k] = 1 / factorial(k);
  return out;
}

PowerSeries binomial_negative_root(unsigned d, std::size_t order) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "binomial_negative_root needs d >= 1");
  PowerSeries out(order);
  Rational rising = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = rising / factorial(k);
    rising *= Rational(static_cast<unsigned long>(1 + k * d));
  }
  return out;
}

PowerSeries egf_coefficients(unsigned r, std::size_t order) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "egf_coefficients needs r >= 2");
  PowerSeries inner(order);
  if (r == 2) {
    // x / (1 - x)
    inner = geometric(order);
    inner[0] = 0;
  } else if (r == 3) {
    // (1 - sqrt(1-2x)) / sqrt(1-2x) = 1/sqrt(1-2x) - 1
    PowerSeries base(order);
    base[0] = 1;
    if (order >= 1) base[1] = -2;
    inner = base.sqrt().inverse();
    inner[0] -= 1;
  } else {
    inner = binomial_negative_root(r - 1, order);
    inner[0] -= 1;
  }
  return inner.exp();
}

PowerSeries classical_egf_check(std::size_t order) {
  PowerSeries inner = exponential(order);
  inner[0] = 0;
  return inner.exp();
}

Complex matrix_element_closed(unsigned r, const Real& lambda, const Complex& z) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "matrix elements need r >= 2");
  const long d = static_cast<long>(r) - 1;
  const Complex a = pow(z.conj(), d) * (lambda * Real(d));
  if (a.abs() >= Real(1)) {
    throw Error(ErrorCode::BranchCut, "|lambda (z*)^(r-1) (r-1)| >= 1 puts the fractional power on its cut");
  }
  const Complex w = Complex(Real(1)) - a;
  const Complex root = exp(log(w) * (Real(-1) / Real(d)));
  return exp((root - Complex(Real(1))) * z.norm());
}

namespace {

ComplexApprox fock_at_cutoff(unsigned r, const Real& lambda, const Complex& z, unsigned cutoff,
                             const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.precision_bits);
  // Basis g_m = sqrt(m!) |m>: (a^dagger)^r a g_m = m g_(m+r-1), <z|g_m> = e^(-|z|^2/2) (z*)^m.
  std::vector<Complex> w(cutoff + 1);
  Complex power(Real(1));
  for (unsigned m = 0; m <= cutoff; ++m) {
    w[m] = power;
    power = power * z / Real(m + 1);
  }
  std::vector<Complex> bra_powers{Complex(Real(1))};
  const Complex zc = z.conj();
  const Real vacuum = exp(-z.norm());
  const unsigned shift = r - 1;
  SeriesOptions options;
  options.require_decreasing_ratio = false;
  options.require_positive = false;
  options.rigorous = false;
  return sum_complex_series(
      [&](std::size_t j) {
        if (j > 0) {
          std::vector<Complex> next(w.size() + shift);
          const Real step = lambda / Real(static_cast<unsigned long>(j));
          for (std::size_t m = 1; m < w.size(); ++m) next[m + shift] = w[m] * (step * Real(static_cast<unsigned long>(m)));
          w = std::move(next);
        }
        while (bra_powers.size() < w.size()) bra_powers.push_back(bra_powers.back() * zc);
        Complex acc;
        for (std::size_t m = 0; m < w.size(); ++m) acc += bra_powers[m] * w[m];
        return acc * vacuum;
      },
      ctx, options);
}

}  // namespace

ComplexApprox matrix_element_fock(unsigned r, const Real& lambda, const Complex& z, unsigned cutoff,
                                  const PrecisionContext& ctx, unsigned max_cutoff) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "matrix elements need r >= 2");
  if (cutoff == 0) throw Error(ErrorCode::TruncationTooSmall, "cutoff must be positive");
  ctx.validate();
  PrecisionScope scope(ctx.precision_bits);
  ComplexApprox previous = fock_at_cutoff(r, lambda, z, cutoff, ctx);
  for (unsigned m = 2 * cutoff; m <= max_cutoff; m *= 2) {
    ComplexApprox current = fock_at_cutoff(r, lambda, z, m, ctx);
    const Real change = (current.value - previous.value).abs();
    if (change <= Real(ctx.tail_relative_bound) * current.value.abs()) {
      current.error_bound += change;
      return current;
    }
    previous = std::move(current);
  }
  throw Error(ErrorCode::TruncationTooSmall,
              "Fock truncation did not settle below cutoff " + std::to_string(max_cutoff));
}

MatrixElementCheck matrix_element_exp(unsigned r, const Real& lambda, const Complex& z, unsigned cutoff,
                                      const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.precision_bits);
  MatrixElementCheck out;
  out.closed_form = matrix_element_closed(r, lambda, z);
  out.fock = matrix_element_fock(r, lambda, z, cutoff, ctx);
  out.relative_difference = ((out.closed_form - out.fock.value).abs() / out.closed_form.abs()).to_double();
  return out;
}

GrowthOrder growth_order(const FamilyParams& params, unsigned depth) {
  if (depth < 8) throw Error(ErrorCode::InvalidArgument, "growth_order needs depth >= 8");
  const normal_order::BellSequence seq = normal_order::bell_sequence(params, depth + 1);
  std::vector<double> log_b;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, seq[n].get_mpz_t());
    log_b.push_back(std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2);
  }
  const unsigned half = depth / 2;
  for (unsigned t = 0;; ++t) {
    auto log_q = [&](unsigned n) { return log_b[n + 1] - log_b[n] - (t + 1.0) * std::log(n + 1.0); };
    const double exponent = (log_q(depth) - log_q(half)) / std::log(static_cast<double>(depth) / half);
    if (exponent < 0.25) return {params, t, exponent, false};
  }
}

}  // namespace genbell::generating_functions
