#include "genbell/approx.hpp"

namespace genbell {

void PrecisionContext::validate() const {
  if (precision_bits < 64) {
    throw Error(ErrorCode::InvalidArgument, "precision_bits must be >= 64");
  }
  if (!(tail_relative_bound > 0.0 && tail_relative_bound < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "tail_relative_bound must lie in (0, 1)");
  }
  if (max_terms == 0) throw Error(ErrorCode::InvalidArgument, "max_terms must be positive");
}

PrecisionContext PrecisionContext::with_bits(unsigned bits) const {
  PrecisionContext out = *this;
  out.precision_bits = bits;
  return out;
}

bool ApproxValue::contains(const Real& target) const { return abs(value - target) <= error_bound; }

bool ApproxValue::contains(const BigInt& target) const { return contains(Real(target)); }

ApproxValue operator*(const ApproxValue& a, const ApproxValue& b) {
  ApproxValue out;
  out.value = a.value * b.value;
  out.error_bound = abs(a.value) * b.error_bound + abs(b.value) * a.error_bound + a.error_bound * b.error_bound +
                    abs(out.value) * Real(2) * epsilon();
  out.rigorous = a.rigorous && b.rigorous;
  return out;
}

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b) {
  ApproxValue out;
  out.value = a.value + b.value;
  out.error_bound = a.error_bound + b.error_bound + abs(out.value) * Real(2) * epsilon();
  out.rigorous = a.rigorous && b.rigorous;
  return out;
}

ApproxValue scaled(const ApproxValue& a, const Real& factor) {
  ApproxValue out;
  out.value = a.value * factor;
  out.error_bound = a.error_bound * abs(factor) + abs(out.value) * Real(8) * epsilon();
  out.rigorous = a.rigorous;
  return out;
}

namespace {

// Shared stop-rule state for the real and complex engines.
class StopRule {
 public:
  StopRule(const PrecisionContext& ctx, const SeriesOptions& options)
      : tail_(ctx.tail_relative_bound),
        ceiling_(options.ratio_ceiling),
        decreasing_(options.require_decreasing_ratio),
        min_terms_(options.min_terms) {}

  // Feed |t_k| and |S_k|; returns true once the rule is met.
  bool done(std::size_t k, const Real& magnitude, const Real& partial) {
    Real ratio;
    if (previous_.is_zero()) {
      ratio = magnitude.is_zero() ? Real(0) : Real(2);
    } else {
      ratio = magnitude / previous_;
    }
    const bool small = magnitude <= Real(tail_) * partial;
    const bool decaying = ratio <= Real(ceiling_) && have_ratio_ && previous_ratio_ <= Real(ceiling_) &&
                          (!decreasing_ || ratio <= previous_ratio_);
    previous_ratio_ = ratio;
    have_ratio_ = k > 0;
    previous_ = magnitude;
    return k + 1 >= min_terms_ && small && (decaying || magnitude.is_zero());
  }

  Real tail_bound(const Real& last_magnitude) const {
    const Real c(ceiling_);
    return last_magnitude * c / (Real(1) - c);
  }

 private:
  double tail_;
  double ceiling_;
  bool decreasing_;
  std::size_t min_terms_;
  Real previous_;
  Real previous_ratio_{2};
  bool have_ratio_ = false;
};

// Accumulated rounding: one rounding per term plus one per addition.
Real rounding_bound(const Real& magnitude_sum, std::size_t terms) {
  return magnitude_sum * Real(static_cast<unsigned long>(2 * terms + 2)) * epsilon();
}

}  // namespace

ApproxValue sum_series(const std::function<Real(std::size_t)>& term, const PrecisionContext& ctx,
                       const SeriesOptions& options) {
  ctx.validate();
  PrecisionScope scope(ctx.precision_bits);
  StopRule rule(ctx, options);
  Real sum;
  Real magnitude_sum;
  for (std::size_t k = 0; k < ctx.max_terms; ++k) {
    Real t = term(k);
    if (options.require_positive && t.sign() < 0) {
      throw Error(ErrorCode::InvalidArgument, "series term " + std::to_string(k) + " is negative");
    }
    Real magnitude = abs(t);
    sum += t;
    magnitude_sum += magnitude;
    if (rule.done(k, magnitude, abs(sum))) {
      ApproxValue out;
      out.error_bound = rule.tail_bound(magnitude) + rounding_bound(magnitude_sum, k + 1);
      out.value = std::move(sum);
      out.rigorous = options.rigorous;
      return out;
    }
  }
  throw Error(ErrorCode::MaxTermsExceeded,
              "series did not converge within " + std::to_string(ctx.max_terms) + " terms");
}

ComplexApprox sum_complex_series(const std::function<Complex(std::size_t)>& term,
                                 const PrecisionContext& ctx, const SeriesOptions& options) {
  ctx.validate();
  PrecisionScope scope(ctx.precision_bits);
  StopRule rule(ctx, options);
  Complex sum(Real(0), Real(0));
  Real magnitude_sum;
  for (std::size_t k = 0; k < ctx.max_terms; ++k) {
    Complex t = term(k);
    Real magnitude = t.abs();
    sum += t;
    magnitude_sum += magnitude;
    if (rule.done(k, magnitude, sum.abs())) {
      ComplexApprox out;
      out.error_bound = rule.tail_bound(magnitude) + rounding_bound(magnitude_sum, k + 1) * Real(2);
      out.value = std::move(sum);
      out.rigorous = options.rigorous;
      return out;
    }
  }
  throw Error(ErrorCode::MaxTermsExceeded,
              "series did not converge within " + std::to_string(ctx.max_terms) + " terms");
}

IntegerRecovery recover_integer(const std::function<ApproxValue(const PrecisionContext&)>& eval,
                                PrecisionContext ctx, unsigned max_bits) {
  const Real half(0.5);
  for (;;) {
    PrecisionScope scope(ctx.precision_bits);
    ApproxValue approx = eval(ctx);
    if (approx.error_bound < half || ctx.precision_bits * 2 > max_bits) {
      IntegerRecovery out;
      out.value = approx.value.round_to_integer();
      out.certain = approx.error_bound < half && approx.contains(out.value);
      out.approx = std::move(approx);
      out.bits_used = ctx.precision_bits;
      return out;
    }
    ctx.precision_bits *= 2;
  }
}

}  // namespace genbell
