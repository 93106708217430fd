#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "genbell/real.hpp"
#include "genbell/types.hpp"

namespace genbell {

/// Working precision and truncation policy shared by every approximate
/// evaluation. Passed explicitly by value; never global.
struct PrecisionContext {
  unsigned precision_bits = 256;
  double tail_relative_bound = 1e-30;
  std::size_t max_terms = 1'000'000;

  /// Throws InvalidArgument unless precision_bits >= 64 and the tail bound
  /// lies in (0, 1).
  void validate() const;
  PrecisionContext with_bits(unsigned bits) const;
};

/// A high-precision value with an absolute error bound. `rigorous` is true
/// when the bound comes from a proven majorization and false when it is a
/// heuristic estimate.
struct ApproxValue {
  Real value;
  Real error_bound;
  bool rigorous = false;

  /// True when |value - target| <= error_bound.
  bool contains(const Real& target) const;
  bool contains(const BigInt& target) const;
};

/// First-order error propagation for products, sums and scalings of
/// approximations. Each adds a few units of rounding at the working
/// precision.
ApproxValue operator*(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator+(const ApproxValue& a, const ApproxValue& b);
/// `factor` is treated as exact up to one rounding.
ApproxValue scaled(const ApproxValue& a, const Real& factor);

struct ComplexApprox {
  Complex value;
  Real error_bound;
  bool rigorous = false;
};

/// Controls for sum_series. The stop rule: the newest term is below
/// tail_relative_bound times the partial sum and the last two term ratios
/// are both at most ratio_ceiling and non-increasing. The remaining tail is
/// then majorized by the geometric series t * c / (1 - c). Series whose
/// ratio approaches its limit from below set require_decreasing_ratio to
/// false and must mark the result non-rigorous.
struct SeriesOptions {
  double ratio_ceiling = 0.5;
  bool require_decreasing_ratio = true;
  bool require_positive = true;
  bool rigorous = true;
  std::size_t min_terms = 1;
};

/// Sums term(0) + term(1) + ... under the working precision of ctx. `term` is
/// invoked with k = 0, 1, 2, ... in order, so it may keep incremental state.
/// Throws MaxTermsExceeded when ctx.max_terms terms did not satisfy the stop
/// rule.
ApproxValue sum_series(const std::function<Real(std::size_t)>& term, const PrecisionContext& ctx,
                       const SeriesOptions& options = {});

/// Same engine for complex terms; the stop rule is applied to |term|.
ComplexApprox sum_complex_series(const std::function<Complex(std::size_t)>& term,
                                 const PrecisionContext& ctx, const SeriesOptions& options = {});

struct IntegerRecovery {
  BigInt value;
  ApproxValue approx;
  unsigned bits_used = 0;
  /// The error interval around approx.value contains exactly `value`.
  bool certain = false;
};

/// Evaluates `eval` and rounds to the nearest integer, doubling the working
/// precision (up to max_bits) while the error bound is >= 0.5.
IntegerRecovery recover_integer(const std::function<ApproxValue(const PrecisionContext&)>& eval,
                                PrecisionContext ctx, unsigned max_bits = 4096);

}  // namespace genbell
