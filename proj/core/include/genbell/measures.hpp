#pragma once

// Weight functions W_{r,s}(x) whose power moments are B_{r,s}(n): the
// discrete comb for r = s and the continuous closed forms for r > s,
// together with the Bessel functions they need and moment quadrature.

#include <vector>

#include "genbell/approx.hpp"
#include "genbell/types.hpp"

namespace genbell::measures {

enum class WeightKind {
  DiracComb,  // r = s
  SeriesR1,   // r > 1, s = 1, general series form
  Closed21,   // (2,1), Bessel I_1
  Closed31,   // (3,1), pair of 0F2
  Closed52,   // (5,2), K_{1/3} times three 0F4
  Closed2rr,  // (2r, r), Bessel I_r
};

const char* to_string(WeightKind kind);

class WeightSpec {
 public:
  /// Throws UnsupportedKind when `kind` does not describe `params`.
  WeightSpec(FamilyParams params, WeightKind kind);
  /// Most specific kind available for the family; throws UnsupportedKind.
  static WeightSpec for_family(const FamilyParams& params);

  const FamilyParams& params() const { return params_; }
  WeightKind kind() const { return kind_; }
  bool continuous() const { return kind_ != WeightKind::DiracComb; }

  /// Comb atom k sits at k(k+1)...(k+r-1) with mass (1/e) / (k+r-1)!.
  struct Atom {
    BigInt position;
    BigInt mass_denominator;
  };
  Atom atom(unsigned long k) const;

 private:
  FamilyParams params_;
  WeightKind kind_;
};

/// I_order(x) by its ascending series, order >= 0, x >= 0.
ApproxValue bessel_i(const Real& order, const Real& x, const PrecisionContext& ctx);

/// K_order(x) = pi (I_{-order} - I_order) / (2 sin(order pi)) for
/// non-integer order and x > 0. The working precision is raised internally
/// to absorb the cancellation, so the result keeps the precision of ctx.
ApproxValue bessel_k(const Real& order, const Real& x, const PrecisionContext& ctx);

/// W(x) for a continuous kind, x > 0. Throws UnsupportedKind for the comb.
ApproxValue eval_weight(const WeightSpec& spec, const Real& x, const PrecisionContext& ctx);

/// Upper bound on log W(x) valid for every x > 0, in double precision.
/// Drives the tail cut in moment_quadrature.
double log_envelope(const WeightSpec& spec, double x);

/// (1/e) sum_k position_k^n / (k+r-1)!, the n-th moment of the comb,
/// including the atom at x = 0 (0^0 = 1).
ApproxValue comb_moment(unsigned r, unsigned n, const PrecisionContext& ctx = {});

struct MomentReport {
  unsigned n = 0;
  BigInt exact;
  ApproxValue quadrature;
  double relative_error = 0.0;
};

struct QuadratureOptions {
  /// Target relative accuracy for both the truncated integral and the tail.
  double relative_tolerance = 1e-10;
  unsigned min_level = 3;
  unsigned max_level = 10;
};

/// Integrates x^n W(x) over (0, X_cut] by tanh-sinh quadrature after the
/// substitution x = u^q that flattens the x -> 0 singularity, and bounds the
/// remainder with log_envelope. n >= 1. Throws TailBoundFailure when the
/// quadrature does not settle at max_level.
MomentReport moment_quadrature(const WeightSpec& spec, unsigned n, const PrecisionContext& ctx,
                               const QuadratureOptions& options = {});

/// Moments n = 1..max_n from one shared set of weight evaluations.
std::vector<MomentReport> moment_quadrature_batch(const WeightSpec& spec, unsigned max_n,
                                                  const PrecisionContext& ctx,
                                                  const QuadratureOptions& options = {});

/// Zeroth moment of a continuous weight. Informational: it is not 1.
ApproxValue total_mass(const WeightSpec& spec, const PrecisionContext& ctx, const QuadratureOptions& options = {});

/// The weight functions exactly as first printed, kept to document where the
/// corrected forms in eval_weight depart from them.
namespace as_printed {
/// Prefactor 1/(e(r-1)); yields (r-1) B_{r,1}(n).
ApproxValue weight_r1(unsigned r, const Real& x, const PrecisionContext& ctx);
/// Second term x/sqrt(2) 0F2(3/2, 2; x/8).
ApproxValue weight_31(const Real& x, const PrecisionContext& ctx);
/// Coefficients 8 * 3^(5/6) and 3 * 3^(1/6) on the x^(1/3), x^(2/3) terms.
ApproxValue weight_52(const Real& x, const PrecisionContext& ctx);
}  // namespace as_printed

}  // namespace genbell::measures
