#pragma once

// Extended Dobinski series and hypergeometric representations of B_{r,s}(n).
// Each evaluation returns an ApproxValue whose error bound must cover the
// exact integer from normal_order.

#include <vector>

#include "genbell/approx.hpp"
#include "genbell/types.hpp"

namespace genbell::dobinski {

/// Gamma(n + c) / Gamma(1 + c) for integer n >= 1, as the exact rising
/// factorial (1 + c)(2 + c)...(n - 1 + c).
Rational gamma_ratio(unsigned n, const Rational& c);

/// B_{r,r}(n) = (1/e) sum_k [(k + r)!/k!]^(n-1) / k!, n >= 1.
ApproxValue dobinski_rr(unsigned r, unsigned n, const PrecisionContext& ctx);

/// B_{r,1}(n) = ((r-1)^n / e) sum_{k>=1} Gamma(n + k/(r-1)) / (k! Gamma(k/(r-1))),
/// r >= 2, n >= 1.
ApproxValue dobinski_r1(unsigned r, unsigned n, const PrecisionContext& ctx);

/// B_{r,s}(n) for r > s: ((r-s)^(s(n-1)) / e) sum_k (1/k!)
/// prod_{j=1..s} Gamma(n + (k+j)/(r-s)) / Gamma(1 + (k+j)/(r-s)).
/// The 1/k! factor is required for convergence.
ApproxValue dobinski_rs(const FamilyParams& params, unsigned n, const PrecisionContext& ctx);

/// Dispatches to dobinski_rr or dobinski_rs.
ApproxValue dobinski(const FamilyParams& params, unsigned n, const PrecisionContext& ctx);

/// dobinski() with automatic precision doubling and rounding to an integer.
IntegerRecovery dobinski_integer(const FamilyParams& params, unsigned n, const PrecisionContext& ctx);

/// pFq(upper; lower; argument). Parameters are rational; every use here has
/// rational parameters.
struct HypergeometricSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Real argument;
};

/// Series evaluation with tail bound. Throws InvalidArgument for a lower
/// parameter that is zero or a negative integer, Divergent when the series
/// does not converge at the argument.
ApproxValue hypergeometric_pFq(const HypergeometricSpec& spec, const PrecisionContext& ctx);

enum class BellShape {
  RPlusOneR,     // (r+1, r)
  TwoRR,         // (2r, r)
  GeneralPrPpr,  // (pr+p, pr)
};

const char* to_string(BellShape shape);

struct HypergeometricBell {
  BellShape shape;
  ApproxValue value;
  BigInt exact;
  /// The printed representation agrees with the exact value within bounds.
  bool consistent = false;
};

/// Evaluates the hypergeometric representation for the first matching shape
/// in the order (r+1,r), (2r,r), (pr+p,pr), exactly as the formula reads,
/// and compares against the exact Bell number. Throws UnsupportedShape.
HypergeometricBell bell_hypergeometric(const FamilyParams& params, unsigned n, const PrecisionContext& ctx);

}  // namespace genbell::dobinski
