#pragma once

// Hankel-Hadamard positivity of Bell sequences and the two-term saddle-point
// asymptotics of B_{2,1}(n) and B_{3,1}(n).

#include <vector>

#include "genbell/approx.hpp"
#include "genbell/normal_order.hpp"
#include "genbell/types.hpp"

namespace genbell::moment_analysis {

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// `matrix` is square, row-major.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

struct HankelReport {
  FamilyParams params;
  unsigned order = 0;
  BigInt det0;  // det [B(i+j-2)], i,j = 1..order
  BigInt det1;  // det [B(i+j-1)]
};

/// Needs seq.size() >= 2 * order, else InsufficientSequence. order >= 1.
HankelReport hankel_determinants(const normal_order::BellSequence& seq, unsigned order);

struct AsymptoticReport {
  unsigned n = 0;
  BigInt exact;
  Real asymptotic;
  /// exact / asymptotic.
  Real ratio;
  /// exact / (leading term of the expansion alone).
  Real leading_only_ratio;
};

/// B_{2,1}(n) ~ (2e)^(-1/2) (n^(-1/4) + n^(-3/4) / 12) n^n exp(-n + 2 sqrt(n)).
AsymptoticReport asymptotic_b21(unsigned n, const PrecisionContext& ctx);

/// B_{3,1}(n) ~ 2^(1/6) / (sqrt(3) e) (n^(-1/3) + 2^(-3/7) n^(-2/3)) (2n)^n
/// exp(-n + (3/2) (2n)^(1/3)), with the subleading coefficient taken as given.
AsymptoticReport asymptotic_b31(unsigned n, const PrecisionContext& ctx);

}  // namespace genbell::moment_analysis
