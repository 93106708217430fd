#pragma once

// Coherent states sum_n z^n / sqrt(B_{r,s}(n)) |n>, their normalization and
// overlaps, and the resolution-of-unity moment identity.

#include <vector>

#include "genbell/approx.hpp"
#include "genbell/measures.hpp"
#include "genbell/types.hpp"

namespace genbell::coherent_states {

class CoherentFamily {
 public:
  /// Precomputes rho(n) = B_{r,s}(n) for n <= table_size; larger indices are
  /// computed on demand.
  explicit CoherentFamily(FamilyParams params, unsigned table_size = 64);

  const FamilyParams& params() const { return params_; }
  BigInt rho(unsigned n) const;

 private:
  FamilyParams params_;
  std::vector<BigInt> table_;
};

/// N(x) = sum_n x^n / rho(n), x >= 0.
ApproxValue normalization(const CoherentFamily& family, const Real& x, const PrecisionContext& ctx);

struct StateVector {
  Complex z;
  unsigned cutoff = 0;
  /// Amplitudes on |0>..|cutoff>.
  std::vector<Complex> coefficients;
  /// Probability weight beyond the cutoff.
  Real truncated_weight;

  Real norm_squared() const;
};

/// N(|z|^2)^(-1/2) z^n / sqrt(rho(n)) for n <= cutoff. Throws
/// TruncationTooSmall when the weight beyond the cutoff exceeds `tolerance`.
StateVector state_coefficients(const CoherentFamily& family, const Complex& z, unsigned cutoff,
                               const PrecisionContext& ctx, double tolerance = 1e-15);

/// <z|w> = N(|z|^2)^(-1/2) N(|w|^2)^(-1/2) sum_n (z* w)^n / rho(n).
ComplexApprox overlap(const CoherentFamily& family, const Complex& z, const Complex& w, const PrecisionContext& ctx);

struct ResolutionReport {
  measures::MomentReport moment;
  /// Reconstructed W(x) = W_{r,s}(x) N(x) / pi at x = 0.1, 1, 10.
  std::vector<std::pair<double, ApproxValue>> reconstructed;
  bool reconstructed_positive = false;
};

/// Checks that the weight of the family reproduces rho(n), n >= 1, and that
/// the reconstructed W is positive. Throws UnsupportedFamily when the family
/// has no continuous weight.
ResolutionReport resolution_check(const CoherentFamily& family, unsigned n, const PrecisionContext& ctx,
                                  const measures::QuadratureOptions& options = {});

/// n = 1..max_n with shared weight evaluations.
std::vector<ResolutionReport> resolution_check_batch(const CoherentFamily& family, unsigned max_n,
                                                     const PrecisionContext& ctx,
                                                     const measures::QuadratureOptions& options = {});

}  // namespace genbell::coherent_states
