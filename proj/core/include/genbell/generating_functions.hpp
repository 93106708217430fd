#pragma once

// Truncated exact power series, the exponential generating functions of
// B_{r,1}(n), the coherent-state matrix element of exp(lambda (a^dagger)^r a)
// and a growth-order estimate for the other families.

#include <cstddef>
#include <vector>

#include "genbell/approx.hpp"
#include "genbell/types.hpp"

namespace genbell::generating_functions {

/// c_0 + c_1 x + ... + c_N x^N over the rationals. Binary operations need
/// equal truncation orders.
class PowerSeries {
 public:
  /// The zero series of order `order`.
  explicit PowerSeries(std::size_t order);
  explicit PowerSeries(std::vector<Rational> coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coefficients_[k]; }
  Rational& operator[](std::size_t k) { return coefficients_[k]; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  /// 1/f; needs c_0 != 0.
  PowerSeries inverse() const;
  /// sqrt(f) with c_0 = 1.
  PowerSeries sqrt() const;
  /// exp(f) with c_0 = 0, via n g_n = sum_k k f_k g_{n-k}.
  PowerSeries exp() const;
  /// f(g(x)) with g_0 = 0.
  PowerSeries compose(const PowerSeries& inner) const;
  /// c_n n!, the sequence an EGF encodes.
  std::vector<Rational> egf_values() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const Rational& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// 1/(1 - x), e^x and (1 - d x)^(-1/d) truncated at `order`.
PowerSeries geometric(std::size_t order);
PowerSeries exponential(std::size_t order);
PowerSeries binomial_negative_root(unsigned d, std::size_t order);

/// EGF of B_{r,1}(n): exp{(1 - (r-1) x)^(-1/(r-1)) - 1}. r = 2 uses
/// exp(x/(1-x)), r = 3 uses exp((1 - sqrt(1-2x))/sqrt(1-2x)), larger r the
/// binomial series.
PowerSeries egf_coefficients(unsigned r, std::size_t order);

/// exp(e^x - 1), the classical Bell EGF.
PowerSeries classical_egf_check(std::size_t order);

/// exp{[(1 - lambda (z*)^(r-1) (r-1))^(-1/(r-1)) - 1] |z|^2}. Throws BranchCut
/// when |lambda (z*)^(r-1) (r-1)| >= 1.
Complex matrix_element_closed(unsigned r, const Real& lambda, const Complex& z);

/// <z| exp(lambda (a^dagger)^r a) |z> by applying the exponential series to
/// the coherent state truncated at `cutoff` quanta. The cutoff doubles until
/// two successive truncations agree; TruncationTooSmall past max_cutoff.
ComplexApprox matrix_element_fock(unsigned r, const Real& lambda, const Complex& z, unsigned cutoff,
                                  const PrecisionContext& ctx, unsigned max_cutoff = 4096);

struct MatrixElementCheck {
  Complex closed_form;
  ComplexApprox fock;
  double relative_difference = 0.0;
};

MatrixElementCheck matrix_element_exp(unsigned r, const Real& lambda, const Complex& z, unsigned cutoff,
                                      const PrecisionContext& ctx);

struct GrowthOrder {
  FamilyParams params;
  unsigned t = 0;
  /// Estimated power-law exponent of B(n+1) / (B(n) (n+1)^(t+1)) at the
  /// sample depth; below 1/4 counts as bounded. B_{r,r} carries (log n)^-r
  /// corrections, so deeper samples separate the orders more cleanly.
  double exponent = 0.0;
  bool rigorous = false;
};

/// Smallest t such that sum B(n) x^n / (n!)^(t+1) appears to have a nonzero
/// radius of convergence, judged from the ratio test over n <= depth.
/// Heuristic. depth >= 8.
GrowthOrder growth_order(const FamilyParams& params, unsigned depth);

}  // namespace genbell::generating_functions
