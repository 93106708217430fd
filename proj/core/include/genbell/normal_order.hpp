#pragma once

// Exact generalized Stirling and Bell numbers of the boson word
// (a^dagger)^r a^s, realized as x^r (d/dx)^s acting on monomials.

#include <cstddef>
#include <span>
#include <vector>

#include "genbell/types.hpp"

namespace genbell::normal_order {

/// p (p-1) ... (p-s+1); zero when p < s.
BigInt falling_factorial(unsigned long p, unsigned s);

/// Coefficient c with [x^r (d/dx)^s]^n x^m = c x^(m + n(r-s)).
BigInt monomial_coefficient(const FamilyParams& params, unsigned n, unsigned long m);

/// Row n of S_{r,s}(n, k). Nonzero entries occupy k in [s, n s] for n >= 1;
/// the n = 0 row is the single entry S(0, 0) = 1.
class StirlingTable {
 public:
  StirlingTable(FamilyParams params, unsigned n, unsigned min_k, std::vector<BigInt> entries);

  const FamilyParams& params() const { return params_; }
  unsigned n() const { return n_; }
  unsigned min_k() const { return min_k_; }
  unsigned max_k() const { return min_k_ + static_cast<unsigned>(entries_.size()) - 1; }
  /// S(n, k); zero outside [min_k, max_k].
  BigInt at(unsigned k) const;
  std::span<const BigInt> entries() const { return entries_; }
  BigInt row_sum() const;

  friend bool operator==(const StirlingTable&, const StirlingTable&) = default;

 private:
  FamilyParams params_;
  unsigned n_;
  unsigned min_k_;
  std::vector<BigInt> entries_;
};

/// Solves sum_k S(n,k) ff(m,k) = monomial_coefficient(n, m) for m = 0..ns by
/// forward substitution. Throws NonIntegralSolve if a division is inexact.
StirlingTable stirling_table(const FamilyParams& params, unsigned n);

/// B_{r,s}(n) = sum_k S_{r,s}(n,k), with B(0) = 1.
BigInt bell_number(const FamilyParams& params, unsigned n);

class BellSequence {
 public:
  BellSequence(FamilyParams params, std::vector<BigInt> values);

  const FamilyParams& params() const { return params_; }
  std::size_t size() const { return values_.size(); }
  const BigInt& operator[](std::size_t n) const { return values_[n]; }
  std::span<const BigInt> values() const { return values_; }

 private:
  FamilyParams params_;
  std::vector<BigInt> values_;
};

/// B_{r,s}(0..max_n).
BellSequence bell_sequence(const FamilyParams& params, unsigned max_n);

/// Closed form for S_{r,r}(n,k) as an alternating sum, evaluated in exact
/// rationals. Requires r <= k <= r n.
BigInt stirling_rr_closed(unsigned r, unsigned n, unsigned k);

/// Unsigned Lah number n!/k! * C(n-1, k-1), 1 <= k <= n.
BigInt lah_number(unsigned n, unsigned k);

/// Brute-force oracle: builds ((a^dagger)^r a^s)^n as an exact integer matrix
/// on a truncated Fock space of dimension `dim` and reads the table off its
/// matrix elements. Independent of stirling_table's code path. Needs
/// dim >= n s + n (r - s) + n s, else throws TruncationTooSmall.
StirlingTable fock_oracle(const FamilyParams& params, unsigned n, unsigned dim);

}  // namespace genbell::normal_order
