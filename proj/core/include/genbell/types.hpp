#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace genbell {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  NonIntegralSolve,
  NonIntegralResult,
  TruncationTooSmall,
  MaxTermsExceeded,
  Divergent,
  UnsupportedShape,
  IntegerOrderUnsupported,
  UnsupportedKind,
  TailBoundFailure,
  InsufficientSequence,
  BranchCut,
  UnsupportedFamily,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` says which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// The (r, s) of the boson word (a^dagger)^r a^s. Only r >= s >= 1 is valid.
class FamilyParams {
 public:
  FamilyParams(unsigned r, unsigned s);

  unsigned r() const { return r_; }
  unsigned s() const { return s_; }
  /// Net creation count per application, r - s.
  unsigned shift() const { return r_ - s_; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  unsigned r_;
  unsigned s_;
};

std::string to_string(const FamilyParams& p);

}  // namespace genbell
