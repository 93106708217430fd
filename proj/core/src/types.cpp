#include "genbell/types.hpp"

namespace genbell {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonIntegralSolve: return "NonIntegralSolve";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::MaxTermsExceeded: return "MaxTermsExceeded";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::IntegerOrderUnsupported: return "IntegerOrderUnsupported";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::TailBoundFailure: return "TailBoundFailure";
    case ErrorCode::InsufficientSequence: return "InsufficientSequence";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

FamilyParams::FamilyParams(unsigned r, unsigned s) : r_(r), s_(s) {
  if (s < 1 || r < s) {
    throw Error(ErrorCode::InvalidArgument,
                "family parameters need r >= s >= 1, got (" + std::to_string(r) + "," +
                    std::to_string(s) + ")");
  }
}

std::string to_string(const FamilyParams& p) {
  return "(" + std::to_string(p.r()) + "," + std::to_string(p.s()) + ")";
}

}  // namespace genbell
