#pragma once

// Versioned output records for the command-line front end. Exact integers
// travel as decimal strings; approximations as value, error bound and a
// rigor flag.

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "genbell/approx.hpp"
#include "genbell/types.hpp"

namespace genbell::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "genbell.output/1";

struct OutputRecord {
  std::string command;
  Json parameters = Json::object();
  /// One flat object per row; this is what CSV output contains.
  Json rows = Json::array();
  /// Scalars that do not fit the row layout (JSON only).
  Json summary = Json::object();
  std::optional<double> timing_seconds;

  Json to_json() const;
  /// Throws InvalidArgument on a schema mismatch or missing field.
  static OutputRecord from_json(const Json& j);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

Json exact(const BigInt& v);
Json exact(const Rational& v);
/// Decimal digits follow the working precision so output is reproducible.
Json approx(const ApproxValue& v);
Json approx(const ComplexApprox& v);
std::string decimal(const Real& v);

enum class Format { Json, Csv };

void write_json(std::ostream& os, const OutputRecord& record);
/// Header from the keys of the first row; nested values are written as
/// compact JSON.
void write_csv(std::ostream& os, const OutputRecord& record);

}  // namespace genbell::cli
