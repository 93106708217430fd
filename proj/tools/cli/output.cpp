#include "output.hpp"

#include <cmath>

namespace genbell::cli {

Json OutputRecord::to_json() const {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["parameters"] = parameters;
  j["rows"] = rows;
  j["summary"] = summary;
  if (timing_seconds) j["timing_seconds"] = *timing_seconds;
  return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema) {
    throw Error(ErrorCode::InvalidArgument, std::string("expected schema ") + kSchema);
  }
  OutputRecord out;
  try {
    out.command = j.at("command").get<std::string>();
    out.parameters = j.at("parameters");
    out.rows = j.at("rows");
    out.summary = j.at("summary");
    if (j.contains("timing_seconds")) out.timing_seconds = j["timing_seconds"].get<double>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed output record: ") + e.what());
  }
  return out;
}

Json exact(const BigInt& v) { return v.get_str(); }

Json exact(const Rational& v) { return v.get_str(); }

std::string decimal(const Real& v) {
  const auto digits = static_cast<int>(std::floor(static_cast<double>(v.precision()) * 0.30103));
  return v.to_string(std::max(digits, 17));
}

Json approx(const ApproxValue& v) {
  return Json{{"value", decimal(v.value)}, {"error_bound", v.error_bound.to_string(6)}, {"rigorous", v.rigorous}};
}

Json approx(const ComplexApprox& v) {
  return Json{{"re", decimal(v.value.re)},
              {"im", decimal(v.value.im)},
              {"error_bound", v.error_bound.to_string(6)},
              {"rigorous", v.rigorous}};
}

void write_json(std::ostream& os, const OutputRecord& record) { os << record.to_json().dump(2) << '\n'; }

namespace {

std::string csv_field(const Json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_csv(std::ostream& os, const OutputRecord& record) {
  if (record.rows.empty()) return;
  std::vector<std::string> header;
  for (const auto& [key, _] : record.rows.front().items()) header.push_back(key);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const Json& row : record.rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      os << (i ? "," : "");
      if (row.contains(header[i])) os << csv_field(row[header[i]]);
    }
    os << '\n';
  }
}

}  // namespace genbell::cli
