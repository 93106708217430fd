#pragma once

#include <string>
#include <vector>

#include "genbell/approx.hpp"

namespace genbell::cli {

enum class Grid { Small, Full };

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-validation suite. Each check compares two independent routes to the
/// same quantity. The absolute 10% band on the B_{3,1} expansion is not part
/// of it; the monotone trend toward 1 is.
std::vector<Check> run_verification(Grid grid, const PrecisionContext& ctx);

}  // namespace genbell::cli
