#pragma once

// Formulas that had to be corrected, or are kept with a recorded caveat,
// each tied to the test that adjudicates it.

#include <span>
#include <string_view>

namespace genbell {

struct Erratum {
  std::string_view id;
  std::string_view formula;
  std::string_view observation;
  std::string_view resolution;
  std::string_view test_id;
};

std::span<const Erratum> errata();

}  // namespace genbell
