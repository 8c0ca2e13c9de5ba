#pragma once

#include <string>
#include <vector>

#include "foliage/invariants/report.hpp"

namespace foliage {

// Pretty JSON, stable for a fixed case and seed.
std::string report_json(const InvariantReport& report);
std::string tree_json(const ReductionTree& tree);
// One node per infinitely near point, one boxed node per divisor component.
std::string tree_dot(const ReductionTree& tree);
std::string rows_json(const std::vector<IdentityRow>& rows);
// Fixed-width verdict table.
std::string rows_table(const std::vector<IdentityRow>& rows);

}  // namespace foliage
