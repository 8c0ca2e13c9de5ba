#pragma once

#include <string>
#include <vector>

#include "foliage/invariants/report.hpp"

namespace foliage {

// Names of every identity row, in evaluation order.
const std::vector<std::string>& identity_names();

// Evaluates the rows selected by `checks` (all when empty) on a filled
// report. Failures are recorded, never thrown.
std::vector<IdentityRow> verify_identities(const InvariantReport& report, const std::vector<std::string>& checks = {});

}  // namespace foliage
