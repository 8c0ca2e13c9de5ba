#pragma once

#include <string>
#include <vector>

#include "foliage/invariants/report.hpp"

namespace foliage {

// A foliation, an optional divisor and probes, and analysis options.
struct CaseFile {
  std::string name;
  std::string p_text, q_text;
  OneForm form;
  SeparatrixDivisor divisor;
  std::vector<DivisorTerm> probes;
  AnalyzeOptions options;
};

// JSON schema:
//   {"name": "...", "form": {"P": "...", "Q": "..."},
//    "curves": [{"name": "...", "equation": "...", "weight": 1}],
//    "probes": [{"name": "...", "equation": "..."}],
//    "options": {"mode": "polar", "seed": 0, "max_depth": 64, "checks": "all"}}
// Only "form" is required. Throws InputError.
CaseFile parse_case(const std::string& json_text);
// "-" reads stdin.
CaseFile load_case(const std::string& path);

ChiMode parse_mode(const std::string& text);
std::string mode_name(ChiMode mode);
// Comma separated row names; "all" or empty selects every row.
std::vector<std::string> parse_checks(const std::string& text);

}  // namespace foliage
