#pragma once

// Command-line surface: diam, dist, verify, check-lemmas, export.
//
// Exit codes: 0 all checks pass, 1 a verified mismatch, 2 usage or budget
// error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "yoke/core.hpp"
#include "yoke/formulas.hpp"

namespace yoke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct DiameterReport {
  int n = 1;
  int m = 0;
  Family family = Family::Yoke;
  std::int64_t formula_value = 0;
  std::optional<std::int64_t> bfs_value;
  std::string bfs_route;  ///< "all-pairs", "ecc-dyoke-zero" or empty
  /// verify only: all-pairs diameter of Y, when within the all-pairs budget.
  std::optional<std::int64_t> all_pairs_value;
  bool report_all_pairs = false;
  DiameterCaseTag case_tag = DiameterCaseTag::MLeN;
  bool match = true;
  bool skipped = false;
  std::int64_t elapsed_ms = 0;
};

/// One JSON object, fixed key order, no trailing newline.
std::string to_jsonl(const DiameterReport& report);

/// Parses "A..B" (A <= B). Throws Error(ParseError) otherwise.
std::pair<int, int> parse_range(const std::string& text);

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yoke::cli
