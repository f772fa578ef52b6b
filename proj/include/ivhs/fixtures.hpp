#pragma once

// Golden fixtures: each file under the fixture directory names a CLI
// invocation and the values its JSON report must contain.
//
//   {
//     "name": "...", "criterion": "AC1", "description": "...",
//     "argv": ["mu", "plane", "--poly", "x^4+y^4+z^4"],
//     "expect_exit": 0,                       (optional, default 0)
//     "expect": {"/payload/rank": 6, ...},    (JSON pointer -> exact value)
//     "paper_matrix": {                       (optional)
//       "pointer": "/payload/matrix",
//       "row_perm": [...], "col_perm": [...], (printed index -> report index)
//       "entries": [["1", "0"], ...]
//     },
//     "discrepancy": {                        (optional, recorded only)
//       "pointer": "/payload/h1_total", "paper_value": 8, "note": "..."
//     }
//   }
//
// "${FIXTURES}" inside argv expands to the fixture directory.

#include "ivhs/report.hpp"

#include <string>
#include <vector>

namespace ivhs {

struct FixtureResult {
  std::string name;
  std::string criterion;
  bool passed = false;
  std::vector<std::string> failures;
  /// Matrix rows in the printed basis order, when the fixture declares one.
  std::vector<std::string> paper_order_rows;
  Json discrepancy;  // null unless the fixture records one

  Json to_json() const;
};

struct FixtureSummary {
  std::vector<FixtureResult> results;

  bool all_passed() const;
  /// One JSON object per fixture per line, then a summary line.
  std::string render() const;
};

FixtureResult run_fixture(const Json& fixture, const std::string& fixture_dir);

/// Runs every *.json file directly under `fixture_dir`, in file-name order.
FixtureSummary run_fixture_suite(const std::string& fixture_dir);

/// Directory the build was configured with.
std::string default_fixture_dir();

}  // namespace ivhs
