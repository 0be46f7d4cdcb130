// Copyright 2026 The cohctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named reproduction cases with deterministic, seed-driven reports.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohctl/io.hpp"

namespace cohctl {

inline constexpr std::uint64_t kDefaultSeed = 7;

struct CaseOptions {
  int d = 0;                 // 0: case default
  int trials = 0;            // 0: case default
  std::uint64_t seed = kDefaultSeed;
  double tol = 0.0;          // 0: case default
  bool parallel = false;     // evaluate pre-generated trials concurrently
};

struct CaseReport {
  std::string case_id;
  std::variant<double, ComplexMatrix> computed = 0.0;
  std::optional<double> expected;   // nullopt prints as "n/a"
  std::optional<double> abs_error;  // nullopt prints as "n/a"
  double tolerance = 0.0;
  bool passed = false;
  std::int64_t runtime_ms = 0;
  io::Json details = io::Json::object();
};

/// Registered case ids, in execution order for `--all`.
const std::vector<std::string_view>& registered_cases();

/// Errc::unknown_case for ids not in registered_cases().
CaseReport run_case(std::string_view case_id, const CaseOptions& options);

enum class ReportFormat { json, csv, pretty };
ReportFormat report_format_from_string(std::string_view name);

/// runtime_ms is emitted only when `timing` is set, so that reports for
/// identical inputs and seed are byte-identical.
io::Json report_to_json(const CaseReport& report, bool timing);
std::string format_reports(const std::vector<CaseReport>& reports,
                           const CaseOptions& options, ReportFormat format,
                           bool timing);

}  // namespace cohctl
