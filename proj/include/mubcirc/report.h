// Copyright 2026 The mubcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MUBCIRC_REPORT_H
#define MUBCIRC_REPORT_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mubcirc {

inline constexpr std::string_view kReportSchema = "mub-report/1";
inline constexpr std::string_view kFamilySchema = "mub-family/1";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parse_output_format(std::string_view name);
std::string_view format_name(OutputFormat format);

struct Param {
    std::string name;
    int64_t value;
};

/// One verified claim: what was checked, on which inputs, and how close it came.
struct CheckRecord {
    std::string check;
    /// Which mathematical claim the check exercises, e.g. "prime-family".
    std::string anchor;
    std::vector<Param> inputs;
    std::string detail;
    double measured = 0;
    double tolerance = 0;
    bool pass = false;
    /// Probes record a measurement without claiming anything; they never fail
    /// a run.
    bool asserted = true;
    double elapsed_ms = 0;
};

struct ReportSummary {
    int64_t checks = 0;
    int64_t passed = 0;
    int64_t failed = 0;
    int64_t probes = 0;
};

struct ReportDocument {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<CheckRecord> records;
    bool include_timings = false;
    double total_elapsed_ms = 0;

    /// Stable sort by (check, input values); independent of evaluation order.
    void sort_records();
    ReportSummary summary() const;
    /// No asserted record failed.
    bool all_pass() const;
};

void write_report(const ReportDocument &report, OutputFormat format, std::ostream &out);

/// Runs `tasks` on up to `parallelism` threads and concatenates their records
/// in task order.
std::vector<CheckRecord> run_tasks(const std::vector<std::function<std::vector<CheckRecord>()>> &tasks,
                                   int parallelism);

}  // namespace mubcirc

#endif
