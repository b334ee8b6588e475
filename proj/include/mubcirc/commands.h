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

#ifndef MUBCIRC_COMMANDS_H
#define MUBCIRC_COMMANDS_H

// Command implementations behind the mubcirc CLI. Each `*_report` function
// assembles a report and throws UsageError on bad configuration; each `run_*`
// function writes the output and maps the outcome onto the exit code contract.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mubcirc/linalg.h"
#include "mubcirc/mub.h"
#include "mubcirc/report.h"

namespace mubcirc {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, ranges or preconditions; exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses "7", "2..30", "1,3,5" or mixtures such as "1..3,7".
std::vector<int64_t> parse_int_list(std::string_view text);

struct CommonOptions {
    /// Absolute tolerance; when unset, MUB_DEFAULT_TOL or default_tolerance(d).
    std::optional<double> tol;
    OutputFormat format = OutputFormat::kJson;
    int parallelism = 1;
    int64_t dense_cap = kDefaultDenseCap;
    bool timings = false;
};

double resolve_tolerance(const CommonOptions &common, int64_t d);

struct BuildOptions {
    int64_t dimension = 0;
    CommonOptions common;
};

struct VerifyOptions {
    std::string dims;
    /// Expected failures that must be present; only "r-squared" is known.
    std::vector<std::string> expect_negative;
    /// "structured" or "dense".
    std::string strategy = "structured";
    CommonOptions common;
};

struct GaussOptions {
    /// identity, reciprocity, even, trace-d or columns.
    std::string mode;
    std::string dims;
    std::string l;
    std::string j;
    std::string k;
    std::string a;
    std::string b;
    std::string m;
    bool allow_noncoprime = false;
    CommonOptions common;
};

struct SeqOptions {
    /// gauss (odd d) or square (even d).
    std::string kind = "gauss";
    std::string dims;
    std::string k;
    CommonOptions common;
};

struct SearchOptions {
    int64_t dimension = 0;
    int64_t alphabet = 0;
    CommonOptions common;
};

struct SweepOptions {
    std::string dims;
    bool perf = false;
    CommonOptions common;
};

/// Serializes a family as JSON, CSV or text.
void write_family(const MubFamily &family, OutputFormat format, std::ostream &out);

ReportDocument verify_report(const VerifyOptions &options);
ReportDocument gauss_report(const GaussOptions &options);
ReportDocument seq_report(const SeqOptions &options);
ReportDocument search_report(const SearchOptions &options);
ReportDocument sweep_report(const SweepOptions &options);

int run_build(const BuildOptions &options, std::ostream &out, std::ostream &err);
int run_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);
int run_gauss(const GaussOptions &options, std::ostream &out, std::ostream &err);
int run_seq(const SeqOptions &options, std::ostream &out, std::ostream &err);
int run_search(const SearchOptions &options, std::ostream &out, std::ostream &err);
int run_sweep(const SweepOptions &options, std::ostream &out, std::ostream &err);

/// Dense versus circulant product timing at dimension d on random circulants.
struct CirculantSpeedup {
    int64_t dimension;
    double dense_ms;
    double circulant_ms;
    double factor;
    /// Worst entrywise disagreement between the two products.
    double max_difference;
};

CirculantSpeedup measure_circulant_speedup(int64_t d, int repetitions = 3);

}  // namespace mubcirc

#endif
