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

// mubcirc: build and verify mutually unbiased bases from circulant matrices.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mubcirc/commands.h"

namespace {

using namespace mubcirc;

struct CommonFlags {
    double tol = 0;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App *app, CommonOptions &common, CommonFlags &flags) {
    app->add_option("--tol", flags.tol, "Absolute tolerance (default 1e-9*sqrt(d), or MUB_DEFAULT_TOL)");
    app->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--parallelism", common.parallelism, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--dense-cap", common.dense_cap, "Largest dimension materialized densely")
        ->check(CLI::PositiveNumber);
    app->add_option("--output,-o", flags.output, "Write to FILE instead of stdout");
    app->add_flag("--timings", common.timings, "Include wall-clock timings in the report");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mutually unbiased bases from circulant matrices"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    BuildOptions build;
    CommonFlags build_flags;
    CLI::App *build_cmd = app.add_subcommand("build", "Construct the family for one dimension");
    build_cmd->add_option("--dim,--d", build.dimension, "Dimension d >= 2")->required();
    add_common(build_cmd, build.common, build_flags);

    VerifyOptions verify;
    CommonFlags verify_flags;
    CLI::App *verify_cmd = app.add_subcommand("verify", "Verify families over a dimension range");
    verify_cmd->add_option("--dims,--dim,--d", verify.dims, "Dimensions, e.g. 2..30 or 3,5,7")->required();
    verify_cmd->add_option("--expect-negative", verify.expect_negative, "Known failure that must be detected");
    verify_cmd->add_option("--strategy", verify.strategy, "Product path")
        ->check(CLI::IsMember({"structured", "dense"}));
    add_common(verify_cmd, verify.common, verify_flags);

    GaussOptions gauss;
    CommonFlags gauss_flags;
    CLI::App *gauss_cmd = app.add_subcommand("gauss", "Gauss-sum sweeps");
    gauss_cmd->add_option("mode", gauss.mode, "identity, reciprocity, even, trace-d or columns")->required();
    gauss_cmd->add_option("--d,--dims", gauss.dims, "Dimensions");
    gauss_cmd->add_option("--l", gauss.l, "Multipliers for identity mode");
    gauss_cmd->add_option("--j", gauss.j, "Shifts for identity mode");
    gauss_cmd->add_option("--k", gauss.k, "Powers for trace-d and columns modes");
    gauss_cmd->add_option("--a", gauss.a, "Quadratic coefficients for reciprocity mode");
    gauss_cmd->add_option("--b", gauss.b, "Linear coefficients for reciprocity mode (default -2d..2d)");
    gauss_cmd->add_option("--m", gauss.m, "Column offsets for columns mode");
    gauss_cmd->add_flag("--allow-noncoprime", gauss.allow_noncoprime, "Record non-coprime inputs as probes");
    add_common(gauss_cmd, gauss.common, gauss_flags);

    SeqOptions seq;
    CommonFlags seq_flags;
    CLI::App *seq_cmd = app.add_subcommand("seq", "Bi-unimodularity of quadratic-phase sequences");
    seq_cmd->add_option("kind", seq.kind, "gauss (odd d) or square (even d)");
    seq_cmd->add_option("--d,--dims", seq.dims, "Dimensions")->required();
    seq_cmd->add_option("--k", seq.k, "Multipliers (default 1..d-1)");
    add_common(seq_cmd, seq.common, seq_flags);

    SearchOptions search;
    CommonFlags search_flags;
    CLI::App *search_cmd = app.add_subcommand("search", "Exhaustive circulant Hadamard search over roots of unity");
    search_cmd->add_option("--d,--dim", search.dimension, "Dimension")->required();
    search_cmd->add_option("--alphabet", search.alphabet, "Order m of the root-of-unity alphabet")->required();
    add_common(search_cmd, search.common, search_flags);

    SweepOptions sweep;
    CommonFlags sweep_flags;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Every check over a dimension range");
    sweep_cmd->add_option("--dims,--dim,--d", sweep.dims, "Dimensions")->required();
    sweep_cmd->add_flag("--perf", sweep.perf, "Add the dense versus circulant timing check");
    add_common(sweep_cmd, sweep.common, sweep_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    auto finish_common = [](CLI::App *cmd, CommonOptions &common, const CommonFlags &flags) {
        if (cmd->count("--tol") > 0) {
            common.tol = flags.tol;
        }
        common.format = parse_output_format(flags.format);
    };

    CLI::App *active = app.get_subcommands().front();
    CommonFlags *flags = nullptr;
    CommonOptions *common = nullptr;
    if (active == build_cmd) {
        flags = &build_flags, common = &build.common;
    } else if (active == verify_cmd) {
        flags = &verify_flags, common = &verify.common;
    } else if (active == gauss_cmd) {
        flags = &gauss_flags, common = &gauss.common;
    } else if (active == seq_cmd) {
        flags = &seq_flags, common = &seq.common;
    } else if (active == search_cmd) {
        flags = &search_flags, common = &search.common;
    } else {
        flags = &sweep_flags, common = &sweep.common;
    }
    finish_common(active, *common, *flags);
    if (gauss.mode == "traceD") {
        gauss.mode = "trace-d";
    }

    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!flags->output.empty()) {
        file.open(flags->output);
        if (!file) {
            std::cerr << "error: cannot open " << flags->output << " for writing\n";
            return kExitUsage;
        }
        out = &file;
    }

    if (active == build_cmd) {
        return run_build(build, *out, std::cerr);
    }
    if (active == verify_cmd) {
        return run_verify(verify, *out, std::cerr);
    }
    if (active == gauss_cmd) {
        return run_gauss(gauss, *out, std::cerr);
    }
    if (active == seq_cmd) {
        return run_seq(seq, *out, std::cerr);
    }
    if (active == search_cmd) {
        return run_search(search, *out, std::cerr);
    }
    return run_sweep(sweep, *out, std::cerr);
}
