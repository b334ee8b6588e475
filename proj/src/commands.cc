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

#include "mubcirc/commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "mubcirc/gauss.h"
#include "mubcirc/identities.h"
#include "mubcirc/sequences.h"

namespace mubcirc {

namespace {

using Clock = std::chrono::steady_clock;
using Task = std::function<std::vector<CheckRecord>()>;

double milliseconds_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

int64_t parse_int(const std::string &s) {
    size_t used = 0;
    int64_t v;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception &) {
        throw UsageError("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) {
        throw UsageError("expected an integer, got '" + s + "'");
    }
    return v;
}

std::vector<int64_t> require_list(const std::string &text, const char *flag) {
    if (trim(text).empty()) {
        throw UsageError(std::string("missing required ") + flag);
    }
    return parse_int_list(text);
}

// Times `fn`, which returns a deviation, into a record.
CheckRecord timed_record(std::string check, std::string anchor, std::vector<Param> inputs, double tol,
                         const std::function<double()> &fn) {
    auto start = Clock::now();
    double measured = fn();
    CheckRecord r;
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.inputs = std::move(inputs);
    r.measured = measured;
    r.tolerance = tol;
    r.pass = measured <= tol;
    r.elapsed_ms = milliseconds_since(start);
    return r;
}

std::string_view family_anchor(Recipe recipe) {
    switch (recipe) {
        case Recipe::kPrime:
            return "prime-family";
        case Recipe::kDTwo:
            return "dim-two-family";
        case Recipe::kOddComposite:
            return "odd-composite-family";
        case Recipe::kEven:
            return "even-family";
    }
    return "family";
}

// Number of bases each dimension class is claimed to admit, derived from the
// dimension alone (not from the builder).
int64_t claimed_family_size(int64_t d) {
    if (is_prime(d)) {
        return d + 1;
    }
    if (d % 2 == 0) {
        return 3;
    }
    return smallest_divisor(d) + 1;
}

ProductStrategy parse_strategy(const std::string &name) {
    if (name == "structured") {
        return ProductStrategy::kStructured;
    }
    if (name == "dense") {
        return ProductStrategy::kDense;
    }
    throw UsageError("unknown product strategy '" + name + "' (expected structured or dense)");
}

std::vector<int64_t> parse_dimensions(const std::string &text, int64_t dense_cap) {
    std::vector<int64_t> dims = require_list(text, "--dims");
    for (int64_t d : dims) {
        if (d < 2) {
            throw UsageError("dimensions must be >= 2, got " + std::to_string(d));
        }
        if (d > dense_cap) {
            throw UsageError("dimension " + std::to_string(d) + " exceeds --dense-cap " + std::to_string(dense_cap));
        }
    }
    return dims;
}

std::vector<CheckRecord> family_records(int64_t d, double tol, ProductStrategy strategy, int64_t dense_cap) {
    std::vector<CheckRecord> records;
    auto start = Clock::now();
    MubFamily family = build_family(d, dense_cap);
    double build_ms = milliseconds_since(start);
    std::string anchor(family_anchor(family.recipe));

    CheckRecord size;
    size.check = "family.size";
    size.anchor = anchor;
    size.inputs = {{"d", d}};
    size.detail = "recipe=" + std::string(recipe_name(family.recipe)) +
                  " claimed=" + std::to_string(claimed_family_size(d));
    size.measured = static_cast<double>(family.bases.size());
    size.tolerance = 0;
    size.pass = static_cast<int64_t>(family.bases.size()) == claimed_family_size(d);
    size.elapsed_ms = build_ms;
    records.push_back(size);

    UnbiasednessReport report = verify_family(family, tol, strategy);
    for (const auto &b : report.bases) {
        CheckRecord r;
        r.check = "family.basis_hadamard";
        r.anchor = anchor;
        r.inputs = {{"d", d}, {"basis", static_cast<int64_t>(b.index)}};
        r.detail = b.label;
        r.measured = b.max_deviation;
        r.tolerance = tol;
        r.pass = b.pass;
        r.elapsed_ms = b.elapsed_ms;
        records.push_back(std::move(r));
    }
    for (const auto &p : report.pairs) {
        CheckRecord r;
        r.check = "family.pair_unbiased";
        r.anchor = anchor;
        r.inputs = {{"d", d}, {"first", static_cast<int64_t>(p.first)}, {"second", static_cast<int64_t>(p.second)}};
        std::ostringstream detail;
        detail << "(" << p.first_label << ")^*(" << p.second_label << ") |entry| in [" << std::setprecision(12)
               << p.min_modulus << ", " << p.max_modulus << "]";
        r.detail = detail.str();
        r.measured = p.max_deviation;
        r.tolerance = tol;
        r.pass = p.pass;
        r.elapsed_ms = p.elapsed_ms;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<CheckRecord> invariant_records(int64_t d, double tol) {
    std::vector<CheckRecord> records;
    std::vector<Param> in = {{"d", d}};
    records.push_back(timed_record("identity.weyl_commutation", "weyl-commutation", in, tol,
                                   [d] { return weyl_commutation_deviation(d); }));
    records.push_back(timed_record("identity.fourier_diagonalizes_shift", "fourier-diagonalizes-circulants", in, tol,
                                   [d] { return fourier_shift_diagonalization_deviation(d); }));
    records.push_back(timed_record("identity.fourier_square_reversal", "fourier-fourth-power", in, tol,
                                   [d] { return fourier_square_reversal_deviation(d); }));
    records.push_back(timed_record("identity.fourier_fourth_power", "fourier-fourth-power", in, tol,
                                   [d] { return fourier_fourth_power_deviation(d); }));
    records.push_back(timed_record("identity.rotation_commutes_with_shift", "rotation-commutes-with-shift", in, tol,
                                   [d] { return rotation_shift_commutator_deviation(d); }));
    records.push_back(timed_record("identity.rotation_diagonalizes_vu", "rotation-diagonalizes-VU", in, tol,
                                   [d] { return rotation_conjugation_deviation(d, 1); }));
    if (d % 2 == 1) {
        records.push_back(timed_record("identity.rotation_factorization", "rotation-factorization", in, tol,
                                       [d] { return rotation_factorization_deviation(d); }));
        records.push_back(timed_record("identity.rotation_period", "rotation-factorization", in, tol,
                                       [d] { return rotation_period_deviation(d); }));
        records.push_back(timed_record("identity.alpha_unit_modulus", "rotation-factorization", in, tol,
                                       [d] { return std::abs(std::abs(rotation_alpha(d)) - 1.0); }));
    } else {
        records.push_back(timed_record("identity.even_fourier_rotation_hadamard", "even-family", in, tol,
                                       [d] { return even_fourier_rotation_hadamard_deviation(d); }));
    }
    return records;
}

CheckRecord negative_record(int64_t d, double tol) {
    auto start = Clock::now();
    NegativeCheckRecord n = negative_check_even(d, tol);
    CheckRecord r;
    r.check = "negative.rotation_squared_not_hadamard";
    r.anchor = "even-rotation-squared";
    r.inputs = {{"d", d}};
    std::ostringstream detail;
    detail << "unitary=" << (n.unitary ? "yes" : "no") << " circulant=" << (n.circulant ? "yes" : "no")
           << " hadamard=" << (n.hadamard ? "yes" : "no") << " offending_rows=";
    const size_t shown = std::min<size_t>(n.offending_rows.size(), 4);
    for (size_t i = 0; i < shown; i++) {
        detail << (i ? ";" : "") << n.offending_rows[i] << ":" << std::setprecision(6) << n.offending_moduli[i];
    }
    if (shown < n.offending_rows.size()) {
        detail << ";... (" << n.offending_rows.size() << " rows)";
    }
    r.detail = detail.str();
    // The Hadamard deviation has to exceed tol for the failure to count.
    r.measured = n.hadamard_deviation;
    r.tolerance = tol;
    r.pass = n.failure_detected();
    r.elapsed_ms = milliseconds_since(start);
    return r;
}

std::vector<CheckRecord> structure_records(int64_t d, double tol) {
    std::vector<CheckRecord> records;
    if (d % 2 == 0) {
        return records;
    }
    // The O(d^4) sweeps stay on small dimensions.
    if (d <= 31) {
        for (int64_t k = 0; k <= d; k++) {
            records.push_back(timed_record("identity.rotation_conjugation_power", "rotation-conjugation-powers",
                                           {{"d", d}, {"k", k}}, tol,
                                           [d, k] { return rotation_conjugation_deviation(d, k); }));
        }
        for (int64_t k = 0; k < d; k++) {
            records.push_back(timed_record("identity.pk_rotation_relation", "pk-rotation-relation",
                                           {{"d", d}, {"k", k}}, tol,
                                           [d, k] { return pk_rotation_relation_deviation(d, k); }));
        }
    }
    if (is_prime(d)) {
        for (int64_t low = 1; low < d - 1; low++) {
            if (d > 31 && low > 1) {
                break;
            }
            for (int64_t high = low + 1; high <= d - 1; high++) {
                auto start = Clock::now();
                PairStructureRecord p = check_pair_product_structure(d, low, high, tol);
                CheckRecord r;
                r.check = "identity.pair_product_structure";
                r.anchor = "prime-family";
                r.inputs = {{"d", d}, {"k_low", low}, {"k_high", high}};
                r.measured = std::max(p.power_deviation, p.fourier_deviation);
                r.tolerance = tol;
                r.pass = p.pass;
                r.elapsed_ms = milliseconds_since(start);
                records.push_back(std::move(r));
            }
        }
    }
    return records;
}

std::vector<CheckRecord> gauss_sweep_records(int64_t d, double tol) {
    std::vector<CheckRecord> records;
    if (d % 2 == 0) {
        records.push_back(timed_record("gauss.even", "even-gauss-sum", {{"d", d}}, tol,
                                       [d] { return verify_even_gauss(d).deviation; }));
        return records;
    }
    for (int64_t l = 1; l < d; l++) {
        if (gcd(l, d) != 1) {
            continue;
        }
        for (int64_t j = 0; j < d; j++) {
            records.push_back(timed_record("gauss.identity", "gauss-identity", {{"d", d}, {"l", l}, {"j", j}}, tol,
                                           [=] { return verify_identity_gauss(d, l, j).deviation; }));
        }
        records.push_back(timed_record("gauss.trace_d", "trace-D", {{"d", d}, {"k", l}}, tol,
                                       [=] { return verify_trace_D(d, l).deviation; }));
    }
    return records;
}

ReportDocument finish(ReportDocument report, std::vector<Task> tasks, const CommonOptions &common,
                      Clock::time_point start) {
    report.records = run_tasks(tasks, common.parallelism);
    report.sort_records();
    report.include_timings = common.timings;
    report.total_elapsed_ms = milliseconds_since(start);
    return report;
}

nlohmann::json common_config(const CommonOptions &common) {
    nlohmann::json j;
    j["tol"] = common.tol ? nlohmann::json(*common.tol) : nlohmann::json(nullptr);
    j["parallelism"] = common.parallelism;
    j["dense_cap"] = common.dense_cap;
    j["format"] = std::string(format_name(common.format));
    return j;
}

void validate_common(const CommonOptions &common) {
    if (common.tol && !(*common.tol > 0 && std::isfinite(*common.tol))) {
        throw UsageError("--tol must be a positive number");
    }
    if (common.parallelism < 1) {
        throw UsageError("--parallelism must be >= 1");
    }
    if (common.dense_cap < 1) {
        throw UsageError("--dense-cap must be >= 1");
    }
}

template <typename Fn>
int run_reporting(const CommonOptions &common, std::ostream &out, std::ostream &err, Fn make_report) {
    try {
        ReportDocument report = make_report();
        write_report(report, common.format, out);
        return report.all_pass() ? kExitPass : kExitFailure;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "verification error: " << e.what() << "\n";
        return kExitFailure;
    }
}

std::string exponents_text(const std::vector<int64_t> &exponents) {
    std::string s = "(";
    for (size_t i = 0; i < exponents.size(); i++) {
        s += (i ? "," : "") + std::to_string(exponents[i]);
    }
    return s + ")";
}

}  // namespace

std::vector<int64_t> parse_int_list(std::string_view text) {
    std::vector<int64_t> values;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            throw UsageError("empty item in list '" + s + "'");
        }
        size_t dots = item.find("..");
        if (dots == std::string::npos) {
            values.push_back(parse_int(item));
            continue;
        }
        int64_t lo = parse_int(trim(item.substr(0, dots)));
        int64_t hi = parse_int(trim(item.substr(dots + 2)));
        if (lo > hi) {
            throw UsageError("range '" + item + "' is not ordered");
        }
        if (hi - lo > 10'000'000) {
            throw UsageError("range '" + item + "' is too large");
        }
        for (int64_t v = lo; v <= hi; v++) {
            values.push_back(v);
        }
    }
    if (values.empty()) {
        throw UsageError("empty list");
    }
    return values;
}

double resolve_tolerance(const CommonOptions &common, int64_t d) {
    if (common.tol) {
        if (!(*common.tol > 0) || !std::isfinite(*common.tol)) {
            throw UsageError("--tol must be a positive number");
        }
        return *common.tol;
    }
    if (const char *env = std::getenv("MUB_DEFAULT_TOL"); env != nullptr && *env != '\0') {
        std::string text(env);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != text.size() || !(v > 0) || !std::isfinite(v)) {
            throw UsageError("MUB_DEFAULT_TOL must be a positive number, got '" + text + "'");
        }
        return v;
    }
    return default_tolerance(d);
}

void write_family(const MubFamily &family, OutputFormat format, std::ostream &out) {
    const int64_t d = family.dimension;
    const double hadamard_scale = 1.0 / std::sqrt(static_cast<double>(d));
    struct Scaled {
        const LabeledBasis *basis;
        double scale;
    };
    std::vector<Scaled> scaled;
    for (const auto &b : family.bases) {
        // Factor d^{-1/2} out when every entry has that modulus, leaving pure phases.
        bool flat = hadamard_modulus_deviation(b.matrix) <= 1e-12;
        scaled.push_back({&b, flat ? hadamard_scale : 1.0});
    }

    switch (format) {
        case OutputFormat::kJson: {
            nlohmann::json doc;
            doc["schema"] = std::string(kFamilySchema);
            doc["tool"] = "mubcirc";
            doc["version"] = std::string(kToolVersion);
            doc["dimension"] = d;
            doc["recipe"] = std::string(recipe_name(family.recipe));
            doc["bases"] = nlohmann::json::array();
            for (const auto &s : scaled) {
                nlohmann::json entries = nlohmann::json::array();
                for (const auto &e : s.basis->matrix.entries()) {
                    entries.push_back({e.real() / s.scale, e.imag() / s.scale});
                }
                doc["bases"].push_back({
                    {"label", s.basis->label},
                    {"circulant", s.basis->circulant.has_value()},
                    {"scale", s.scale},
                    {"entries", entries},
                });
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::kCsv: {
            out << "basis,label,row,col,scale,re,im\n";
            for (size_t i = 0; i < scaled.size(); i++) {
                const auto &m = scaled[i].basis->matrix;
                for (int64_t r = 0; r < d; r++) {
                    for (int64_t c = 0; c < d; c++) {
                        out << i << ',' << scaled[i].basis->label << ',' << r << ',' << c << ','
                            << std::setprecision(17) << scaled[i].scale << ',' << m(r, c).real() / scaled[i].scale
                            << ',' << m(r, c).imag() / scaled[i].scale << "\n";
                    }
                }
            }
            break;
        }
        case OutputFormat::kText: {
            out << "dimension " << d << ", recipe " << recipe_name(family.recipe) << ", " << family.bases.size()
                << " bases\n";
            for (const auto &s : scaled) {
                out << "\n" << s.basis->label << " = " << std::setprecision(6) << s.scale << " *\n";
                for (int64_t r = 0; r < d; r++) {
                    out << "  ";
                    for (int64_t c = 0; c < d; c++) {
                        Complex e = s.basis->matrix(r, c) / s.scale;
                        out << std::fixed << std::setprecision(4) << std::setw(8) << e.real()
                            << (e.imag() < 0 ? "-" : "+") << std::setw(6) << std::abs(e.imag()) << "i ";
                    }
                    out << std::defaultfloat << "\n";
                }
            }
            break;
        }
    }
}

ReportDocument verify_report(const VerifyOptions &options) {
    auto start = Clock::now();
    const CommonOptions &common = options.common;
    validate_common(common);
    std::vector<int64_t> dims = parse_dimensions(options.dims, common.dense_cap);
    ProductStrategy strategy = parse_strategy(options.strategy);
    for (const auto &name : options.expect_negative) {
        if (name != "r-squared") {
            throw UsageError("unknown expected negative '" + name + "' (known: r-squared)");
        }
        bool any_even = std::any_of(dims.begin(), dims.end(), [](int64_t d) { return d >= 4 && d % 2 == 0; });
        if (!any_even) {
            throw UsageError("--expect-negative r-squared needs an even dimension >= 4 in --dims");
        }
    }

    ReportDocument report;
    report.command = "verify";
    report.config = common_config(common);
    report.config["dims"] = options.dims;
    report.config["strategy"] = options.strategy;
    report.config["expect_negative"] = options.expect_negative;

    std::vector<Task> tasks;
    for (int64_t d : dims) {
        double tol = resolve_tolerance(common, d);
        int64_t cap = common.dense_cap;
        tasks.push_back([=] {
            std::vector<CheckRecord> records = family_records(d, tol, strategy, cap);
            for (auto &r : invariant_records(d, tol)) {
                records.push_back(std::move(r));
            }
            if (d >= 4 && d % 2 == 0) {
                records.push_back(negative_record(d, tol));
            }
            return records;
        });
    }
    return finish(std::move(report), std::move(tasks), common, start);
}

ReportDocument gauss_report(const GaussOptions &options) {
    auto start = Clock::now();
    const CommonOptions &common = options.common;
    validate_common(common);
    ReportDocument report;
    report.command = "gauss";
    report.config = common_config(common);
    report.config["mode"] = options.mode;
    report.config["d"] = options.dims;
    for (const auto &[key, value] : std::map<std::string, std::string>{
             {"l", options.l}, {"j", options.j}, {"k", options.k}, {"a", options.a}, {"b", options.b}, {"m", options.m}}) {
        if (!value.empty()) {
            report.config[key] = value;
        }
    }
    report.config["allow_noncoprime"] = options.allow_noncoprime;

    std::vector<Task> tasks;
    const std::string &mode = options.mode;
    if (mode == "identity" || mode == "trace-d") {
        std::vector<int64_t> dims = require_list(options.dims, "--d");
        std::vector<int64_t> odd;
        std::copy_if(dims.begin(), dims.end(), std::back_inserter(odd), [](int64_t d) { return d >= 3 && d % 2; });
        if (odd.empty()) {
            throw UsageError("gauss " + mode + " needs at least one odd d >= 3");
        }
        const std::string &coefficients = mode == "identity" ? options.l : options.k;
        std::vector<int64_t> given = coefficients.empty() ? std::vector<int64_t>{} : parse_int_list(coefficients);
        std::vector<int64_t> shifts = options.j.empty() ? std::vector<int64_t>{} : parse_int_list(options.j);
        for (int64_t d : odd) {
            std::vector<int64_t> ls;
            if (given.empty()) {
                for (int64_t l = 1; l < d; l++) {
                    if (gcd(l, d) == 1) {
                        ls.push_back(l);
                    }
                }
            } else {
                for (int64_t l : given) {
                    if (gcd(l, d) != 1 && !options.allow_noncoprime) {
                        throw UsageError("gcd(" + std::to_string(l) + ", " + std::to_string(d) +
                                         ") != 1; pass --allow-noncoprime to probe it");
                    }
                    ls.push_back(l);
                }
            }
            std::vector<int64_t> js;
            if (mode == "identity") {
                if (shifts.empty()) {
                    for (int64_t j = 0; j < d; j++) {
                        js.push_back(j);
                    }
                } else {
                    for (int64_t j : shifts) {
                        if (j < 0 || j >= d) {
                            throw UsageError("--j values must lie in [0, d)");
                        }
                        js.push_back(j);
                    }
                }
            }
            double tol = resolve_tolerance(common, d);
            tasks.push_back([=] {
                std::vector<CheckRecord> records;
                for (int64_t l : ls) {
                    bool asserted = gcd(l, d) == 1;
                    if (mode == "identity") {
                        for (int64_t j : js) {
                            CheckRecord r = timed_record("gauss.identity", "gauss-identity",
                                                         {{"d", d}, {"l", l}, {"j", j}}, tol,
                                                         [=] { return probe_identity_gauss(d, l, j).deviation; });
                            r.asserted = asserted;
                            records.push_back(std::move(r));
                        }
                    } else {
                        CheckRecord r = timed_record("gauss.trace_d", "trace-D", {{"d", d}, {"k", l}}, tol, [=] {
                            Complex trace{0, 0};
                            for (const auto &v : build_D(d).pow(l).values()) {
                                trace += v;
                            }
                            return std::abs(std::abs(trace) - std::sqrt(static_cast<double>(d)));
                        });
                        r.asserted = asserted;
                        records.push_back(std::move(r));
                    }
                }
                return records;
            });
        }
    } else if (mode == "even") {
        std::vector<int64_t> all = require_list(options.dims, "--d");
        std::vector<int64_t> dims;
        std::copy_if(all.begin(), all.end(), std::back_inserter(dims), [](int64_t d) { return d >= 2 && d % 2 == 0; });
        if (dims.empty()) {
            throw UsageError("gauss even needs at least one even d >= 2");
        }
        for (int64_t d : dims) {
            double tol = resolve_tolerance(common, d);
            tasks.push_back([=] {
                return std::vector<CheckRecord>{timed_record("gauss.even", "even-gauss-sum", {{"d", d}}, tol,
                                                             [d] { return verify_even_gauss(d).deviation; })};
            });
        }
    } else if (mode == "reciprocity") {
        std::vector<int64_t> as = require_list(options.a, "--a");
        std::vector<int64_t> dims = require_list(options.dims, "--d");
        std::vector<int64_t> bs = options.b.empty() ? std::vector<int64_t>{} : parse_int_list(options.b);
        for (int64_t a : as) {
            if (a == 0) {
                throw UsageError("reciprocity needs a != 0");
            }
        }
        size_t valid = 0;
        for (int64_t d : dims) {
            if (d < 1) {
                throw UsageError("reciprocity needs d >= 1");
            }
            double tol = resolve_tolerance(common, d);
            std::vector<int64_t> b_values = bs;
            if (b_values.empty()) {
                for (int64_t b = -2 * d; b <= 2 * d; b++) {
                    b_values.push_back(b);
                }
            }
            std::vector<std::pair<int64_t, int64_t>> tuples;
            for (int64_t a : as) {
                for (int64_t b : b_values) {
                    if (mod_floor(a * d + b, 2) == 0) {
                        tuples.emplace_back(a, b);
                    }
                }
            }
            valid += tuples.size();
            tasks.push_back([=] {
                std::vector<CheckRecord> records;
                for (const auto &[a, b] : tuples) {
                    std::vector<Param> in = {{"a", a}, {"b", b}, {"d", d}};
                    records.push_back(timed_record("gauss.reciprocity", "gauss-reciprocity", in, tol, [=] {
                        return std::abs(gauss_sum_reciprocity({a, b, d}) - gauss_sum_direct({a, b, d}));
                    }));
                    records.push_back(timed_record("gauss.reciprocity_recursive", "gauss-reciprocity", in, tol, [=] {
                        return std::abs(gauss_sum_recursive({a, b, d}) - gauss_sum_direct({a, b, d}));
                    }));
                }
                return records;
            });
        }
        if (valid == 0) {
            throw UsageError("no (a, b, d) tuple satisfies a*d + b even");
        }
    } else if (mode == "columns") {
        std::vector<int64_t> dims = require_list(options.dims, "--d");
        std::vector<int64_t> primes;
        std::copy_if(dims.begin(), dims.end(), std::back_inserter(primes),
                     [](int64_t d) { return d >= 3 && is_prime(d); });
        if (primes.empty()) {
            throw UsageError("gauss columns needs at least one odd prime d");
        }
        std::vector<int64_t> ks = options.k.empty() ? std::vector<int64_t>{} : parse_int_list(options.k);
        std::vector<int64_t> ms = options.m.empty() ? std::vector<int64_t>{} : parse_int_list(options.m);
        for (int64_t d : primes) {
            std::vector<int64_t> kd = ks;
            std::vector<int64_t> md = ms;
            if (kd.empty()) {
                for (int64_t k = 1; k < d; k++) {
                    kd.push_back(k);
                }
            }
            if (md.empty()) {
                for (int64_t m = -d + 1; m < d; m++) {
                    md.push_back(m);
                }
            }
            for (int64_t k : kd) {
                if (k < 1 || k >= d) {
                    throw UsageError("--k values must lie in [1, d)");
                }
            }
            for (int64_t m : md) {
                if (m <= -d || m >= d) {
                    throw UsageError("--m values must lie in (-d, d)");
                }
            }
            double tol = resolve_tolerance(common, d);
            tasks.push_back([=] {
                std::vector<CheckRecord> records;
                for (int64_t k : kd) {
                    for (int64_t m : md) {
                        std::vector<Param> in = {{"d", d}, {"k", k}, {"m", m}};
                        auto start_pair = Clock::now();
                        RotationColumnCheck c = verify_rotation_column_sums(d, k, m);
                        double ms_elapsed = milliseconds_since(start_pair);
                        CheckRecord direct{"gauss.columns_direct", "rotation-column-sums", in, "",
                                           c.direct.deviation, tol, c.direct.pass(tol), true, ms_elapsed};
                        CheckRecord reciprocal{"gauss.columns_reciprocal", "rotation-column-sums", in, "",
                                               c.reciprocal.deviation, tol, c.reciprocal.pass(tol), true, 0};
                        records.push_back(std::move(direct));
                        records.push_back(std::move(reciprocal));
                    }
                }
                return records;
            });
        }
    } else {
        throw UsageError("unknown gauss mode '" + mode + "' (expected identity, reciprocity, even, trace-d, columns)");
    }
    return finish(std::move(report), std::move(tasks), common, start);
}

ReportDocument seq_report(const SeqOptions &options) {
    auto start = Clock::now();
    const CommonOptions &common = options.common;
    validate_common(common);
    if (options.kind != "gauss" && options.kind != "square") {
        throw UsageError("unknown sequence kind '" + options.kind + "' (expected gauss or square)");
    }
    const bool odd_kind = options.kind == "gauss";
    // Ranges keep only the dimensions the sequence kind is defined for.
    std::vector<int64_t> all = require_list(options.dims, "--d");
    std::vector<int64_t> dims;
    std::copy_if(all.begin(), all.end(), std::back_inserter(dims),
                 [odd_kind](int64_t d) { return odd_kind ? d >= 3 && d % 2 == 1 : d >= 2 && d % 2 == 0; });
    if (dims.empty()) {
        throw UsageError(odd_kind ? "gauss sequences need an odd d >= 3" : "square sequences need an even d >= 2");
    }
    std::vector<int64_t> ks = options.k.empty() ? std::vector<int64_t>{} : parse_int_list(options.k);

    ReportDocument report;
    report.command = "seq";
    report.config = common_config(common);
    report.config["kind"] = options.kind;
    report.config["d"] = options.dims;
    report.config["k"] = options.k;

    std::vector<Task> tasks;
    for (int64_t d : dims) {
        std::vector<int64_t> kd = ks;
        if (kd.empty()) {
            for (int64_t k = 1; k < d; k++) {
                kd.push_back(k);
            }
        }
        double tol = resolve_tolerance(common, d);
        tasks.push_back([=] {
            std::vector<CheckRecord> records;
            for (int64_t k : kd) {
                auto t0 = Clock::now();
                Sequence s = odd_kind ? gauss_sequence(d, k) : square_gauss_sequence(d, k);
                BiunimodularReport b = is_biunimodular(s, tol);
                CheckRecord r;
                r.check = "sequence.biunimodular";
                r.anchor = odd_kind ? "biunimodular-gauss" : "biunimodular-square";
                r.inputs = {{"d", d}, {"k", k}};
                double min_spectrum = *std::min_element(b.spectrum_moduli.begin(), b.spectrum_moduli.end());
                std::ostringstream detail;
                detail << (b.pass ? "bi-unimodular" : "not bi-unimodular") << " min|hat c|=" << std::setprecision(6)
                       << min_spectrum;
                r.detail = detail.str();
                r.measured = b.max_deviation;
                r.tolerance = tol;
                r.pass = b.pass;
                // Only coprime k is claimed; anything else is recorded as a probe.
                r.asserted = gcd(k, d) == 1;
                r.elapsed_ms = milliseconds_since(t0);
                records.push_back(std::move(r));
            }
            return records;
        });
    }
    return finish(std::move(report), std::move(tasks), common, start);
}

ReportDocument search_report(const SearchOptions &options) {
    auto start = Clock::now();
    const CommonOptions &common = options.common;
    validate_common(common);
    const int64_t d = options.dimension;
    const int64_t m = options.alphabet;
    if (d < 1 || d > kMaxSearchDimension || m < 1 || m > kMaxSearchAlphabet) {
        throw UsageError("search needs 1 <= d <= " + std::to_string(kMaxSearchDimension) + " and 1 <= alphabet <= " +
                         std::to_string(kMaxSearchAlphabet));
    }
    const double tol = common.tol ? *common.tol : 1e-9;
    validate_common(common);

    ReportDocument report;
    report.command = "search";
    report.config = common_config(common);
    report.config["d"] = d;
    report.config["alphabet"] = m;

    auto t0 = Clock::now();
    std::vector<SearchHit> hits = exhaustive_circulant_hadamard(d, m, tol);
    double search_ms = milliseconds_since(t0);

    std::map<std::vector<int64_t>, int64_t> orbits;
    for (const auto &h : hits) {
        orbits[canonical_orbit(h.exponents, m)]++;
    }

    CheckRecord total;
    total.check = "search.hits";
    total.anchor = "exhaustive-search";
    total.inputs = {{"d", d}, {"alphabet", m}};
    total.detail = std::to_string(hits.size()) + " sequences in " + std::to_string(orbits.size()) + " orbits";
    total.measured = static_cast<double>(hits.size());
    total.tolerance = 0;
    total.pass = true;
    total.asserted = false;
    total.elapsed_ms = search_ms;
    report.records.push_back(total);

    int64_t index = 0;
    for (const auto &[canonical, count] : orbits) {
        CheckRecord r;
        r.check = "search.orbit";
        r.anchor = "exhaustive-search";
        r.inputs = {{"d", d}, {"alphabet", m}, {"orbit", index++}};
        r.detail = exponents_text(canonical) + " members=" + std::to_string(count);
        r.measured = static_cast<double>(count);
        r.tolerance = 0;
        r.pass = true;
        r.asserted = false;
        report.records.push_back(std::move(r));
    }

    // Every Gauss-type sequence expressible over the alphabet must show up.
    std::vector<std::pair<int64_t, Sequence>> gauss;
    if (d >= 3 && d % 2 == 1) {
        for (int64_t k = 1; k < d; k++) {
            if (gcd(k, d) == 1) {
                gauss.emplace_back(k, gauss_sequence(d, k));
            }
        }
    } else if (d >= 2 && d % 2 == 0) {
        for (int64_t k = 1; k < 2 * d; k++) {
            if (gcd(k, d) == 1) {
                gauss.emplace_back(k, square_gauss_sequence(d, k));
            }
        }
    }
    for (const auto &[k, seq] : gauss) {
        auto exps = root_exponents(seq, m);
        if (!exps) {
            continue;
        }
        std::vector<int64_t> canonical = canonical_orbit(*exps, m);
        CheckRecord r;
        r.check = "search.contains_gauss";
        r.anchor = "exhaustive-search";
        r.inputs = {{"d", d}, {"alphabet", m}, {"k", k}};
        r.detail = exponents_text(*exps) + " orbit " + exponents_text(canonical);
        r.pass = orbits.count(canonical) > 0;
        r.measured = r.pass ? 0 : 1;
        r.tolerance = 0;
        report.records.push_back(std::move(r));
    }
    report.sort_records();
    report.include_timings = common.timings;
    report.total_elapsed_ms = milliseconds_since(start);
    return report;
}

ReportDocument sweep_report(const SweepOptions &options) {
    auto start = Clock::now();
    const CommonOptions &common = options.common;
    validate_common(common);
    std::vector<int64_t> dims = parse_dimensions(options.dims, common.dense_cap);

    ReportDocument report;
    report.command = "sweep";
    report.config = common_config(common);
    report.config["dims"] = options.dims;
    report.config["perf"] = options.perf;

    std::vector<Task> tasks;
    for (int64_t d : dims) {
        double tol = resolve_tolerance(common, d);
        int64_t cap = common.dense_cap;
        tasks.push_back([=] {
            std::vector<CheckRecord> records = family_records(d, tol, ProductStrategy::kStructured, cap);
            auto append = [&records](std::vector<CheckRecord> more) {
                std::move(more.begin(), more.end(), std::back_inserter(records));
            };
            append(invariant_records(d, tol));
            append(structure_records(d, tol));
            append(gauss_sweep_records(d, tol));
            if (d >= 4 && d % 2 == 0) {
                records.push_back(negative_record(d, tol));
            }
            return records;
        });
    }
    if (options.perf) {
        int64_t d = std::min<int64_t>(512, common.dense_cap);
        tasks.push_back([d] {
            CirculantSpeedup s = measure_circulant_speedup(d);
            CheckRecord r;
            r.check = "perf.circulant_speedup";
            r.anchor = "circulant-speedup";
            r.inputs = {{"d", d}};
            std::ostringstream detail;
            detail << "dense_ms=" << s.dense_ms << " circulant_ms=" << s.circulant_ms << " target_factor=5"
                   << " max_difference=" << s.max_difference;
            r.detail = detail.str();
            r.measured = s.factor;
            r.tolerance = 2.0;
            r.pass = s.factor >= 2.0;
            r.elapsed_ms = s.dense_ms + s.circulant_ms;
            return std::vector<CheckRecord>{r};
        });
    }
    return finish(std::move(report), std::move(tasks), common, start);
}

int run_build(const BuildOptions &options, std::ostream &out, std::ostream &err) {
    try {
        validate_common(options.common);
        if (options.dimension < 2) {
            throw UsageError("--dim must be >= 2, got " + std::to_string(options.dimension));
        }
        if (options.dimension > options.common.dense_cap) {
            throw UsageError("--dim exceeds --dense-cap");
        }
        MubFamily family = build_family(options.dimension, options.common.dense_cap);
        write_family(family, options.common.format, out);
        return kExitPass;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "construction error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int run_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    return run_reporting(options.common, out, err, [&] { return verify_report(options); });
}

int run_gauss(const GaussOptions &options, std::ostream &out, std::ostream &err) {
    return run_reporting(options.common, out, err, [&] { return gauss_report(options); });
}

int run_seq(const SeqOptions &options, std::ostream &out, std::ostream &err) {
    return run_reporting(options.common, out, err, [&] { return seq_report(options); });
}

int run_search(const SearchOptions &options, std::ostream &out, std::ostream &err) {
    return run_reporting(options.common, out, err, [&] { return search_report(options); });
}

int run_sweep(const SweepOptions &options, std::ostream &out, std::ostream &err) {
    return run_reporting(options.common, out, err, [&] { return sweep_report(options); });
}

CirculantSpeedup measure_circulant_speedup(int64_t d, int repetitions) {
    std::mt19937_64 rng(0x5eed + static_cast<uint64_t>(d));
    std::normal_distribution<double> normal;
    auto random_circulant = [&] {
        std::vector<Complex> column(static_cast<size_t>(d));
        for (auto &c : column) {
            c = {normal(rng), normal(rng)};
        }
        return CirculantMatrix(std::move(column));
    };
    CirculantMatrix a = random_circulant();
    CirculantMatrix b = random_circulant();
    DenseMatrix a_dense = a.to_dense(d);
    DenseMatrix b_dense = b.to_dense(d);

    // Best of several runs on each side.
    double dense_ms = std::numeric_limits<double>::infinity();
    double circulant_ms = std::numeric_limits<double>::infinity();
    DenseMatrix dense_product(d);
    CirculantMatrix circulant_product = a;
    for (int rep = 0; rep < std::max(repetitions, 1); rep++) {
        auto t0 = Clock::now();
        dense_product = multiply(a_dense, b_dense);
        dense_ms = std::min(dense_ms, milliseconds_since(t0));
        auto t1 = Clock::now();
        circulant_product = circulant_multiply(a, b);
        circulant_ms = std::min(circulant_ms, milliseconds_since(t1));
    }
    double diff = max_abs_difference(dense_product, circulant_product.to_dense(d));
    double factor = dense_ms / std::max(circulant_ms, 1e-6);
    return {d, dense_ms, circulant_ms, factor, diff};
}

}  // namespace mubcirc
