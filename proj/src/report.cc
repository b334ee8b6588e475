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

#include "mubcirc/report.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mubcirc {

namespace {

std::string inputs_text(const std::vector<Param> &inputs) {
    std::string s;
    for (const auto &p : inputs) {
        if (!s.empty()) {
            s += ';';
        }
        s += p.name + "=" + std::to_string(p.value);
    }
    return s;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

std::string number(double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

nlohmann::json record_json(const CheckRecord &r, bool timings) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto &p : r.inputs) {
        inputs[p.name] = p.value;
    }
    nlohmann::json j = {
        {"check", r.check},
        {"anchor", r.anchor},
        {"inputs", inputs},
        {"measured", r.measured},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"asserted", r.asserted},
    };
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    if (timings) {
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

void write_json(const ReportDocument &report, std::ostream &out) {
    ReportSummary s = report.summary();
    nlohmann::json summary = {
        {"checks", s.checks}, {"passed", s.passed}, {"failed", s.failed}, {"probes", s.probes},
        {"all_pass", report.all_pass()},
    };
    if (report.include_timings) {
        summary["elapsed_ms"] = report.total_elapsed_ms;
    }
    // Records are streamed one at a time; sweeps can produce a few hundred
    // thousand of them.
    out << "{\n";
    out << "  \"schema\": " << nlohmann::json(kReportSchema).dump() << ",\n";
    out << "  \"tool\": \"mubcirc\",\n";
    out << "  \"version\": " << nlohmann::json(kToolVersion).dump() << ",\n";
    out << "  \"command\": " << nlohmann::json(report.command).dump() << ",\n";
    out << "  \"config\": " << report.config.dump() << ",\n";
    out << "  \"summary\": " << summary.dump() << ",\n";
    out << "  \"records\": [";
    for (size_t i = 0; i < report.records.size(); i++) {
        out << (i == 0 ? "\n    " : ",\n    ") << record_json(report.records[i], report.include_timings).dump();
    }
    out << (report.records.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
}

void write_csv(const ReportDocument &report, std::ostream &out) {
    out << "check,anchor,inputs,detail,measured,tolerance,pass,asserted";
    if (report.include_timings) {
        out << ",elapsed_ms";
    }
    out << "\n";
    for (const auto &r : report.records) {
        out << csv_field(r.check) << ',' << csv_field(r.anchor) << ',' << csv_field(inputs_text(r.inputs)) << ','
            << csv_field(r.detail) << ',' << number(r.measured) << ',' << number(r.tolerance) << ','
            << (r.pass ? "true" : "false") << ',' << (r.asserted ? "true" : "false");
        if (report.include_timings) {
            out << ',' << number(r.elapsed_ms);
        }
        out << "\n";
    }
}

void write_text(const ReportDocument &report, std::ostream &out) {
    for (const auto &r : report.records) {
        const char *status = !r.asserted ? "PROBE" : (r.pass ? "PASS " : "FAIL ");
        out << status << ' ' << r.check << " [" << r.anchor << "] " << inputs_text(r.inputs);
        if (!r.detail.empty()) {
            out << ' ' << r.detail;
        }
        out << " measured=" << std::setprecision(3) << r.measured << " tol=" << r.tolerance;
        if (report.include_timings) {
            out << " (" << std::setprecision(3) << r.elapsed_ms << " ms)";
        }
        out << "\n";
    }
    ReportSummary s = report.summary();
    out << report.command << ": " << s.checks << " checks, " << s.passed << " passed, " << s.failed << " failed, "
        << s.probes << " probes\n";
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::kJson;
    }
    if (name == "csv") {
        return OutputFormat::kCsv;
    }
    if (name == "text") {
        return OutputFormat::kText;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::kJson:
            return "json";
        case OutputFormat::kCsv:
            return "csv";
        case OutputFormat::kText:
            return "text";
    }
    return "json";
}

void ReportDocument::sort_records() {
    std::stable_sort(records.begin(), records.end(), [](const CheckRecord &a, const CheckRecord &b) {
        if (a.check != b.check) {
            return a.check < b.check;
        }
        return std::lexicographical_compare(
            a.inputs.begin(), a.inputs.end(), b.inputs.begin(), b.inputs.end(),
            [](const Param &x, const Param &y) { return x.value < y.value; });
    });
}

ReportSummary ReportDocument::summary() const {
    ReportSummary s;
    for (const auto &r : records) {
        s.checks++;
        if (!r.asserted) {
            s.probes++;
        } else if (r.pass) {
            s.passed++;
        } else {
            s.failed++;
        }
    }
    return s;
}

bool ReportDocument::all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord &r) { return !r.asserted || r.pass; });
}

void write_report(const ReportDocument &report, OutputFormat format, std::ostream &out) {
    switch (format) {
        case OutputFormat::kJson:
            write_json(report, out);
            break;
        case OutputFormat::kCsv:
            write_csv(report, out);
            break;
        case OutputFormat::kText:
            write_text(report, out);
            break;
    }
}

std::vector<CheckRecord> run_tasks(const std::vector<std::function<std::vector<CheckRecord>()>> &tasks,
                                   int parallelism) {
    std::vector<std::vector<CheckRecord>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    size_t threads = std::clamp<size_t>(static_cast<size_t>(std::max(parallelism, 1)), 1, tasks.size() + 1);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    std::vector<CheckRecord> merged;
    for (size_t i = 0; i < tasks.size(); i++) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        std::move(results[i].begin(), results[i].end(), std::back_inserter(merged));
    }
    return merged;
}

}  // namespace mubcirc
