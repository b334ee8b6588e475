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

#include "mubcirc/sequences.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mubcirc {

namespace {

void require_nonempty(const Sequence &c) {
    if (c.values.empty()) {
        throw std::invalid_argument("sequence must have length >= 1");
    }
}

// Normalized DFT into `out`, with the roots of unity already tabulated.
void dft_into(const std::vector<Complex> &c, const RootTable &table, std::vector<Complex> &out) {
    const int64_t d = static_cast<int64_t>(c.size());
    const int64_t m = 2 * d;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    out.assign(c.size(), Complex{0, 0});
    for (int64_t l = 0; l < d; l++) {
        const int64_t step = (2 * l) % m;
        int64_t t = 0;
        Complex acc{0, 0};
        for (int64_t k = 0; k < d; k++) {
            acc += c[static_cast<size_t>(k)] * table[t];
            t += step;
            if (t >= m) {
                t -= m;
            }
        }
        out[static_cast<size_t>(l)] = scale * acc;
    }
}

}  // namespace

Sequence dft_sequence(const Sequence &c) {
    require_nonempty(c);
    auto table = RootTable::for_dimension(c.dimension());
    Sequence result;
    dft_into(c.values, *table, result.values);
    return result;
}

Complex autocorrelation(const Sequence &c, int64_t j) {
    require_nonempty(c);
    const int64_t d = c.dimension();
    if (j < 0 || j >= d) {
        throw std::invalid_argument("autocorrelation shift must satisfy 0 <= j < d");
    }
    Complex acc{0, 0};
    for (int64_t k = 0; k < d; k++) {
        acc += std::conj(c.values[static_cast<size_t>(k)]) * c.values[static_cast<size_t>((j + k) % d)];
    }
    return acc;
}

BiunimodularReport is_biunimodular(const Sequence &c, double tol) {
    Sequence spectrum = dft_sequence(c);
    BiunimodularReport report{true, 0.0, {}, {}};
    for (const auto &v : c.values) {
        report.value_moduli.push_back(std::abs(v));
    }
    for (const auto &v : spectrum.values) {
        report.spectrum_moduli.push_back(std::abs(v));
    }
    for (double m : report.value_moduli) {
        report.max_deviation = std::max(report.max_deviation, std::abs(m - 1.0));
    }
    for (double m : report.spectrum_moduli) {
        report.max_deviation = std::max(report.max_deviation, std::abs(m - 1.0));
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

Sequence gauss_sequence(int64_t d, int64_t k) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("gauss_sequence needs odd d >= 3, got " + std::to_string(d));
    }
    auto table = RootTable::for_dimension(d);
    Sequence result;
    for (int64_t j = 0; j < d; j++) {
        result.values.push_back(to_complex(triangular_phase(j, k, d), *table));
    }
    return result;
}

Sequence square_gauss_sequence(int64_t d, int64_t k) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("square_gauss_sequence needs even d >= 2, got " + std::to_string(d));
    }
    auto table = RootTable::for_dimension(d);
    Sequence result;
    for (int64_t j = 0; j < d; j++) {
        result.values.push_back(to_complex(square_phase(j, d).pow(k), *table));
    }
    return result;
}

CirculantMatrix normalized_circulant(const Sequence &c) {
    require_nonempty(c);
    const double scale = 1.0 / std::sqrt(static_cast<double>(c.dimension()));
    std::vector<Complex> column = c.values;
    for (auto &v : column) {
        v *= scale;
    }
    return {std::move(column), "circ(c)"};
}

std::vector<SearchHit> exhaustive_circulant_hadamard(int64_t d, int64_t alphabet_order, double tol) {
    if (d < 1 || d > kMaxSearchDimension) {
        throw std::invalid_argument("exhaustive search needs 1 <= d <= " + std::to_string(kMaxSearchDimension));
    }
    if (alphabet_order < 1 || alphabet_order > kMaxSearchAlphabet) {
        throw std::invalid_argument("exhaustive search needs 1 <= m <= " + std::to_string(kMaxSearchAlphabet));
    }
    const int64_t m = alphabet_order;
    auto alphabet = RootTable::for_dimension(m);
    auto roots = RootTable::for_dimension(d);

    std::vector<SearchHit> hits;
    std::vector<int64_t> digits(static_cast<size_t>(d), 0);
    std::vector<Complex> values(static_cast<size_t>(d));
    std::vector<Complex> spectrum;
    while (true) {
        for (int64_t j = 0; j < d; j++) {
            values[static_cast<size_t>(j)] = (*alphabet)[2 * digits[static_cast<size_t>(j)]];
        }
        dft_into(values, *roots, spectrum);
        bool ok = true;
        for (const auto &s : spectrum) {
            if (std::abs(std::abs(s) - 1.0) > tol) {
                ok = false;
                break;
            }
        }
        if (ok) {
            hits.push_back({digits, Sequence{values}});
        }
        // Odometer, last digit fastest, so hits come out lexicographically.
        int64_t pos = d - 1;
        while (pos >= 0 && ++digits[static_cast<size_t>(pos)] == m) {
            digits[static_cast<size_t>(pos)] = 0;
            pos--;
        }
        if (pos < 0) {
            break;
        }
    }
    return hits;
}

std::vector<int64_t> canonical_orbit(const std::vector<int64_t> &exponents, int64_t alphabet_order) {
    if (exponents.empty()) {
        return {};
    }
    const size_t d = exponents.size();
    std::vector<int64_t> best;
    std::vector<int64_t> candidate(d);
    for (size_t shift = 0; shift < d; shift++) {
        for (int64_t phase = 0; phase < alphabet_order; phase++) {
            for (size_t j = 0; j < d; j++) {
                candidate[j] = mod_floor(exponents[(j + shift) % d] + phase, alphabet_order);
            }
            if (best.empty() || candidate < best) {
                best = candidate;
            }
        }
    }
    return best;
}

std::optional<std::vector<int64_t>> root_exponents(const Sequence &c, int64_t alphabet_order, double tol) {
    const double m = static_cast<double>(alphabet_order);
    std::vector<int64_t> result;
    for (const auto &v : c.values) {
        double turns = std::arg(v) / (2 * std::numbers::pi) * m;
        int64_t a = mod_floor(static_cast<int64_t>(std::llround(turns)), alphabet_order);
        Complex root = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(a) / m);
        if (std::abs(v - root) > tol) {
            return std::nullopt;
        }
        result.push_back(a);
    }
    return result;
}

}  // namespace mubcirc
