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

#include "mubcirc/mub.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mubcirc/gauss.h"

namespace mubcirc {

namespace {

double milliseconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct ModulusRange {
    double min = std::numeric_limits<double>::infinity();
    double max = 0;
    double worst_deviation = 0;

    void add(Complex v, double target) {
        double m = std::abs(v);
        min = std::min(min, m);
        max = std::max(max, m);
        worst_deviation = std::max(worst_deviation, std::abs(m - target));
    }
};

// Worst |(C^* C - 1)[j, 0]|; by circulant structure this covers every entry.
double circulant_unitary_deviation(const CirculantMatrix &c) {
    CirculantMatrix gram = circulant_multiply(c.adjoint(), c);
    double worst = 0;
    for (size_t j = 0; j < gram.first_column().size(); j++) {
        Complex expected = j == 0 ? Complex{1, 0} : Complex{0, 0};
        worst = std::max(worst, std::abs(gram.first_column()[j] - expected));
    }
    return worst;
}

LabeledBasis circulant_basis(CirculantMatrix c, std::string label, int64_t dense_cap) {
    c.set_label(label);
    DenseMatrix dense = c.to_dense(dense_cap);
    return {std::move(label), std::move(dense), std::move(c)};
}

CirculantMatrix identity_circulant(int64_t d) {
    std::vector<Complex> column(static_cast<size_t>(d), Complex{0, 0});
    column[0] = 1;
    return {std::move(column), "1"};
}

// circ(1, i) / sqrt(2): the conjugate of the even-dimension R at d = 2.
CirculantMatrix build_P1_dim2() {
    auto table = RootTable::for_dimension(2);
    const double scale = 1.0 / std::sqrt(2.0);
    std::vector<Complex> column;
    for (int64_t j = 0; j < 2; j++) {
        column.push_back(scale * to_complex(-square_phase(j, 2), *table));
    }
    return {std::move(column), "P_1"};
}

void append_rotation_powers(MubFamily &family, int64_t count, int64_t dense_cap) {
    CirculantMatrix r = build_R(family.dimension);
    CirculantMatrix current = r;
    for (int64_t k = 1; k <= count; k++) {
        if (k > 1) {
            current = circulant_multiply(current, r);
        }
        std::string label = k == 1 ? "R" : "R^" + std::to_string(k);
        family.bases.push_back(circulant_basis(current, label, dense_cap));
    }
}

}  // namespace

std::string_view recipe_name(Recipe recipe) {
    switch (recipe) {
        case Recipe::kPrime:
            return "Prime";
        case Recipe::kDTwo:
            return "DTwo";
        case Recipe::kOddComposite:
            return "OddComposite";
        case Recipe::kEven:
            return "Even";
    }
    return "Unknown";
}

int64_t family_size(int64_t d) {
    if (d < 2) {
        throw std::invalid_argument("MUB families need d >= 2, got " + std::to_string(d));
    }
    if (d == 2) {
        return 3;
    }
    if (d % 2 == 0) {
        return 3;
    }
    // Odd d: {1, F, R, ..., R^{p-1}} with p the smallest prime factor; p = d
    // when d is prime.
    return smallest_divisor(d) + 1;
}

MubFamily build_family(int64_t d, int64_t dense_cap) {
    if (d < 2) {
        throw std::invalid_argument("MUB families need d >= 2, got " + std::to_string(d));
    }
    MubFamily family{d, Recipe::kPrime, {}};
    family.bases.push_back(circulant_basis(identity_circulant(d), "1", dense_cap));
    family.bases.push_back({"F", build_fourier(d, dense_cap), std::nullopt});

    if (d == 2) {
        family.recipe = Recipe::kDTwo;
        family.bases.push_back(circulant_basis(build_P1_dim2(), "P_1", dense_cap));
    } else if (d % 2 == 0) {
        family.recipe = Recipe::kEven;
        append_rotation_powers(family, 1, dense_cap);
    } else {
        int64_t p = smallest_divisor(d);
        family.recipe = p == d ? Recipe::kPrime : Recipe::kOddComposite;
        append_rotation_powers(family, p - 1, dense_cap);
    }

    const double tol = default_tolerance(d);
    for (const auto &basis : family.bases) {
        double deviation = basis.circulant ? circulant_unitary_deviation(*basis.circulant)
                                           : is_unitary(basis.matrix, tol).max_deviation;
        if (deviation > tol) {
            throw std::logic_error("family member " + basis.label + " is not unitary (deviation " +
                                   std::to_string(deviation) + ")");
        }
    }
    return family;
}

UnbiasednessReport verify_family(const MubFamily &family, double tol, ProductStrategy strategy) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const int64_t d = family.dimension;
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    const bool structured = strategy == ProductStrategy::kStructured;
    UnbiasednessReport report{d, tol, {}, {}, true};

    for (size_t i = 1; i < family.bases.size(); i++) {
        const LabeledBasis &basis = family.bases[i];
        auto start = std::chrono::steady_clock::now();
        double deviation;
        if (structured && basis.circulant) {
            double modulus = 0;
            for (const auto &c : basis.circulant->first_column()) {
                modulus = std::max(modulus, std::abs(std::abs(c) - target));
            }
            deviation = std::max(modulus, circulant_unitary_deviation(*basis.circulant));
        } else {
            deviation = is_unitary_hadamard(basis.matrix, tol).max_deviation;
        }
        bool pass = deviation <= tol;
        report.pass = report.pass && pass;
        report.bases.push_back({i, basis.label, deviation, pass, milliseconds_since(start)});
    }

    for (size_t i = 0; i < family.bases.size(); i++) {
        for (size_t j = i + 1; j < family.bases.size(); j++) {
            const LabeledBasis &a = family.bases[i];
            const LabeledBasis &b = family.bases[j];
            auto start = std::chrono::steady_clock::now();
            ModulusRange range;
            if (structured && a.circulant && b.circulant) {
                CirculantMatrix product = circulant_multiply(a.circulant->adjoint(), *b.circulant);
                for (const auto &v : product.first_column()) {
                    range.add(v, target);
                }
            } else {
                DenseMatrix product = adjoint_multiply(a.matrix, b.matrix);
                for (const auto &v : product.entries()) {
                    range.add(v, target);
                }
            }
            bool pass = range.worst_deviation <= tol;
            report.pass = report.pass && pass;
            report.pairs.push_back({i, j, a.label, b.label, range.min, range.max, range.worst_deviation, pass,
                                    milliseconds_since(start)});
        }
    }
    return report;
}

PairStructureRecord check_pair_product_structure(int64_t d, int64_t k_low, int64_t k_high, double tol) {
    if (d < 3 || !is_prime(d)) {
        throw std::invalid_argument("pair structure check needs an odd prime d, got " + std::to_string(d));
    }
    if (k_low < 1 || k_low >= k_high || k_high > d - 1) {
        throw std::invalid_argument("pair structure check needs 1 <= k' < k <= d-1");
    }
    CirculantMatrix r = build_R(d);
    DenseMatrix r_dense = r.to_dense();
    DenseMatrix high = power(r_dense, k_high);

    DenseMatrix pair_product = adjoint_multiply(power(r_dense, k_low), high);
    DenseMatrix difference_power = circulant_power(r, k_high - k_low).to_dense();
    double power_deviation = max_abs_difference(pair_product, difference_power);

    DenseMatrix f = build_fourier(d);
    DenseMatrix fourier_product = adjoint_multiply(f, high);
    Complex alpha = rotation_alpha(d);
    Complex alpha_k{1, 0};
    for (int64_t i = 0; i < k_high; i++) {
        alpha_k *= alpha;
    }
    DenseMatrix factored = multiply(build_D(d).pow(k_high), adjoint(f)).scaled(alpha_k);
    double fourier_deviation = max_abs_difference(fourier_product, factored);

    bool pass = power_deviation <= tol && fourier_deviation <= tol;
    return {d, k_low, k_high, power_deviation, fourier_deviation, pass};
}

NegativeCheckRecord negative_check_even(int64_t d, double tol) {
    if (d < 4 || d % 2 != 0) {
        throw std::invalid_argument("the R^2 negative check needs even d >= 4, got " + std::to_string(d));
    }
    CirculantMatrix r2 = circulant_power(build_R(d), 2);
    DenseMatrix dense = r2.to_dense();
    CheckResult unitary = is_unitary(dense, tol);
    CheckResult circulant = is_circulant(dense, tol);
    CheckResult hadamard = is_unitary_hadamard(dense, tol);

    NegativeCheckRecord record{d,
                               unitary.max_deviation,
                               circulant.max_deviation,
                               hadamard.max_deviation,
                               unitary.pass,
                               circulant.pass,
                               hadamard.pass,
                               {},
                               {}};
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    for (int64_t j = 0; j < d; j++) {
        double modulus = std::abs(r2.first_column()[static_cast<size_t>(j)]);
        if (std::abs(modulus - target) > tol) {
            record.offending_rows.push_back(j);
            record.offending_moduli.push_back(modulus);
        }
    }
    return record;
}

}  // namespace mubcirc
