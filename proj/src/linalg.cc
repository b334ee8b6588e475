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

#include "mubcirc/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mubcirc {

namespace {

void require_dense_cap(int64_t d, int64_t dense_cap) {
    if (d > dense_cap) {
        throw std::length_error(
            "dimension " + std::to_string(d) + " exceeds the dense materialization cap " + std::to_string(dense_cap));
    }
}

void require_min_dimension(int64_t d, int64_t min, const char *what) {
    if (d < min) {
        throw std::invalid_argument(std::string(what) + " needs d >= " + std::to_string(min) + ", got " +
                                    std::to_string(d));
    }
}

void require_same_dimension(int64_t a, int64_t b) {
    if (a != b) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

// std::complex's operator* carries NaN recovery branches that stop the inner
// loops from vectorizing, so the kernels below work on interleaved doubles.
inline double *raw(std::span<Complex> v) {
    return reinterpret_cast<double *>(v.data());
}
inline const double *raw(std::span<const Complex> v) {
    return reinterpret_cast<const double *>(v.data());
}

}  // namespace

double default_tolerance(int64_t d) {
    return 1e-9 * std::sqrt(static_cast<double>(d));
}

DenseMatrix::DenseMatrix(int64_t dimension, std::string label)
    : dimension_(dimension), entries_(), label_(std::move(label)) {
    require_min_dimension(dimension, 1, "DenseMatrix");
    entries_.assign(static_cast<size_t>(dimension * dimension), Complex{0, 0});
}

DenseMatrix::DenseMatrix(int64_t dimension, std::vector<Complex> entries, std::string label)
    : dimension_(dimension), entries_(std::move(entries)), label_(std::move(label)) {
    require_min_dimension(dimension, 1, "DenseMatrix");
    if (entries_.size() != static_cast<size_t>(dimension * dimension)) {
        throw std::invalid_argument("DenseMatrix entries must have d*d elements");
    }
}

DenseMatrix DenseMatrix::identity(int64_t dimension, int64_t dense_cap) {
    require_dense_cap(dimension, dense_cap);
    DenseMatrix result(dimension, "1");
    for (int64_t j = 0; j < dimension; j++) {
        result(j, j) = 1;
    }
    return result;
}

DenseMatrix DenseMatrix::scaled(Complex factor) const {
    DenseMatrix result = *this;
    for (auto &e : result.entries_) {
        e *= factor;
    }
    return result;
}

CirculantMatrix::CirculantMatrix(std::vector<Complex> first_column, std::string label)
    : first_column_(std::move(first_column)), label_(std::move(label)) {
    if (first_column_.empty()) {
        throw std::invalid_argument("circulant matrix needs a non-empty first column");
    }
}

const Complex &CirculantMatrix::entry(int64_t row, int64_t col) const {
    return first_column_[static_cast<size_t>(mod_floor(row - col, dimension()))];
}

DenseMatrix CirculantMatrix::to_dense(int64_t dense_cap) const {
    const int64_t d = dimension();
    require_dense_cap(d, dense_cap);
    DenseMatrix result(d, label_);
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            result(j, k) = entry(j, k);
        }
    }
    return result;
}

CirculantMatrix CirculantMatrix::adjoint() const {
    const int64_t d = dimension();
    std::vector<Complex> column(static_cast<size_t>(d));
    for (int64_t j = 0; j < d; j++) {
        column[static_cast<size_t>(j)] = std::conj(first_column_[static_cast<size_t>(mod_floor(-j, d))]);
    }
    return {std::move(column), label_ + "^*"};
}

CirculantMatrix CirculantMatrix::scaled(Complex factor) const {
    std::vector<Complex> column = first_column_;
    for (auto &c : column) {
        c *= factor;
    }
    return {std::move(column), label_};
}

DiagonalUnitary::DiagonalUnitary(std::vector<PhaseExponent> diagonal, std::string label)
    : diagonal_(std::move(diagonal)), label_(std::move(label)) {
    if (diagonal_.empty()) {
        throw std::invalid_argument("diagonal matrix needs at least one entry");
    }
    for (const auto &p : diagonal_) {
        if (p.dimension() != diagonal_.front().dimension()) {
            throw std::invalid_argument("diagonal phases must share one dimension");
        }
    }
}

DiagonalUnitary DiagonalUnitary::pow(int64_t n) const {
    std::vector<PhaseExponent> diag;
    diag.reserve(diagonal_.size());
    for (const auto &p : diagonal_) {
        diag.push_back(p.pow(n));
    }
    return {std::move(diag), label_ + "^" + std::to_string(n)};
}

std::vector<Complex> DiagonalUnitary::values() const {
    auto table = RootTable::for_dimension(diagonal_.front().dimension());
    std::vector<Complex> result;
    result.reserve(diagonal_.size());
    for (const auto &p : diagonal_) {
        result.push_back(to_complex(p, *table));
    }
    return result;
}

DenseMatrix DiagonalUnitary::to_dense(int64_t dense_cap) const {
    const int64_t d = dimension();
    require_dense_cap(d, dense_cap);
    DenseMatrix result(d, label_);
    auto vals = values();
    for (int64_t j = 0; j < d; j++) {
        result(j, j) = vals[static_cast<size_t>(j)];
    }
    return result;
}

DenseMatrix build_fourier(int64_t d, int64_t dense_cap) {
    require_min_dimension(d, 1, "build_fourier");
    require_dense_cap(d, dense_cap);
    auto table = RootTable::for_dimension(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    DenseMatrix f(d, "F");
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            f(j, k) = scale * to_complex(phase_of_omega(j * k, d), *table);
        }
    }
    return f;
}

DiagonalUnitary build_U(int64_t d) {
    require_min_dimension(d, 2, "build_U");
    std::vector<PhaseExponent> diag;
    for (int64_t k = 0; k < d; k++) {
        diag.push_back(phase_of_omega(k, d));
    }
    return {std::move(diag), "U"};
}

CirculantMatrix build_V(int64_t d) {
    require_min_dimension(d, 2, "build_V");
    std::vector<Complex> column(static_cast<size_t>(d), Complex{0, 0});
    column.back() = 1;
    return {std::move(column), "V"};
}

DiagonalUnitary build_D(int64_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("build_D needs odd d >= 3, got " + std::to_string(d));
    }
    std::vector<PhaseExponent> diag;
    for (int64_t k = 0; k < d; k++) {
        diag.push_back(triangular_phase(k, 1, d));
    }
    return {std::move(diag), "D"};
}

DiagonalUnitary build_Dprime(int64_t d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("build_Dprime needs even d >= 2, got " + std::to_string(d));
    }
    std::vector<PhaseExponent> diag;
    for (int64_t k = 0; k < d; k++) {
        diag.push_back(square_phase(k, d));
    }
    return {std::move(diag), "D'"};
}

CirculantMatrix build_R(int64_t d) {
    require_min_dimension(d, 2, "build_R");
    auto table = RootTable::for_dimension(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> column;
    column.reserve(static_cast<size_t>(d));
    for (int64_t k = 0; k < d; k++) {
        PhaseExponent p = d % 2 == 1 ? triangular_phase(k, -1, d) : square_phase(k, d);
        column.push_back(scale * to_complex(p, *table));
    }
    return {std::move(column), "R"};
}

DenseMatrix build_Pk(int64_t d, int64_t k, int64_t dense_cap) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("build_Pk needs odd d >= 3, got " + std::to_string(d));
    }
    if (k < 0 || k >= d) {
        throw std::invalid_argument("build_Pk needs 0 <= k < d, got k=" + std::to_string(k));
    }
    require_dense_cap(d, dense_cap);
    auto table = RootTable::for_dimension(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    DenseMatrix p(d, "P_" + std::to_string(k));
    for (int64_t j = 0; j < d; j++) {
        PhaseExponent row_phase = triangular_phase(j, -k, d);
        for (int64_t m = 0; m < d; m++) {
            p(j, m) = scale * to_complex(phase_of_omega(j * m, d) + row_phase, *table);
        }
    }
    return p;
}

DenseMatrix build_reversal(int64_t d, int64_t dense_cap) {
    require_min_dimension(d, 1, "build_reversal");
    require_dense_cap(d, dense_cap);
    DenseMatrix w(d, "W");
    for (int64_t j = 0; j < d; j++) {
        w(j, mod_floor(-j, d)) = 1;
    }
    return w;
}

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_dimension(a.dimension(), b.dimension());
    const int64_t d = a.dimension();
    DenseMatrix c(d, a.label() + "*" + b.label());
    const double *pa = raw(a.entries());
    const double *pb = raw(b.entries());
    double *pc = raw(c.entries());
    for (int64_t i = 0; i < d; i++) {
        double *row = pc + 2 * i * d;
        for (int64_t k = 0; k < d; k++) {
            const double ar = pa[2 * (i * d + k)];
            const double ai = pa[2 * (i * d + k) + 1];
            const double *brow = pb + 2 * k * d;
            for (int64_t j = 0; j < d; j++) {
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                row[2 * j] += ar * br - ai * bi;
                row[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
    return c;
}

DenseMatrix adjoint_multiply(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_dimension(a.dimension(), b.dimension());
    const int64_t d = a.dimension();
    DenseMatrix c(d, a.label() + "^**" + b.label());
    const double *pa = raw(a.entries());
    const double *pb = raw(b.entries());
    double *pc = raw(c.entries());
    for (int64_t k = 0; k < d; k++) {
        const double *brow = pb + 2 * k * d;
        for (int64_t i = 0; i < d; i++) {
            // conj(a[k, i])
            const double ar = pa[2 * (k * d + i)];
            const double ai = -pa[2 * (k * d + i) + 1];
            double *row = pc + 2 * i * d;
            for (int64_t j = 0; j < d; j++) {
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                row[2 * j] += ar * br - ai * bi;
                row[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
    return c;
}

DenseMatrix adjoint(const DenseMatrix &a) {
    const int64_t d = a.dimension();
    DenseMatrix result(d, a.label() + "^*");
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            result(j, k) = std::conj(a(k, j));
        }
    }
    return result;
}

DenseMatrix power(const DenseMatrix &a, int64_t n) {
    const int64_t d = a.dimension();
    std::string label = a.label() + "^" + std::to_string(n);
    if (n < 0) {
        auto check = is_unitary(a, default_tolerance(d));
        if (!check.pass) {
            throw std::domain_error("negative power of a non-unitary matrix (deviation " +
                                    std::to_string(check.max_deviation) + ")");
        }
        DenseMatrix result = power(adjoint(a), -n);
        result.set_label(label);
        return result;
    }
    DenseMatrix result(d);
    for (int64_t j = 0; j < d; j++) {
        result(j, j) = 1;
    }
    DenseMatrix base = a;
    while (n > 0) {
        if (n & 1) {
            result = multiply(result, base);
        }
        n >>= 1;
        if (n > 0) {
            base = multiply(base, base);
        }
    }
    result.set_label(label);
    return result;
}

DenseMatrix multiply(const DiagonalUnitary &diag, const DenseMatrix &a) {
    require_same_dimension(diag.dimension(), a.dimension());
    const int64_t d = a.dimension();
    auto vals = diag.values();
    DenseMatrix result = a;
    result.set_label(diag.label() + "*" + a.label());
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            result(j, k) *= vals[static_cast<size_t>(j)];
        }
    }
    return result;
}

DenseMatrix multiply(const DenseMatrix &a, const DiagonalUnitary &diag) {
    require_same_dimension(diag.dimension(), a.dimension());
    const int64_t d = a.dimension();
    auto vals = diag.values();
    DenseMatrix result = a;
    result.set_label(a.label() + "*" + diag.label());
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            result(j, k) *= vals[static_cast<size_t>(k)];
        }
    }
    return result;
}

CirculantMatrix circulant_multiply(const CirculantMatrix &a, const CirculantMatrix &b) {
    require_same_dimension(a.dimension(), b.dimension());
    const int64_t d = a.dimension();
    std::vector<Complex> column(static_cast<size_t>(d), Complex{0, 0});
    const double *pa = reinterpret_cast<const double *>(a.first_column().data());
    const double *pb = reinterpret_cast<const double *>(b.first_column().data());
    double *pc = reinterpret_cast<double *>(column.data());
    // (AB)[n, 0] = sum_m a[(n - m) mod d] * b[m]; split the wrap so the inner
    // loops stay branch free.
    for (int64_t m = 0; m < d; m++) {
        const double br = pb[2 * m];
        const double bi = pb[2 * m + 1];
        for (int64_t n = m; n < d; n++) {
            const double ar = pa[2 * (n - m)];
            const double ai = pa[2 * (n - m) + 1];
            pc[2 * n] += ar * br - ai * bi;
            pc[2 * n + 1] += ar * bi + ai * br;
        }
        for (int64_t n = 0; n < m; n++) {
            const double ar = pa[2 * (n - m + d)];
            const double ai = pa[2 * (n - m + d) + 1];
            pc[2 * n] += ar * br - ai * bi;
            pc[2 * n + 1] += ar * bi + ai * br;
        }
    }
    return {std::move(column), a.label() + "*" + b.label()};
}

CirculantMatrix circulant_power(const CirculantMatrix &c, int64_t n) {
    const int64_t d = c.dimension();
    std::string label = c.label() + "^" + std::to_string(n);
    CirculantMatrix base = n < 0 ? c.adjoint() : c;
    uint64_t e = n < 0 ? static_cast<uint64_t>(-n) : static_cast<uint64_t>(n);
    std::vector<Complex> unit(static_cast<size_t>(d), Complex{0, 0});
    unit[0] = 1;
    CirculantMatrix result(std::move(unit));
    while (e > 0) {
        if (e & 1) {
            result = circulant_multiply(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = circulant_multiply(base, base);
        }
    }
    result.set_label(label);
    return result;
}

std::vector<Complex> diagonalize_circulant(const CirculantMatrix &c) {
    const int64_t d = c.dimension();
    auto table = RootTable::for_dimension(d);
    const int64_t m = 2 * d;
    std::vector<Complex> result(static_cast<size_t>(d));
    for (int64_t l = 0; l < d; l++) {
        const int64_t step = mod_floor(-2 * l, m);
        int64_t t = 0;
        Complex acc{0, 0};
        for (int64_t k = 0; k < d; k++) {
            acc += c.first_column()[static_cast<size_t>(k)] * (*table)[t];
            t += step;
            if (t >= m) {
                t -= m;
            }
        }
        result[static_cast<size_t>(l)] = acc;
    }
    return result;
}

CheckResult is_unitary(const DenseMatrix &m, double tol) {
    const int64_t d = m.dimension();
    DenseMatrix gram = adjoint_multiply(m, m);
    double worst = 0;
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            Complex expected = j == k ? Complex{1, 0} : Complex{0, 0};
            worst = std::max(worst, std::abs(gram(j, k) - expected));
        }
    }
    return {worst <= tol, worst};
}

double hadamard_modulus_deviation(const DenseMatrix &m) {
    const double target = 1.0 / std::sqrt(static_cast<double>(m.dimension()));
    double worst = 0;
    for (const auto &e : m.entries()) {
        worst = std::max(worst, std::abs(std::abs(e) - target));
    }
    return worst;
}

CheckResult is_unitary_hadamard(const DenseMatrix &m, double tol) {
    double modulus = hadamard_modulus_deviation(m);
    CheckResult unitary = is_unitary(m, tol);
    double worst = std::max(modulus, unitary.max_deviation);
    return {worst <= tol, worst};
}

CheckResult is_circulant(const DenseMatrix &m, double tol) {
    const int64_t d = m.dimension();
    double worst = 0;
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            worst = std::max(worst, std::abs(m(j, k) - m((j + 1) % d, (k + 1) % d)));
        }
    }
    return {worst <= tol, worst};
}

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_dimension(a.dimension(), b.dimension());
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

}  // namespace mubcirc
