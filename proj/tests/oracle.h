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

#ifndef MUBCIRC_TESTS_ORACLE_H
#define MUBCIRC_TESTS_ORACLE_H

// Naive reference implementations for tests. Phases go through std::polar on
// floating-point angles, so nothing here shares code with the exact phase ring.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mubcirc/linalg.h"

namespace oracle {

using mubcirc::Complex;
using Matrix = std::vector<std::vector<Complex>>;

inline constexpr double kPi = 3.14159265358979323846;

/// exp(i*pi*num/den) straight from the angle, evaluated in long double.
inline Complex expi(double num, double den) {
    const long double pi = 3.141592653589793238462643383279502884L;
    std::complex<long double> z = std::polar(1.0L, pi * static_cast<long double>(num) / den);
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// omega^p = exp(2*pi*i*p/d).
inline Complex omega(double p, int64_t d) {
    return expi(2 * p, static_cast<double>(d));
}

inline Matrix zeros(int64_t d) {
    return Matrix(static_cast<size_t>(d), std::vector<Complex>(static_cast<size_t>(d)));
}

inline Matrix fourier(int64_t d) {
    Matrix m = zeros(d);
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            m[j][k] = omega(static_cast<double>(j * k), d) / std::sqrt(static_cast<double>(d));
        }
    }
    return m;
}

inline Matrix diagonal(const std::vector<Complex> &values) {
    Matrix m = zeros(static_cast<int64_t>(values.size()));
    for (size_t i = 0; i < values.size(); i++) {
        m[i][i] = values[i];
    }
    return m;
}

inline Matrix circulant(const std::vector<Complex> &column) {
    const int64_t d = static_cast<int64_t>(column.size());
    Matrix m = zeros(d);
    for (int64_t j = 0; j < d; j++) {
        for (int64_t k = 0; k < d; k++) {
            m[j][k] = column[static_cast<size_t>(((j - k) % d + d) % d)];
        }
    }
    return m;
}

/// First column of R: d^{-1/2} omega^{-k(k+1)/2} (odd d), d^{-1/2} omega^{-k^2/2} (even d).
inline std::vector<Complex> rotation_column(int64_t d) {
    std::vector<Complex> c;
    for (int64_t k = 0; k < d; k++) {
        double half = d % 2 ? k * (k + 1) / 2.0 : k * k / 2.0;
        c.push_back(omega(-half, d) / std::sqrt(static_cast<double>(d)));
    }
    return c;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const size_t d = a.size();
    Matrix m(d, std::vector<Complex>(d));
    for (size_t i = 0; i < d; i++) {
        for (size_t k = 0; k < d; k++) {
            for (size_t j = 0; j < d; j++) {
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return m;
}

inline Matrix adjoint(const Matrix &a) {
    const size_t d = a.size();
    Matrix m(d, std::vector<Complex>(d));
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            m[i][j] = std::conj(a[j][i]);
        }
    }
    return m;
}

inline double difference(const mubcirc::DenseMatrix &a, const Matrix &b) {
    double worst = 0;
    for (int64_t i = 0; i < a.dimension(); i++) {
        for (int64_t j = 0; j < a.dimension(); j++) {
            worst = std::max(worst, std::abs(a(i, j) - b[i][j]));
        }
    }
    return worst;
}

inline mubcirc::DenseMatrix to_dense(const Matrix &m) {
    const int64_t d = static_cast<int64_t>(m.size());
    mubcirc::DenseMatrix out(d);
    for (int64_t i = 0; i < d; i++) {
        for (int64_t j = 0; j < d; j++) {
            out(i, j) = m[i][j];
        }
    }
    return out;
}

inline std::vector<Complex> random_vector(std::mt19937_64 &rng, int64_t d) {
    std::normal_distribution<double> normal;
    std::vector<Complex> v(static_cast<size_t>(d));
    for (auto &x : v) {
        x = {normal(rng), normal(rng)};
    }
    return v;
}

inline std::vector<Complex> random_unimodular(std::mt19937_64 &rng, int64_t d) {
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    std::vector<Complex> v(static_cast<size_t>(d));
    for (auto &x : v) {
        x = std::polar(1.0, angle(rng));
    }
    return v;
}

/// sum_n exp(i*pi*(a n^2 + b n)/d) by floating-point angles.
inline Complex gauss_sum(int64_t a, int64_t b, int64_t d) {
    Complex acc = 0;
    for (int64_t n = 0; n < d; n++) {
        // Reduce the numerator mod 2d before converting to keep angles small.
        int64_t t = ((a * n * n + b * n) % (2 * d) + 2 * d) % (2 * d);
        acc += expi(static_cast<double>(t), static_cast<double>(d));
    }
    return acc;
}

}  // namespace oracle

#endif
