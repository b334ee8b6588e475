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

#include "mubcirc/gauss.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mubcirc/linalg.h"

namespace mubcirc {

namespace {

bool parity_ok(int64_t a, int64_t b, int64_t d) {
    return (mod_floor(a, 2) * mod_floor(d, 2) + mod_floor(b, 2)) % 2 == 0;
}

void require_reciprocity_preconditions(const GaussSumSpec &s) {
    if (s.d < 1) {
        throw std::invalid_argument("Gauss sum modulus must be >= 1, got " + std::to_string(s.d));
    }
    if (!parity_ok(s.a, s.b, s.d)) {
        throw std::invalid_argument("reciprocity needs a*d + b even (a=" + std::to_string(s.a) +
                                    ", b=" + std::to_string(s.b) + ", d=" + std::to_string(s.d) + ")");
    }
}

// exp(i*pi*(a*d - b^2) / (4*a*d)) for a, d > 0: the reciprocity prefactor phase.
Complex reciprocity_phase(int64_t a, int64_t b, int64_t d) {
    __int128 ad = static_cast<__int128>(a) * d;
    __int128 period = 8 * ad;
    __int128 r = (ad - static_cast<__int128>(b) * b) % period;
    if (r < 0) {
        r += period;
    }
    constexpr long double pi = std::numbers::pi_v<long double>;
    long double angle = pi * static_cast<long double>(r) / (4.0L * static_cast<long double>(ad));
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

ModulusCheck measure(Complex value, double expected) {
    double measured = std::abs(value);
    return {measured, expected, std::abs(measured - expected)};
}

void require_odd_at_least_three(int64_t d, const char *what) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument(std::string(what) + " needs odd d >= 3, got " + std::to_string(d));
    }
}

void require_coprime(int64_t k, int64_t d, const char *what) {
    if (gcd(k, d) != 1) {
        throw std::invalid_argument(std::string(what) + " needs gcd(" + std::to_string(k) + ", " +
                                    std::to_string(d) + ") = 1");
    }
}

}  // namespace

Complex gauss_sum_direct(const GaussSumSpec &s) {
    if (s.d < 1) {
        throw std::invalid_argument("Gauss sum modulus must be >= 1, got " + std::to_string(s.d));
    }
    const int64_t m = 2 * s.d;
    auto table = RootTable::for_dimension(s.d);
    const int64_t a = mod_floor(s.a, m);
    const int64_t b = mod_floor(s.b, m);
    Complex acc{0, 0};
    for (int64_t j = 0; j < s.d; j++) {
        int64_t t = mod_floor(mul_mod(a, mul_mod(j, j, m), m) + mul_mod(b, j, m), m);
        acc += (*table)[t];
    }
    return acc;
}

Complex gauss_sum_reciprocity(const GaussSumSpec &s) {
    require_reciprocity_preconditions(s);
    if (s.a == 0) {
        throw std::invalid_argument("reciprocity needs a != 0");
    }
    if (s.a < 0) {
        // S(a, b, d) = conj(S(-a, -b, d)).
        return std::conj(gauss_sum_reciprocity({-s.a, -s.b, s.d}));
    }
    double magnitude = std::sqrt(static_cast<double>(s.d) / static_cast<double>(s.a));
    return magnitude * reciprocity_phase(s.a, s.b, s.d) * gauss_sum_direct({-s.d, -s.b, s.a});
}

Complex gauss_sum_recursive(const GaussSumSpec &s) {
    require_reciprocity_preconditions(s);
    int64_t a = s.a;
    int64_t b = s.b;
    int64_t d = s.d;
    // Invariant: S(s) = factor * (conjugated ? conj(S(a, b, d)) : S(a, b, d)).
    Complex factor{1, 0};
    bool conjugated = false;
    while (true) {
        if (d == 1) {
            return factor;
        }
        const int64_t m = 2 * d;
        a = mod_floor(a, m);
        b = mod_floor(b, m);
        // j^2 and j have the same parity, so S(a, b, d) = S(a - d, b + d, d).
        while (2 * a > d) {
            a -= d;
            b = mod_floor(b + d, m);
        }
        if (a == 0) {
            Complex tail = b == 0 ? Complex{static_cast<double>(d), 0} : Complex{0, 0};
            return factor * (conjugated ? std::conj(tail) : tail);
        }
        if (a < 0) {
            a = -a;
            b = -b;
            conjugated = !conjugated;
        }
        Complex step = std::sqrt(static_cast<double>(d) / static_cast<double>(a)) * reciprocity_phase(a, b, d);
        factor *= conjugated ? std::conj(step) : step;
        int64_t next_d = a;
        a = -d;
        b = -b;
        d = next_d;
    }
}

Complex rotation_alpha(int64_t d) {
    require_odd_at_least_three(d, "rotation_alpha");
    auto table = RootTable::for_dimension(d);
    Complex acc{0, 0};
    for (int64_t k = 0; k < d; k++) {
        acc += to_complex(triangular_phase(k, -1, d), *table);
    }
    return acc / std::sqrt(static_cast<double>(d));
}

ModulusCheck probe_identity_gauss(int64_t d, int64_t l, int64_t j) {
    require_odd_at_least_three(d, "identity Gauss sum");
    if (j < 0 || j >= d) {
        throw std::invalid_argument("identity Gauss sum needs 0 <= j < d");
    }
    auto table = RootTable::for_dimension(d);
    Complex acc{0, 0};
    for (int64_t k = 0; k < d; k++) {
        acc += to_complex(triangular_phase(k, l, d) + phase_of_omega(j * k, d), *table);
    }
    return measure(acc, std::sqrt(static_cast<double>(d)));
}

ModulusCheck verify_identity_gauss(int64_t d, int64_t l, int64_t j) {
    require_coprime(l, d, "identity Gauss sum");
    return probe_identity_gauss(d, l, j);
}

ModulusCheck verify_trace_D(int64_t d, int64_t k) {
    require_odd_at_least_three(d, "trace of D^k");
    require_coprime(k, d, "trace of D^k");
    Complex trace{0, 0};
    for (const auto &v : build_D(d).pow(k).values()) {
        trace += v;
    }
    return measure(trace, std::sqrt(static_cast<double>(d)));
}

ModulusCheck verify_even_gauss(int64_t d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("even Gauss sum needs even d >= 2, got " + std::to_string(d));
    }
    return measure(gauss_sum_direct({1, 0, d}), std::sqrt(static_cast<double>(d)));
}

RotationColumnCheck verify_rotation_column_sums(int64_t d, int64_t k, int64_t m) {
    if (d < 3 || !is_prime(d)) {
        throw std::invalid_argument("rotation column sums need an odd prime d, got " + std::to_string(d));
    }
    if (k < 1 || k > d - 1) {
        throw std::invalid_argument("rotation column sums need 1 <= k <= d-1");
    }
    if (m <= -d || m >= d) {
        throw std::invalid_argument("rotation column sums need -d < m < d");
    }
    const int64_t b = k + 2 * m;
    return {
        measure(gauss_sum_direct({k, b, d}), std::sqrt(static_cast<double>(d))),
        measure(gauss_sum_direct({-d, -b, k}), std::sqrt(static_cast<double>(k))),
    };
}

}  // namespace mubcirc
