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

#include "mubcirc/phase_ring.h"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mubcirc {

namespace {

void require_positive_dimension(int64_t d) {
    if (d <= 0) {
        throw std::invalid_argument("dimension must be positive, got " + std::to_string(d));
    }
}

// exp(i*pi*u/d) for 0 <= 2u <= d, evaluated on the smaller of the two
// complementary angles so both components come out with full precision.
Complex first_quadrant_root(int64_t u, int64_t d) {
    constexpr long double pi = std::numbers::pi_v<long double>;
    if (4 * u <= d) {
        long double angle = pi * static_cast<long double>(u) / static_cast<long double>(d);
        return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
    }
    long double complement = pi * static_cast<long double>(d - 2 * u) / static_cast<long double>(2 * d);
    return {static_cast<double>(std::sin(complement)), static_cast<double>(std::cos(complement))};
}

}  // namespace

int64_t mod_floor(int64_t value, int64_t modulus) {
    int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t modulus) {
    __int128 p = static_cast<__int128>(mod_floor(a, modulus)) * mod_floor(b, modulus);
    return static_cast<int64_t>(p % modulus);
}

int64_t gcd(int64_t a, int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    return smallest_divisor(n) == n;
}

int64_t smallest_divisor(int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("smallest_divisor needs n >= 2");
    }
    if (n % 2 == 0) {
        return 2;
    }
    for (int64_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) {
            return p;
        }
    }
    return n;
}

PhaseExponent::PhaseExponent(int64_t t, int64_t dimension) : t_(0), dimension_(dimension) {
    require_positive_dimension(dimension);
    t_ = mod_floor(t, 2 * dimension);
}

void PhaseExponent::require_same_ring(const PhaseExponent &other) const {
    if (other.dimension_ != dimension_) {
        throw std::invalid_argument(
            "phase dimension mismatch: " + std::to_string(dimension_) + " vs " + std::to_string(other.dimension_));
    }
}

PhaseExponent PhaseExponent::operator+(const PhaseExponent &other) const {
    require_same_ring(other);
    return {t_ + other.t_, dimension_};
}

PhaseExponent PhaseExponent::operator-(const PhaseExponent &other) const {
    require_same_ring(other);
    return {t_ - other.t_, dimension_};
}

PhaseExponent PhaseExponent::operator-() const {
    return {-t_, dimension_};
}

PhaseExponent PhaseExponent::pow(int64_t n) const {
    return {mul_mod(t_, n, modulus()), dimension_};
}

RootTable::RootTable(int64_t dimension) : dimension_(dimension) {
    require_positive_dimension(dimension);
    const int64_t d = dimension;
    values_.resize(static_cast<size_t>(2 * d));
    for (int64_t t = 0; t < 2 * d; t++) {
        Complex v;
        if (2 * t <= d) {
            v = first_quadrant_root(t, d);
        } else if (t <= d) {
            Complex b = first_quadrant_root(d - t, d);
            v = {-b.real(), b.imag()};
        } else if (2 * t <= 3 * d) {
            Complex b = first_quadrant_root(t - d, d);
            v = {-b.real(), -b.imag()};
        } else {
            Complex b = first_quadrant_root(2 * d - t, d);
            v = {b.real(), -b.imag()};
        }
        values_[static_cast<size_t>(t)] = v;
    }
}

std::shared_ptr<const RootTable> RootTable::for_dimension(int64_t dimension) {
    require_positive_dimension(dimension);
    static std::mutex mu;
    static std::map<int64_t, std::shared_ptr<const RootTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[dimension];
    if (!slot) {
        slot = std::make_shared<const RootTable>(dimension);
    }
    return slot;
}

PhaseExponent phase_of_omega(int64_t power, int64_t d) {
    require_positive_dimension(d);
    return {mul_mod(2, power, 2 * d), d};
}

PhaseExponent triangular_phase(int64_t j, int64_t l, int64_t d) {
    require_positive_dimension(d);
    const int64_t m = 2 * d;
    // j(j+1) mod 2d only depends on j mod 2d.
    int64_t jr = mod_floor(j, m);
    int64_t tri = mul_mod(jr, jr + 1, m);
    return {mul_mod(l, tri, m), d};
}

PhaseExponent square_phase(int64_t j, int64_t d) {
    require_positive_dimension(d);
    if (d % 2 != 0) {
        throw std::invalid_argument("square_phase needs even d, got " + std::to_string(d));
    }
    const int64_t m = 2 * d;
    return {-mul_mod(j, j, m), d};
}

Complex to_complex(const PhaseExponent &p, const RootTable &table) {
    if (p.dimension() != table.dimension()) {
        throw std::invalid_argument(
            "phase modulus " + std::to_string(p.modulus()) + " does not match root table modulus " +
            std::to_string(2 * table.dimension()));
    }
    return table[p.t()];
}

}  // namespace mubcirc
