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

#ifndef MUBCIRC_PHASE_RING_H
#define MUBCIRC_PHASE_RING_H

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace mubcirc {

using Complex = std::complex<double>;

/// Reduces `value` into [0, modulus). `modulus` must be positive.
int64_t mod_floor(int64_t value, int64_t modulus);

/// (a * b) mod modulus, computed without overflow.
int64_t mul_mod(int64_t a, int64_t b, int64_t modulus);

int64_t gcd(int64_t a, int64_t b);
bool is_prime(int64_t n);
/// Smallest divisor of n strictly greater than 1 (n itself when n is prime).
int64_t smallest_divisor(int64_t n);

/// The unit complex number exp(i*pi*t/d), stored exactly as t mod 2d.
///
/// Powers of omega = exp(2*i*pi/d) are the even exponents; the odd ones are
/// the half powers needed in even dimension.
class PhaseExponent {
   public:
    PhaseExponent(int64_t t, int64_t dimension);

    int64_t t() const {
        return t_;
    }
    int64_t dimension() const {
        return dimension_;
    }
    int64_t modulus() const {
        return 2 * dimension_;
    }
    /// True when the phase is an integer power of omega.
    bool is_omega_power() const {
        return t_ % 2 == 0;
    }

    PhaseExponent operator+(const PhaseExponent &other) const;
    PhaseExponent operator-(const PhaseExponent &other) const;
    PhaseExponent operator-() const;
    /// Raises the phase to an integer power.
    PhaseExponent pow(int64_t n) const;

    bool operator==(const PhaseExponent &other) const = default;

   private:
    void require_same_ring(const PhaseExponent &other) const;

    int64_t t_;
    int64_t dimension_;
};

/// Precomputed exp(i*pi*t/d) for t = 0 .. 2d-1.
///
/// Entries at multiples of d/2 are exact (1, i, -1, -i) and conjugate pairs
/// are exact conjugates of each other, so phase identities that hold on the
/// exponents hold bit-for-bit on the complex values.
class RootTable {
   public:
    explicit RootTable(int64_t dimension);

    int64_t dimension() const {
        return dimension_;
    }
    const std::vector<Complex> &values() const {
        return values_;
    }
    const Complex &operator[](int64_t t) const {
        return values_[static_cast<size_t>(t)];
    }

    /// Shared immutable table for `dimension`; cached per process.
    static std::shared_ptr<const RootTable> for_dimension(int64_t dimension);

   private:
    int64_t dimension_;
    std::vector<Complex> values_;
};

/// omega^power as a phase in dimension d.
PhaseExponent phase_of_omega(int64_t power, int64_t d);

/// omega^(l * j(j+1)/2); the exponent l*j*(j+1) is always even.
PhaseExponent triangular_phase(int64_t j, int64_t l, int64_t d);

/// omega^(-j^2/2) for even d.
PhaseExponent square_phase(int64_t j, int64_t d);

Complex to_complex(const PhaseExponent &p, const RootTable &table);

}  // namespace mubcirc

#endif
