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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracle.h"

namespace mubcirc {
namespace {

TEST(PhaseOfOmega, Examples) {
    EXPECT_EQ(phase_of_omega(0, 5).t(), 0);
    EXPECT_EQ(phase_of_omega(5, 5).t(), 0);
    EXPECT_EQ(phase_of_omega(3, 5).t(), 6);
    EXPECT_EQ(phase_of_omega(-1, 5).t(), 8);
}

TEST(TriangularPhase, Examples) {
    EXPECT_EQ(triangular_phase(0, 1, 7).t(), 0);
    EXPECT_EQ(triangular_phase(2, 1, 3).t(), 0);
    EXPECT_EQ(triangular_phase(1, 2, 5).t(), 4);
}

TEST(SquarePhase, Examples) {
    EXPECT_EQ(square_phase(0, 4).t(), 0);
    EXPECT_EQ(square_phase(1, 4).t(), 7);
    EXPECT_EQ(square_phase(2, 6).t(), 8);
    EXPECT_THROW(square_phase(1, 5), std::invalid_argument);
}

TEST(ToComplex, Examples) {
    for (int64_t d = 1; d <= 12; d++) {
        RootTable table(d);
        EXPECT_EQ(to_complex(PhaseExponent(0, d), table), Complex(1, 0));
        EXPECT_EQ(to_complex(PhaseExponent(d, d), table), Complex(-1, 0));
    }
    RootTable two(2);
    EXPECT_EQ(to_complex(PhaseExponent(1, 2), two), Complex(0, 1));
    EXPECT_EQ(to_complex(PhaseExponent(3, 2), two), Complex(0, -1));
}

TEST(ToComplex, RejectsForeignTable) {
    RootTable table(4);
    EXPECT_THROW(to_complex(PhaseExponent(1, 5), table), std::invalid_argument);
}

TEST(PhaseExponent, MixedDimensionsRejected) {
    EXPECT_THROW(PhaseExponent(1, 4) + PhaseExponent(1, 5), std::invalid_argument);
    EXPECT_THROW(PhaseExponent(0, 0), std::invalid_argument);
}

TEST(RootTable, MatchesPolarOracle) {
    for (int64_t d = 1; d <= 200; d++) {
        RootTable table(d);
        for (int64_t t = 0; t < 2 * d; t++) {
            EXPECT_LT(std::abs(table[t] - oracle::expi(static_cast<double>(t), static_cast<double>(d))), 1e-15)
                << "d=" << d << " t=" << t;
        }
    }
}

TEST(RootTable, ConjugatePairsExact) {
    for (int64_t d = 1; d <= 64; d++) {
        RootTable table(d);
        for (int64_t t = 1; t < 2 * d; t++) {
            EXPECT_EQ(table[2 * d - t], std::conj(table[t]));
        }
    }
}

TEST(RootTable, CacheReturnsSameTable) {
    EXPECT_EQ(RootTable::for_dimension(17).get(), RootTable::for_dimension(17).get());
}

// Property: exponent addition is multiplication of the complex values.
TEST(PhaseExponent, ProductLaw) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; trial++) {
        int64_t d = std::uniform_int_distribution<int64_t>(1, 97)(rng);
        std::uniform_int_distribution<int64_t> any(-1000, 1000);
        PhaseExponent p(any(rng), d);
        PhaseExponent q(any(rng), d);
        auto table = RootTable::for_dimension(d);
        Complex lhs = to_complex(p + q, *table);
        Complex rhs = to_complex(p, *table) * to_complex(q, *table);
        EXPECT_LT(std::abs(lhs - rhs), 1e-14);
        EXPECT_LT(std::abs(to_complex(-p, *table) - std::conj(to_complex(p, *table))), 1e-15);
        int64_t n = std::uniform_int_distribution<int64_t>(-50, 50)(rng);
        EXPECT_EQ(p.pow(n), PhaseExponent(p.t() * n, d));
    }
}

// Property: l*j(j+1) is always even, so the triangular phase is a power of omega.
TEST(TriangularPhase, AlwaysOmegaPowerAndPeriodic) {
    for (int64_t d = 1; d <= 60; d++) {
        for (int64_t l = -5; l <= 5; l++) {
            for (int64_t j = 0; j < 3 * d; j++) {
                PhaseExponent p = triangular_phase(j, l, d);
                EXPECT_TRUE(p.is_omega_power());
                if (d % 2 == 1) {
                    EXPECT_EQ(p, triangular_phase(j + d, l, d));
                }
            }
        }
    }
}

TEST(SquarePhase, PeriodicInEvenDimension) {
    for (int64_t d = 2; d <= 60; d += 2) {
        for (int64_t j = 0; j < 2 * d; j++) {
            EXPECT_EQ(square_phase(j, d), square_phase(j + d, d));
        }
    }
}

TEST(Arithmetic, Helpers) {
    EXPECT_EQ(mod_floor(-1, 8), 7);
    EXPECT_EQ(mod_floor(16, 8), 0);
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(gcd(-4, 6), 2);
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
    EXPECT_FALSE(is_prime(1));
    EXPECT_EQ(smallest_divisor(15), 3);
    EXPECT_EQ(smallest_divisor(25), 5);
    EXPECT_EQ(smallest_divisor(13), 13);
    int64_t big = (int64_t{1} << 62) - 57;
    EXPECT_EQ(mul_mod(big - 1, big - 1, big), 1);
}

}  // namespace
}  // namespace mubcirc
