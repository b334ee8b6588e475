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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "mubcirc/phase_ring.h"
#include "oracle.h"

namespace mubcirc {
namespace {

Sequence seq(std::vector<Complex> v) {
    return Sequence{std::move(v)};
}

TEST(Dft, Examples) {
    for (int64_t d : {1, 2, 5, 9}) {
        Sequence ones = seq(std::vector<Complex>(static_cast<size_t>(d), 1.0));
        Sequence hat = dft_sequence(ones);
        EXPECT_NEAR(std::abs(hat.values[0] - std::sqrt(static_cast<double>(d))), 0, 1e-13);
        for (int64_t l = 1; l < d; l++) {
            EXPECT_LT(std::abs(hat.values[l]), 1e-13);
        }
        Sequence delta = seq(std::vector<Complex>(static_cast<size_t>(d), 0.0));
        delta.values[0] = 1.0;
        for (const auto &v : dft_sequence(delta).values) {
            EXPECT_LT(std::abs(v - 1 / std::sqrt(static_cast<double>(d))), 1e-15);
        }
    }
    Sequence c = seq({1.0, oracle::omega(-1, 3), 1.0});
    for (const auto &v : dft_sequence(c).values) {
        EXPECT_NEAR(std::abs(v), 1.0, 1e-14);
    }
}

// Property: the DFT is unitary, so it preserves the l2 norm.
TEST(Dft, Parseval) {
    std::mt19937_64 rng(17);
    for (int64_t d = 1; d <= 40; d++) {
        Sequence c = seq(oracle::random_vector(rng, d));
        double lhs = 0;
        double rhs = 0;
        for (const auto &v : c.values) {
            lhs += std::norm(v);
        }
        for (const auto &v : dft_sequence(c).values) {
            rhs += std::norm(v);
        }
        EXPECT_NEAR(lhs, rhs, 1e-11 * lhs);
    }
}

TEST(Dft, MatchesOracle) {
    std::mt19937_64 rng(19);
    for (int64_t d = 1; d <= 24; d++) {
        Sequence c = seq(oracle::random_vector(rng, d));
        Sequence hat = dft_sequence(c);
        for (int64_t l = 0; l < d; l++) {
            Complex expected = 0;
            for (int64_t k = 0; k < d; k++) {
                expected += c.values[k] * oracle::omega(static_cast<double>(k * l), d);
            }
            expected /= std::sqrt(static_cast<double>(d));
            EXPECT_LT(std::abs(hat.values[l] - expected), 1e-12);
        }
    }
}

TEST(Autocorrelation, Examples) {
    std::mt19937_64 rng(23);
    for (int64_t d = 1; d <= 12; d++) {
        Sequence u = seq(oracle::random_unimodular(rng, d));
        EXPECT_NEAR(std::abs(autocorrelation(u, 0) - static_cast<double>(d)), 0, 1e-13);
        Sequence ones = seq(std::vector<Complex>(static_cast<size_t>(d), 1.0));
        for (int64_t j = 0; j < d; j++) {
            EXPECT_LT(std::abs(autocorrelation(ones, j) - static_cast<double>(d)), 1e-13);
        }
    }
}

// Property: the autocorrelation is the inverse DFT of the squared spectrum,
// sum_l |c-hat_l|^2 omega^{-jl}.
TEST(Autocorrelation, SpectrumIdentity) {
    std::mt19937_64 rng(29);
    for (int64_t d = 2; d <= 32; d++) {
        for (int trial = 0; trial < 20; trial++) {
            Sequence c = seq(oracle::random_vector(rng, d));
            Sequence hat = dft_sequence(c);
            double scale = 0;
            for (const auto &v : c.values) {
                scale += std::norm(v);
            }
            for (int64_t j = 0; j < d; j++) {
                Complex rhs = 0;
                for (int64_t l = 0; l < d; l++) {
                    rhs += std::norm(hat.values[l]) * oracle::omega(-static_cast<double>(j * l), d);
                }
                EXPECT_LE(std::abs(autocorrelation(c, j) - rhs), 1e-10 * scale);
            }
        }
    }
}

TEST(Biunimodular, Examples) {
    for (int64_t d = 2; d <= 8; d++) {
        Sequence ones = seq(std::vector<Complex>(static_cast<size_t>(d), 1.0));
        EXPECT_FALSE(is_biunimodular(ones, 1e-9).pass);
    }
    EXPECT_TRUE(is_biunimodular(gauss_sequence(3, 1), 1e-9).pass);
    EXPECT_TRUE(is_biunimodular(square_gauss_sequence(4, 1), 1e-9).pass);
    EXPECT_FALSE(is_biunimodular(gauss_sequence(9, 3), 1e-9).pass);
}

TEST(GaussSequence, Examples) {
    for (const auto &v : gauss_sequence(5, 0).values) {
        EXPECT_EQ(v, Complex(1, 0));
    }
    Sequence g = gauss_sequence(3, 1);
    Complex w = oracle::omega(1, 3);
    EXPECT_LT(std::abs(g.values[0] - 1.0) + std::abs(g.values[1] - w) + std::abs(g.values[2] - 1.0), 1e-15);
    EXPECT_THROW(gauss_sequence(4, 1), std::invalid_argument);
    EXPECT_THROW(square_gauss_sequence(5, 1), std::invalid_argument);
}

TEST(GaussSequence, MatchesOracle) {
    for (int64_t d = 3; d <= 41; d += 2) {
        for (int64_t k = -3; k <= d; k++) {
            Sequence g = gauss_sequence(d, k);
            for (int64_t j = 0; j < d; j++) {
                int64_t e = mubcirc::mod_floor(k * (j * (j + 1) / 2), d);
                EXPECT_LT(std::abs(g.values[j] - oracle::omega(static_cast<double>(e), d)), 1e-14);
            }
        }
    }
    for (int64_t d = 2; d <= 40; d += 2) {
        for (int64_t k = 1; k < d; k++) {
            Sequence g = square_gauss_sequence(d, k);
            for (int64_t j = 0; j < d; j++) {
                int64_t e = mubcirc::mod_floor(-k * j * j, 2 * d);
                EXPECT_LT(std::abs(g.values[j] - oracle::expi(static_cast<double>(e), static_cast<double>(d))), 1e-14);
            }
        }
    }
}

TEST(GaussSequence, BiunimodularForPrimes) {
    for (int64_t d = 3; d <= 97; d += 2) {
        if (!is_prime(d)) {
            continue;
        }
        for (int64_t k = 1; k < d; k++) {
            EXPECT_TRUE(is_biunimodular(gauss_sequence(d, k), default_tolerance(d)).pass) << d << " " << k;
        }
    }
}

// For odd composite d the sequence is bi-unimodular exactly when gcd(k, d) = 1.
TEST(GaussSequence, CoprimeIffForComposites) {
    for (int64_t d : {9, 15, 21, 25, 27, 33, 35, 45}) {
        for (int64_t k = 1; k < d; k++) {
            bool coprime = gcd(k, d) == 1;
            EXPECT_EQ(is_biunimodular(gauss_sequence(d, k), default_tolerance(d)).pass, coprime) << d << " " << k;
        }
    }
}

TEST(GaussSequence, EvenSquareCoprimeIff) {
    for (int64_t d = 2; d <= 40; d += 2) {
        for (int64_t k = 1; k < 2 * d; k++) {
            bool coprime = gcd(k, d) == 1;
            EXPECT_EQ(is_biunimodular(square_gauss_sequence(d, k), default_tolerance(d)).pass, coprime)
                << d << " " << k;
        }
    }
}

// A sequence is bi-unimodular exactly when its normalized circulant is a
// unitary Hadamard matrix.
TEST(NormalizedCirculant, EquivalentToBiunimodular) {
    std::mt19937_64 rng(31);
    for (int64_t d = 2; d <= 16; d++) {
        std::vector<Sequence> cases;
        if (d % 2) {
            for (int64_t k = 0; k < d; k++) {
                cases.push_back(gauss_sequence(d, k));
            }
        } else {
            for (int64_t k = 0; k < d; k++) {
                cases.push_back(square_gauss_sequence(d, k));
            }
        }
        cases.push_back(seq(oracle::random_unimodular(rng, d)));
        cases.push_back(seq(std::vector<Complex>(static_cast<size_t>(d), 1.0)));
        const double tol = default_tolerance(d);
        for (const auto &c : cases) {
            DenseMatrix m = normalized_circulant(c).to_dense();
            EXPECT_EQ(is_biunimodular(c, tol).pass, is_unitary_hadamard(m, tol).pass);
        }
    }
}

TEST(Search, FrozenCounts) {
    // Counts from an independent brute-force enumeration.
    EXPECT_EQ(exhaustive_circulant_hadamard(3, 3).size(), 18u);
    EXPECT_EQ(exhaustive_circulant_hadamard(2, 4).size(), 8u);
    EXPECT_EQ(exhaustive_circulant_hadamard(3, 2).size(), 0u);
    EXPECT_EQ(exhaustive_circulant_hadamard(4, 4).size(), 32u);
    EXPECT_EQ(exhaustive_circulant_hadamard(5, 5).size(), 100u);
}

TEST(Search, ContainsGaussOrbits) {
    std::set<std::vector<int64_t>> three;
    for (const auto &h : exhaustive_circulant_hadamard(3, 3)) {
        three.insert(canonical_orbit(h.exponents, 3));
    }
    for (int64_t k : {1, 2}) {
        auto exps = root_exponents(gauss_sequence(3, k), 3);
        ASSERT_TRUE(exps.has_value());
        EXPECT_TRUE(three.count(canonical_orbit(*exps, 3)));
    }
    std::vector<std::vector<int64_t>> two;
    for (const auto &h : exhaustive_circulant_hadamard(2, 4)) {
        two.push_back(h.exponents);
    }
    EXPECT_NE(std::find(two.begin(), two.end(), std::vector<int64_t>{0, 1}), two.end());
    EXPECT_NE(std::find(two.begin(), two.end(), std::vector<int64_t>{0, 3}), two.end());
}

TEST(Search, LexicographicAndValid) {
    auto hits = exhaustive_circulant_hadamard(4, 4);
    for (size_t i = 1; i < hits.size(); i++) {
        EXPECT_LT(hits[i - 1].exponents, hits[i].exponents);
    }
    for (const auto &h : hits) {
        EXPECT_TRUE(is_biunimodular(h.sequence, 1e-9).pass);
    }
}

TEST(Search, Bounds) {
    EXPECT_THROW(exhaustive_circulant_hadamard(kMaxSearchDimension + 1, 2), std::invalid_argument);
    EXPECT_THROW(exhaustive_circulant_hadamard(3, kMaxSearchAlphabet + 1), std::invalid_argument);
    EXPECT_THROW(exhaustive_circulant_hadamard(0, 2), std::invalid_argument);
}

TEST(CanonicalOrbit, ShiftAndPhaseInvariant) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; trial++) {
        int64_t m = std::uniform_int_distribution<int64_t>(1, 8)(rng);
        int64_t d = std::uniform_int_distribution<int64_t>(1, 6)(rng);
        std::vector<int64_t> e(static_cast<size_t>(d));
        for (auto &x : e) {
            x = std::uniform_int_distribution<int64_t>(0, m - 1)(rng);
        }
        int64_t shift = std::uniform_int_distribution<int64_t>(0, d - 1)(rng);
        int64_t phase = std::uniform_int_distribution<int64_t>(0, m - 1)(rng);
        std::vector<int64_t> moved(e.size());
        for (int64_t i = 0; i < d; i++) {
            moved[i] = (e[(i + shift) % d] + phase) % m;
        }
        EXPECT_EQ(canonical_orbit(e, m), canonical_orbit(moved, m));
    }
}

TEST(RootExponents, RecognizesAlphabet) {
    auto e = root_exponents(seq({1.0, Complex(0, 1), -1.0}), 4);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(*e, (std::vector<int64_t>{0, 1, 2}));
    EXPECT_FALSE(root_exponents(seq({1.0, Complex(0, 1)}), 3).has_value());
}

}  // namespace
}  // namespace mubcirc
