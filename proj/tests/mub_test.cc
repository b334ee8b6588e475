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

#include <gtest/gtest.h>

#include <stdexcept>

#include "mubcirc/phase_ring.h"
#include "oracle.h"

namespace mubcirc {
namespace {

TEST(FamilySize, ByDimensionClass) {
    EXPECT_EQ(family_size(2), 3);
    EXPECT_EQ(family_size(5), 6);
    EXPECT_EQ(family_size(97), 98);
    EXPECT_EQ(family_size(15), 4);
    EXPECT_EQ(family_size(25), 6);
    EXPECT_EQ(family_size(4), 3);
    EXPECT_EQ(family_size(30), 3);
    EXPECT_THROW(family_size(1), std::invalid_argument);
}

TEST(BuildFamily, DimensionTwoMatchesDisplayedMatrices) {
    MubFamily f = build_family(2);
    EXPECT_EQ(f.recipe, Recipe::kDTwo);
    ASSERT_EQ(f.bases.size(), 3u);
    const double s = 1 / std::sqrt(2.0);
    const Complex i(0, 1);
    EXPECT_LT(oracle::difference(f.bases[0].matrix, {{1, 0}, {0, 1}}), 1e-12);
    EXPECT_LT(oracle::difference(f.bases[1].matrix, {{s, s}, {s, -s}}), 1e-12);
    EXPECT_LT(oracle::difference(f.bases[2].matrix, {{s, s * i}, {s * i, s}}), 1e-12);
    // The product is e^{i pi/4}/sqrt(2) [[1, 1], [-i, i]]; the second row is
    // orthogonal to the first, as it must be for a unitary.
    Complex phase = oracle::expi(1, 4) * s;
    DenseMatrix product = adjoint_multiply(f.bases[1].matrix, f.bases[2].matrix);
    EXPECT_LT(oracle::difference(product, {{phase, phase}, {-i * phase, i * phase}}), 1e-12);
    EXPECT_TRUE(is_unitary_hadamard(product, 1e-12).pass);
}

TEST(BuildFamily, RecipesAndSizes) {
    EXPECT_EQ(build_family(5).recipe, Recipe::kPrime);
    EXPECT_EQ(build_family(5).bases.size(), 6u);
    EXPECT_EQ(build_family(15).recipe, Recipe::kOddComposite);
    EXPECT_EQ(build_family(15).bases.size(), 4u);
    EXPECT_EQ(build_family(6).recipe, Recipe::kEven);
    EXPECT_EQ(build_family(6).bases.size(), 3u);
    EXPECT_THROW(build_family(1), std::invalid_argument);
    EXPECT_THROW(build_family(40, 32), std::length_error);
}

TEST(BuildFamily, PrimeMembersArePowersOfRotation) {
    MubFamily f = build_family(7);
    DenseMatrix r = build_R(7).to_dense();
    for (int64_t k = 1; k <= 6; k++) {
        const auto &basis = f.bases[static_cast<size_t>(k + 1)];
        EXPECT_TRUE(basis.circulant.has_value());
        EXPECT_LT(max_abs_difference(basis.matrix, power(r, k)), 1e-12);
    }
    EXPECT_LT(max_abs_difference(f.bases[1].matrix, build_fourier(7)), 1e-15);
}

TEST(VerifyFamily, PassesAcrossDimensionClasses) {
    for (int64_t d = 2; d <= 40; d++) {
        MubFamily f = build_family(d);
        UnbiasednessReport r = verify_family(f, default_tolerance(d));
        EXPECT_TRUE(r.pass) << d;
        size_t n = f.bases.size();
        EXPECT_EQ(r.pairs.size(), n * (n - 1) / 2);
        EXPECT_EQ(r.bases.size(), n - 1);
    }
}

TEST(VerifyFamily, StrategiesAgree) {
    for (int64_t d : {2, 7, 9, 12, 13}) {
        MubFamily f = build_family(d);
        UnbiasednessReport dense = verify_family(f, default_tolerance(d), ProductStrategy::kDense);
        UnbiasednessReport fast = verify_family(f, default_tolerance(d), ProductStrategy::kStructured);
        ASSERT_EQ(dense.pairs.size(), fast.pairs.size());
        for (size_t i = 0; i < dense.pairs.size(); i++) {
            EXPECT_EQ(dense.pairs[i].pass, fast.pairs[i].pass);
            EXPECT_NEAR(dense.pairs[i].max_deviation, fast.pairs[i].max_deviation, 1e-12);
            EXPECT_NEAR(dense.pairs[i].min_modulus, fast.pairs[i].min_modulus, 1e-12);
        }
    }
}

TEST(VerifyFamily, SevenHasTwentyEightPairs) {
    UnbiasednessReport r = verify_family(build_family(7), default_tolerance(7));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.pairs.size(), 28u);
}

TEST(VerifyFamily, RepeatedBasisFails) {
    MubFamily f = build_family(5);
    f.bases.erase(f.bases.begin() + 2, f.bases.end());
    f.bases.push_back(f.bases[1]);
    UnbiasednessReport r = verify_family(f, default_tolerance(5));
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.pairs.back().pass);
    EXPECT_TRUE(r.pairs[0].pass);
}

// Property: a global phase on any basis leaves unbiasedness unchanged.
TEST(VerifyFamily, GlobalPhaseInvariance) {
    for (int64_t d : {3, 5, 8, 9}) {
        MubFamily f = build_family(d);
        for (auto &b : f.bases) {
            Complex phase = oracle::expi(0.37 * static_cast<double>(&b - f.bases.data() + 1), 1);
            b.matrix = b.matrix.scaled(phase);
            if (b.circulant) {
                b.circulant = b.circulant->scaled(phase);
            }
        }
        EXPECT_TRUE(verify_family(f, default_tolerance(d)).pass) << d;
    }
}

TEST(PairStructure, Examples) {
    PairStructureRecord a = check_pair_product_structure(5, 1, 3, 1e-9);
    EXPECT_TRUE(a.pass);
    EXPECT_LE(a.power_deviation, 1e-9);
    EXPECT_LE(a.fourier_deviation, 1e-9);
    EXPECT_TRUE(check_pair_product_structure(5, 1, 2, 1e-9).pass);
    EXPECT_TRUE(check_pair_product_structure(3, 1, 2, 1e-9).pass);
    EXPECT_THROW(check_pair_product_structure(6, 1, 2, 1e-9), std::invalid_argument);
}

TEST(NegativeCheck, RotationSquaredEven) {
    for (int64_t d = 4; d <= 40; d += 2) {
        NegativeCheckRecord n = negative_check_even(d, default_tolerance(d));
        EXPECT_TRUE(n.unitary) << d;
        EXPECT_TRUE(n.circulant) << d;
        EXPECT_FALSE(n.hadamard) << d;
        EXPECT_TRUE(n.failure_detected()) << d;
        EXPECT_FALSE(n.offending_rows.empty());
    }
    EXPECT_THROW(negative_check_even(2, 1e-9), std::invalid_argument);
    EXPECT_THROW(negative_check_even(5, 1e-9), std::invalid_argument);
}

// Rotation powers in odd composite d are Hadamard exactly for coprime k.
TEST(OddComposite, RotationPowersCoprimeIff) {
    for (int64_t d : {9, 15, 21, 25, 27, 33}) {
        CirculantMatrix r = build_R(d);
        for (int64_t k = 1; k < d; k++) {
            DenseMatrix rk = circulant_power(r, k).to_dense();
            EXPECT_EQ(is_unitary_hadamard(rk, default_tolerance(d)).pass, gcd(k, d) == 1) << d << " " << k;
        }
    }
}

TEST(RecipeName, Names) {
    EXPECT_EQ(recipe_name(Recipe::kPrime), "Prime");
    EXPECT_EQ(recipe_name(Recipe::kDTwo), "DTwo");
    EXPECT_EQ(recipe_name(Recipe::kOddComposite), "OddComposite");
    EXPECT_EQ(recipe_name(Recipe::kEven), "Even");
}

}  // namespace
}  // namespace mubcirc
