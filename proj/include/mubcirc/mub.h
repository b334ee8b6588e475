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

#ifndef MUBCIRC_MUB_H
#define MUBCIRC_MUB_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mubcirc/linalg.h"

namespace mubcirc {

/// Which construction produced a family.
enum class Recipe {
    kPrime,         // {1, F, R, R^2, ..., R^{d-1}}, odd prime d
    kDTwo,          // {1, F, P_1} in dimension 2
    kOddComposite,  // {1, F, R, ..., R^{p-1}}, p the smallest prime factor
    kEven,          // {1, F, R}, even d >= 4
};

std::string_view recipe_name(Recipe recipe);

struct LabeledBasis {
    std::string label;
    /// Columns are the basis vectors.
    DenseMatrix matrix;
    /// Set when the basis is circulant; enables the O(d^2) product path.
    std::optional<CirculantMatrix> circulant;
};

/// Bases claimed mutually unbiased. The first basis is always the identity.
struct MubFamily {
    int64_t dimension;
    Recipe recipe;
    std::vector<LabeledBasis> bases;
};

/// Number of bases build_family produces for d.
int64_t family_size(int64_t d);

/// Builds the family for d >= 2 and checks every member is unitary at
/// default_tolerance(d); throws std::logic_error otherwise.
MubFamily build_family(int64_t d, int64_t dense_cap = kDefaultDenseCap);

enum class ProductStrategy {
    /// Every A_i^* A_j as a dense O(d^3) product.
    kDense,
    /// Circulant pairs via cyclic convolution; everything else dense.
    kStructured,
};

struct PairResult {
    size_t first;
    size_t second;
    std::string first_label;
    std::string second_label;
    double min_modulus;
    double max_modulus;
    /// Worst | |(A_i^* A_j)[r, c]| - d^{-1/2} |.
    double max_deviation;
    bool pass;
    double elapsed_ms;
};

struct BasisResult {
    size_t index;
    std::string label;
    /// Worst deviation from unitary Hadamard.
    double max_deviation;
    bool pass;
    double elapsed_ms;
};

struct UnbiasednessReport {
    int64_t dimension;
    double tolerance;
    /// Every unordered pair (i < j), in lexicographic order.
    std::vector<PairResult> pairs;
    /// Every non-identity basis.
    std::vector<BasisResult> bases;
    bool pass;
};

UnbiasednessReport verify_family(const MubFamily &family, double tol,
                                 ProductStrategy strategy = ProductStrategy::kStructured);

/// Checks the two product identities behind pairwise unbiasedness of the
/// prime family, each side computed independently:
///   (R^*)^{k'} R^k = R^{k - k'}   and   F^* R^k = alpha^k D^k F^*.
struct PairStructureRecord {
    int64_t dimension;
    int64_t k_low;
    int64_t k_high;
    double power_deviation;
    double fourier_deviation;
    bool pass;
};

PairStructureRecord check_pair_product_structure(int64_t d, int64_t k_low, int64_t k_high, double tol);

/// R^2 in even dimension d >= 4: unitary and circulant, but not Hadamard.
struct NegativeCheckRecord {
    int64_t dimension;
    double unitary_deviation;
    double circulant_deviation;
    double hadamard_deviation;
    bool unitary;
    bool circulant;
    bool hadamard;
    /// Row indices j where |(R^2)[j, 0]| misses d^{-1/2} by more than tol;
    /// every other entry repeats one of these by circulant structure.
    std::vector<int64_t> offending_rows;
    std::vector<double> offending_moduli;

    /// The expected failure was observed.
    bool failure_detected() const {
        return unitary && circulant && !hadamard;
    }
};

NegativeCheckRecord negative_check_even(int64_t d, double tol);

}  // namespace mubcirc

#endif
