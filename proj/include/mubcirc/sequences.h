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

#ifndef MUBCIRC_SEQUENCES_H
#define MUBCIRC_SEQUENCES_H

#include <cstdint>
#include <optional>
#include <vector>

#include "mubcirc/linalg.h"
#include "mubcirc/phase_ring.h"

namespace mubcirc {

/// A length-d complex sequence c_0 .. c_{d-1}.
struct Sequence {
    std::vector<Complex> values;

    int64_t dimension() const {
        return static_cast<int64_t>(values.size());
    }
};

/// Unitary DFT with positive exponent: hat c_l = d^{-1/2} sum_k c_k omega^{kl}.
Sequence dft_sequence(const Sequence &c);

/// Cyclic autocorrelation sum_k conj(c_k) c_{(j+k) mod d}, for 0 <= j < d.
Complex autocorrelation(const Sequence &c, int64_t j);

struct BiunimodularReport {
    bool pass;
    /// Worst distance of |c_j| or |hat c_j| from 1.
    double max_deviation;
    std::vector<double> value_moduli;
    std::vector<double> spectrum_moduli;
};

BiunimodularReport is_biunimodular(const Sequence &c, double tol);

/// g^(k)_j = exp(i*pi*k*j*(j+1)/d) for odd d >= 3.
Sequence gauss_sequence(int64_t d, int64_t k);

/// Even-dimension counterpart exp(-i*pi*k*j^2/d); k = 1 is sqrt(d) times the
/// first column of the even-dimension R.
Sequence square_gauss_sequence(int64_t d, int64_t k);

/// d^{-1/2} circ(c).
CirculantMatrix normalized_circulant(const Sequence &c);

inline constexpr int64_t kMaxSearchDimension = 6;
inline constexpr int64_t kMaxSearchAlphabet = 12;

struct SearchHit {
    /// Entry j is exp(2*i*pi*exponents[j]/m).
    std::vector<int64_t> exponents;
    Sequence sequence;
};

/// Every sequence over the m-th roots of unity that is bi-unimodular within
/// tol, in lexicographic order of exponents. Limited to d <= 6 and m <= 12.
std::vector<SearchHit> exhaustive_circulant_hadamard(int64_t d, int64_t alphabet_order, double tol = 1e-9);

/// Lexicographically smallest member of the orbit of `exponents` under cyclic
/// shifts and multiplication by an m-th root of unity.
std::vector<int64_t> canonical_orbit(const std::vector<int64_t> &exponents, int64_t alphabet_order);

/// Expresses every entry of c as an m-th root of unity, if possible within tol.
std::optional<std::vector<int64_t>> root_exponents(const Sequence &c, int64_t alphabet_order, double tol = 1e-9);

}  // namespace mubcirc

#endif
