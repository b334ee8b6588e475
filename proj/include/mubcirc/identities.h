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

#ifndef MUBCIRC_IDENTITIES_H
#define MUBCIRC_IDENTITIES_H

// Structural matrix identities of the construction. Each function builds the
// two sides along different routes (closed-form builders on one side, dense
// products of other builders on the other) and returns the worst entrywise
// difference.

#include <cstdint>

namespace mubcirc {

/// VU against omega * UV.
double weyl_commutation_deviation(int64_t d);
/// F^* V F against U.
double fourier_shift_diagonalization_deviation(int64_t d);
/// F^2 against the index reversal W.
double fourier_square_reversal_deviation(int64_t d);
/// F^4 against the identity.
double fourier_fourth_power_deviation(int64_t d);
/// RV against VR.
double rotation_shift_commutator_deviation(int64_t d);

/// R^k U (R^*)^k against V^k U, odd d, 0 <= k <= d. For even d only k = 1 is
/// defined, and the right side carries the extra phase omega^{-1/2}:
/// R U R^* = omega^{-1/2} V U.
double rotation_conjugation_deviation(int64_t d, int64_t k);

/// R against alpha F D F^*, odd d.
double rotation_factorization_deviation(int64_t d);
/// R^d against alpha^d times the identity, odd d.
double rotation_period_deviation(int64_t d);
/// P_k = D^{-k} F against alpha^k F^* R^{-k} F^2, odd d, 0 <= k < d.
double pk_rotation_relation_deviation(int64_t d, int64_t k);

/// Worst deviation of F^* R from unitary Hadamard, even d.
double even_fourier_rotation_hadamard_deviation(int64_t d);

}  // namespace mubcirc

#endif
