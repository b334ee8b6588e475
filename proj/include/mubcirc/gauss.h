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

#ifndef MUBCIRC_GAUSS_H
#define MUBCIRC_GAUSS_H

#include <cstdint>

#include "mubcirc/phase_ring.h"

namespace mubcirc {

/// Quadratic Gauss sum S(a, b, d) = sum_{j=0}^{d-1} exp(i*pi*(a*j^2 + b*j)/d).
struct GaussSumSpec {
    int64_t a;
    int64_t b;
    int64_t d;
};

/// O(d) summation over exact phase exponents.
Complex gauss_sum_direct(const GaussSumSpec &s);

/// One reciprocity step,
///   S(a, b, d) = |d/a|^{1/2} exp(i*pi/4 * (sgn(ad) - b^2/(ad))) S(-d, -b, a),
/// followed by direct summation of the right-hand sum. Needs a != 0 and
/// a*d + b even.
Complex gauss_sum_reciprocity(const GaussSumSpec &s);

/// Repeated reciprocity with coefficient reduction in between; the modulus at
/// least halves every step, so this runs in O(log d). Needs a*d + b even.
Complex gauss_sum_recursive(const GaussSumSpec &s);

/// alpha = d^{-1/2} sum_k omega^{-k(k+1)/2} for odd d >= 3. Unit modulus; it is
/// the scalar relating R to F D F^*.
Complex rotation_alpha(int64_t d);

/// A measured modulus against the value it is claimed to equal.
struct ModulusCheck {
    double measured;
    double expected;
    double deviation;

    bool pass(double tol) const {
        return deviation <= tol;
    }
};

/// | sum_k exp((2*i*pi/d) * (l*k(k+1)/2 + j*k)) | against sqrt(d), for odd d >= 3,
/// gcd(l, d) = 1 and 0 <= j < d.
ModulusCheck verify_identity_gauss(int64_t d, int64_t l, int64_t j);

/// Same sum without the coprimality precondition, for probing what happens
/// outside the asserted range.
ModulusCheck probe_identity_gauss(int64_t d, int64_t l, int64_t j);

/// |Tr D^k| against sqrt(d), for odd d >= 3 and gcd(k, d) = 1.
ModulusCheck verify_trace_D(int64_t d, int64_t k);

/// |S(1, 0, d)| against sqrt(d), for even d >= 2.
ModulusCheck verify_even_gauss(int64_t d);

/// The two sides of the criterion for the first column of R^k to have
/// constant modulus, for odd prime d, 1 <= k <= d-1 and |m| <= d-1:
///   |S(k, k+2m, d)| = sqrt(d)   and   |S(-d, -(k+2m), k)| = sqrt(k).
struct RotationColumnCheck {
    ModulusCheck direct;
    ModulusCheck reciprocal;
};

RotationColumnCheck verify_rotation_column_sums(int64_t d, int64_t k, int64_t m);

}  // namespace mubcirc

#endif
