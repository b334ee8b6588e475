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

#include "mubcirc/identities.h"

#include <stdexcept>
#include <string>

#include "mubcirc/gauss.h"
#include "mubcirc/linalg.h"

namespace mubcirc {

namespace {

void require_odd(int64_t d, const char *what) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument(std::string(what) + " needs odd d >= 3, got " + std::to_string(d));
    }
}

Complex ipow(Complex z, int64_t n) {
    Complex result{1, 0};
    for (int64_t i = 0; i < n; i++) {
        result *= z;
    }
    return result;
}

}  // namespace

double weyl_commutation_deviation(int64_t d) {
    DenseMatrix v = build_V(d).to_dense();
    DiagonalUnitary u = build_U(d);
    Complex omega = to_complex(phase_of_omega(1, d), *RootTable::for_dimension(d));
    return max_abs_difference(multiply(v, u), multiply(u, v).scaled(omega));
}

double fourier_shift_diagonalization_deviation(int64_t d) {
    DenseMatrix f = build_fourier(d);
    DenseMatrix lhs = adjoint_multiply(f, multiply(build_V(d).to_dense(), f));
    return max_abs_difference(lhs, build_U(d).to_dense());
}

double fourier_square_reversal_deviation(int64_t d) {
    DenseMatrix f = build_fourier(d);
    return max_abs_difference(multiply(f, f), build_reversal(d));
}

double fourier_fourth_power_deviation(int64_t d) {
    return max_abs_difference(power(build_fourier(d), 4), DenseMatrix::identity(d));
}

double rotation_shift_commutator_deviation(int64_t d) {
    DenseMatrix r = build_R(d).to_dense();
    DenseMatrix v = build_V(d).to_dense();
    return max_abs_difference(multiply(r, v), multiply(v, r));
}

double rotation_conjugation_deviation(int64_t d, int64_t k) {
    DiagonalUnitary u = build_U(d);
    DenseMatrix r = build_R(d).to_dense();
    if (d % 2 == 0) {
        if (k != 1) {
            throw std::invalid_argument("even-dimension rotation conjugation is only defined for k = 1");
        }
        Complex half_step = to_complex(PhaseExponent(-1, d), *RootTable::for_dimension(d));
        DenseMatrix lhs = multiply(multiply(r, u), adjoint(r));
        DenseMatrix rhs = multiply(build_V(d).to_dense(), u).scaled(half_step);
        return max_abs_difference(lhs, rhs);
    }
    if (k < 0 || k > d) {
        throw std::invalid_argument("rotation conjugation needs 0 <= k <= d");
    }
    DenseMatrix rk = power(r, k);
    DenseMatrix lhs = multiply(multiply(rk, u), adjoint(rk));
    DenseMatrix rhs = multiply(circulant_power(build_V(d), k).to_dense(), u);
    return max_abs_difference(lhs, rhs);
}

double rotation_factorization_deviation(int64_t d) {
    require_odd(d, "rotation factorization");
    DenseMatrix f = build_fourier(d);
    DenseMatrix rhs = multiply(multiply(f, build_D(d)), adjoint(f)).scaled(rotation_alpha(d));
    return max_abs_difference(build_R(d).to_dense(), rhs);
}

double rotation_period_deviation(int64_t d) {
    require_odd(d, "rotation period");
    DenseMatrix lhs = power(build_R(d).to_dense(), d);
    DenseMatrix rhs = DenseMatrix::identity(d).scaled(ipow(rotation_alpha(d), d));
    return max_abs_difference(lhs, rhs);
}

double pk_rotation_relation_deviation(int64_t d, int64_t k) {
    require_odd(d, "P_k relation");
    DenseMatrix f = build_fourier(d);
    DenseMatrix r_inverse_k = power(build_R(d).to_dense(), -k);
    DenseMatrix rhs = multiply(adjoint_multiply(f, r_inverse_k), multiply(f, f)).scaled(ipow(rotation_alpha(d), k));
    return max_abs_difference(build_Pk(d, k), rhs);
}

double even_fourier_rotation_hadamard_deviation(int64_t d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("needs even d >= 2, got " + std::to_string(d));
    }
    DenseMatrix product = adjoint_multiply(build_fourier(d), build_R(d).to_dense());
    return is_unitary_hadamard(product, default_tolerance(d)).max_deviation;
}

}  // namespace mubcirc
