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

#ifndef MUBCIRC_LINALG_H
#define MUBCIRC_LINALG_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mubcirc/phase_ring.h"

namespace mubcirc {

/// Largest dimension the dense builders will materialize unless told otherwise.
inline constexpr int64_t kDefaultDenseCap = 512;

/// 1e-9 * sqrt(d): rounding in a length-d sum of unit terms grows like sqrt(d).
double default_tolerance(int64_t d);

/// Square complex matrix, row-major.
class DenseMatrix {
   public:
    explicit DenseMatrix(int64_t dimension, std::string label = {});
    DenseMatrix(int64_t dimension, std::vector<Complex> entries, std::string label = {});

    static DenseMatrix identity(int64_t dimension, int64_t dense_cap = kDefaultDenseCap);

    int64_t dimension() const {
        return dimension_;
    }
    const std::string &label() const {
        return label_;
    }
    void set_label(std::string label) {
        label_ = std::move(label);
    }

    Complex &operator()(int64_t row, int64_t col) {
        return entries_[static_cast<size_t>(row * dimension_ + col)];
    }
    const Complex &operator()(int64_t row, int64_t col) const {
        return entries_[static_cast<size_t>(row * dimension_ + col)];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }
    std::span<Complex> entries() {
        return entries_;
    }

    DenseMatrix scaled(Complex factor) const;

   private:
    int64_t dimension_;
    std::vector<Complex> entries_;
    std::string label_;
};

/// circ(c_0, ..., c_{d-1}): entry [j, k] is first_column[(j - k) mod d].
class CirculantMatrix {
   public:
    CirculantMatrix(std::vector<Complex> first_column, std::string label = {});

    int64_t dimension() const {
        return static_cast<int64_t>(first_column_.size());
    }
    const std::vector<Complex> &first_column() const {
        return first_column_;
    }
    const std::string &label() const {
        return label_;
    }
    void set_label(std::string label) {
        label_ = std::move(label);
    }

    const Complex &entry(int64_t row, int64_t col) const;
    DenseMatrix to_dense(int64_t dense_cap = kDefaultDenseCap) const;

    /// The conjugate transpose, which is again circulant.
    CirculantMatrix adjoint() const;
    CirculantMatrix scaled(Complex factor) const;

   private:
    std::vector<Complex> first_column_;
    std::string label_;
};

/// Diagonal matrix of exact unit phases.
class DiagonalUnitary {
   public:
    DiagonalUnitary(std::vector<PhaseExponent> diagonal, std::string label = {});

    int64_t dimension() const {
        return static_cast<int64_t>(diagonal_.size());
    }
    const std::vector<PhaseExponent> &diagonal() const {
        return diagonal_;
    }
    const std::string &label() const {
        return label_;
    }

    /// Entrywise integer power; negative n gives the inverse.
    DiagonalUnitary pow(int64_t n) const;
    std::vector<Complex> values() const;
    DenseMatrix to_dense(int64_t dense_cap = kDefaultDenseCap) const;

   private:
    std::vector<PhaseExponent> diagonal_;
    std::string label_;
};

// Named matrices. Index convention is 0 .. d-1 throughout.

/// F[j, k] = d^{-1/2} omega^{jk}.
DenseMatrix build_fourier(int64_t d, int64_t dense_cap = kDefaultDenseCap);
/// U = diag(1, omega, ..., omega^{d-1}).
DiagonalUnitary build_U(int64_t d);
/// Cyclic shift with ones on the superdiagonal and in the bottom-left corner.
CirculantMatrix build_V(int64_t d);
/// D = diag(omega^{k(k+1)/2}), odd d.
DiagonalUnitary build_D(int64_t d);
/// D' = diag(omega^{-k^2/2}), even d.
DiagonalUnitary build_Dprime(int64_t d);
/// The circulant rotation matrix R whose columns diagonalize VU.
///
/// Odd d: first column d^{-1/2} omega^{-k(k+1)/2}.
/// Even d: first column d^{-1/2} omega^{-k^2/2}.
CirculantMatrix build_R(int64_t d);
/// P_k = D^{-k} F for odd d.
DenseMatrix build_Pk(int64_t d, int64_t k, int64_t dense_cap = kDefaultDenseCap);
/// Index reversal W: W[0,0] = 1 and W[j, d-j] = 1 for j >= 1.
DenseMatrix build_reversal(int64_t d, int64_t dense_cap = kDefaultDenseCap);

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b);
/// a^* b without materializing the adjoint.
DenseMatrix adjoint_multiply(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix adjoint(const DenseMatrix &a);
/// Square-and-multiply power. Negative n raises the adjoint and requires `a`
/// to pass is_unitary at default_tolerance.
DenseMatrix power(const DenseMatrix &a, int64_t n);
/// diag * a (row scaling).
DenseMatrix multiply(const DiagonalUnitary &diag, const DenseMatrix &a);
/// a * diag (column scaling).
DenseMatrix multiply(const DenseMatrix &a, const DiagonalUnitary &diag);

/// Product of circulants by cyclic convolution of first columns, O(d^2).
CirculantMatrix circulant_multiply(const CirculantMatrix &a, const CirculantMatrix &b);
/// Circulant power; negative n raises the adjoint.
CirculantMatrix circulant_power(const CirculantMatrix &c, int64_t n);

/// Diagonal of F^* C F; entry l is sum_k c_k omega^{-lk}.
std::vector<Complex> diagonalize_circulant(const CirculantMatrix &c);

struct CheckResult {
    bool pass;
    double max_deviation;
};

/// Worst |(M^* M - 1)[j, k]| against tol.
CheckResult is_unitary(const DenseMatrix &m, double tol);
/// Unitarity plus every entry modulus within tol of d^{-1/2}.
CheckResult is_unitary_hadamard(const DenseMatrix &m, double tol);
/// Worst |M[j, k] - M[j+1, k+1]| over the cyclic diagonals.
CheckResult is_circulant(const DenseMatrix &m, double tol);
/// Worst | |M[j, k]| - d^{-1/2} |; the modulus half of is_unitary_hadamard.
double hadamard_modulus_deviation(const DenseMatrix &m);

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b);

}  // namespace mubcirc

#endif
