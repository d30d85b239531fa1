// Copyright 2026 The QET Simulator Authors
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

#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qet {

using Complex = std::complex<double>;

/// Tolerance for exact algebraic identities (norms, traces, Hermiticity, unitarity).
inline constexpr double kAlgebraicTol = 1e-12;
/// Tolerance for results that pass through an eigendecomposition.
inline constexpr double kDecompositionTol = 1e-10;

/// Amplitudes of a two-qubit state, basis index = 2*b0 + b1.
using Amplitudes = std::array<Complex, 4>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<Complex, 4> e{};

    Complex &operator()(std::size_t r, std::size_t c) {
        return e[2 * r + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return e[2 * r + c];
    }

    static Mat2 identity();
    static Mat2 from_rows(Complex a, Complex b, Complex c, Complex d);
};

/// Dense 4x4 complex matrix, row-major. Products go through the dispatched kernels.
struct Mat4 {
    std::array<Complex, 16> e{};

    Complex &operator()(std::size_t r, std::size_t c) {
        return e[4 * r + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return e[4 * r + c];
    }

    static Mat4 identity();
    static Mat4 zero();
};

Mat2 operator*(const Mat2 &a, const Mat2 &b);
Mat2 adjoint(const Mat2 &m);
double max_abs_diff(const Mat2 &a, const Mat2 &b);
bool is_unitary(const Mat2 &m, double tol = kAlgebraicTol);

Mat4 operator*(const Mat4 &a, const Mat4 &b);
Amplitudes operator*(const Mat4 &m, const Amplitudes &v);
Mat4 operator+(const Mat4 &a, const Mat4 &b);
Mat4 operator-(const Mat4 &a, const Mat4 &b);
Mat4 operator*(Complex s, const Mat4 &m);
Mat4 adjoint(const Mat4 &m);
Complex trace(const Mat4 &m);
double max_abs_diff(const Mat4 &a, const Mat4 &b);
bool is_hermitian(const Mat4 &m, double tol = kAlgebraicTol);
bool is_unitary(const Mat4 &m, double tol = kAlgebraicTol);

/// a (x) b with qubit 0 as the left (most significant) factor.
Mat4 kron(const Mat2 &a, const Mat2 &b);
/// Lifts a single-qubit operator onto `qubit` of the pair.
Mat4 on_qubit(const Mat2 &m, unsigned qubit);
/// |v><v|
Mat4 outer(const Amplitudes &v);
Complex inner(const Amplitudes &a, const Amplitudes &b);
double norm(const Amplitudes &v);

namespace pauli {
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

Mat2 hadamard();
/// R_Y(angle) = exp(-i angle Y / 2).
Mat2 ry(double angle);

/// Eigen-decomposition of a Hermitian 4x4 matrix, eigenvalues ascending.
struct HermitianEigen {
    std::array<double, 4> values;
    /// Column j of `vectors` is the eigenvector for values[j].
    Mat4 vectors;
};
HermitianEigen eigh(const Mat4 &m);

}  // namespace qet
