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

#include "qet/linalg.h"

#include <algorithm>
#include <cmath>
#include <Eigen/Dense>
#include <stdexcept>

#include "qet/errors.h"
#include "qet/kernels.h"

namespace qet {

Mat2 Mat2::identity() {
    return from_rows(1, 0, 0, 1);
}

Mat2 Mat2::from_rows(Complex a, Complex b, Complex c, Complex d) {
    Mat2 m;
    m.e = {a, b, c, d};
    return m;
}

Mat4 Mat4::identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Mat4 Mat4::zero() {
    return Mat4{};
}

Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    Mat2 c;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t col = 0; col < 2; ++col) {
            c(r, col) = a(r, 0) * b(0, col) + a(r, 1) * b(1, col);
        }
    }
    return c;
}

Mat2 adjoint(const Mat2 &m) {
    return Mat2::from_rows(std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1)));
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double d = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(a.e[i] - b.e[i]));
    }
    return d;
}

bool is_unitary(const Mat2 &m, double tol) {
    return max_abs_diff(adjoint(m) * m, Mat2::identity()) <= tol;
}

Mat4 operator*(const Mat4 &a, const Mat4 &b) {
    Mat4 c;
    kernels::active().cmatmul4(a.e.data(), b.e.data(), c.e.data());
    return c;
}

Amplitudes operator*(const Mat4 &m, const Amplitudes &v) {
    Amplitudes out;
    kernels::active().cmatvec4(m.e.data(), v.data(), out.data());
    return out;
}

Mat4 operator+(const Mat4 &a, const Mat4 &b) {
    Mat4 c;
    for (std::size_t i = 0; i < 16; ++i) {
        c.e[i] = a.e[i] + b.e[i];
    }
    return c;
}

Mat4 operator-(const Mat4 &a, const Mat4 &b) {
    Mat4 c;
    for (std::size_t i = 0; i < 16; ++i) {
        c.e[i] = a.e[i] - b.e[i];
    }
    return c;
}

Mat4 operator*(Complex s, const Mat4 &m) {
    Mat4 c;
    for (std::size_t i = 0; i < 16; ++i) {
        c.e[i] = s * m.e[i];
    }
    return c;
}

Mat4 adjoint(const Mat4 &m) {
    Mat4 c;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t col = 0; col < 4; ++col) {
            c(r, col) = std::conj(m(col, r));
        }
    }
    return c;
}

Complex trace(const Mat4 &m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

double max_abs_diff(const Mat4 &a, const Mat4 &b) {
    double d = 0;
    for (std::size_t i = 0; i < 16; ++i) {
        d = std::max(d, std::abs(a.e[i] - b.e[i]));
    }
    return d;
}

bool is_hermitian(const Mat4 &m, double tol) {
    return max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_unitary(const Mat4 &m, double tol) {
    return max_abs_diff(adjoint(m) * m, Mat4::identity()) <= tol;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 m;
    for (std::size_t r0 = 0; r0 < 2; ++r0) {
        for (std::size_t c0 = 0; c0 < 2; ++c0) {
            for (std::size_t r1 = 0; r1 < 2; ++r1) {
                for (std::size_t c1 = 0; c1 < 2; ++c1) {
                    m(2 * r0 + r1, 2 * c0 + c1) = a(r0, c0) * b(r1, c1);
                }
            }
        }
    }
    return m;
}

Mat4 on_qubit(const Mat2 &m, unsigned qubit) {
    if (qubit > 1) {
        throw std::invalid_argument("qubit index must be 0 or 1");
    }
    return qubit == 0 ? kron(m, Mat2::identity()) : kron(Mat2::identity(), m);
}

Mat4 outer(const Amplitudes &v) {
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

Complex inner(const Amplitudes &a, const Amplitudes &b) {
    Complex s = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm(const Amplitudes &v) {
    double s = 0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

namespace pauli {
Mat2 x() {
    return Mat2::from_rows(0, 1, 1, 0);
}
Mat2 y() {
    return Mat2::from_rows(0, Complex(0, -1), Complex(0, 1), 0);
}
Mat2 z() {
    return Mat2::from_rows(1, 0, 0, -1);
}
}  // namespace pauli

Mat2 hadamard() {
    const double s = 1 / std::sqrt(2.0);
    return Mat2::from_rows(s, s, s, -s);
}

Mat2 ry(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return Mat2::from_rows(c, -s, s, c);
}

HermitianEigen eigh(const Mat4 &m) {
    Eigen::Matrix4cd em;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            em(r, c) = m(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(em);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigendecomposition failed");
    }
    HermitianEigen out;
    for (int i = 0; i < 4; ++i) {
        out.values[i] = solver.eigenvalues()(i);
        for (int r = 0; r < 4; ++r) {
            out.vectors(r, i) = solver.eigenvectors()(r, i);
        }
    }
    return out;
}

}  // namespace qet
