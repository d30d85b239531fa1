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

// Independent reference computations for the test suites. Everything here is built directly on
// Eigen from textbook definitions and shares no code with the library.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "qet/linalg.h"

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;
using V4 = Eigen::Vector4cd;

inline M2 I2() {
    return M2::Identity();
}
inline M2 X() {
    M2 m;
    m << 0, 1, 1, 0;
    return m;
}
inline M2 Y() {
    M2 m;
    m << 0, C(0, -1), C(0, 1), 0;
    return m;
}
inline M2 Z() {
    M2 m;
    m << 1, 0, 0, -1;
    return m;
}
inline M2 H() {
    M2 m;
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}
/// exp(-i a Y / 2)
inline M2 RY(double a) {
    M2 m;
    m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
    return m;
}
inline M2 P(unsigned value) {
    M2 m = M2::Zero();
    m(value, value) = 1;
    return m;
}

/// Qubit 0 is the left factor.
inline M4 kron(const M2 &a, const M2 &b) {
    M4 m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return m;
}

/// U applied to qubit 1 when qubit 0 reads `value`.
inline M4 controlled(unsigned value, const M2 &u) {
    return kron(P(value), u) + kron(P(1 - value), I2());
}

inline M4 CNOT01() {
    return controlled(1, X());
}

struct Hams {
    M4 h0, h1, v, total;
};

inline Hams hamiltonians(double h, double k) {
    const double s = std::sqrt(h * h + k * k);
    Hams r;
    r.h0 = h * kron(Z(), I2()) + (h * h / s) * M4::Identity();
    r.h1 = h * kron(I2(), Z()) + (h * h / s) * M4::Identity();
    r.v = 2 * k * kron(X(), X()) + (2 * k * k / s) * M4::Identity();
    r.total = r.h0 + r.h1 + r.v;
    return r;
}

/// Lowest eigenvector of H_tot from a dense eigensolver, phase fixed so the |00> amplitude is real
/// and nonnegative.
inline V4 ground(double h, double k) {
    Eigen::SelfAdjointEigenSolver<M4> es(hamiltonians(h, k).total);
    V4 g = es.eigenvectors().col(0);
    C p = g(0);
    if (std::abs(p) > 1e-14) {
        g *= std::conj(p) / std::abs(p);
    }
    return g;
}

inline double ground_energy(double h, double k) {
    Eigen::SelfAdjointEigenSolver<M4> es(hamiltonians(h, k).total);
    return es.eigenvalues()(0);
}

inline double expect(const M4 &rho, const M4 &o) {
    return (rho * o).trace().real();
}

inline M4 alice_projector(int mu) {
    return kron(0.5 * (I2() + double(mu) * X()), I2());
}

/// cos(phi) I - i mu sin(phi) Y on Bob's qubit.
inline M4 bob_u(int mu, double phi) {
    return kron(I2(), std::cos(phi) * I2() - C(0, 1) * double(mu) * std::sin(phi) * Y());
}

inline M4 rho_measured(double h, double k) {
    V4 g = ground(h, k);
    M4 rho = M4::Zero();
    for (int mu : {1, -1}) {
        V4 b = alice_projector(mu) * g;
        rho += b * b.adjoint();
    }
    return rho;
}

inline M4 rho_qet(double h, double k, double phi) {
    V4 g = ground(h, k);
    M4 rho = M4::Zero();
    for (int mu : {1, -1}) {
        V4 b = bob_u(mu, phi) * alice_projector(mu) * g;
        rho += b * b.adjoint();
    }
    return rho;
}

/// Rotation half-angle minimizing <E1>, by golden-section search on the numeric ensemble.
inline double optimal_phi(double h, double k) {
    const Hams hs = hamiltonians(h, k);
    const M4 local = hs.h1 + hs.v;
    auto f = [&](double phi) { return expect(rho_qet(h, k, phi), local); };
    double lo = 0, hi = M_PI / 2;
    const double g = (std::sqrt(5.0) - 1) / 2;
    double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    double fa = f(a), fb = f(b);
    for (int i = 0; i < 200; ++i) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = f(b);
        }
    }
    return (lo + hi) / 2;
}

/// e^{-iHt} rho e^{iHt} via the Pade matrix exponential.
inline M4 evolve(const M4 &rho, const M4 &hamiltonian, double t) {
    M4 u = (C(0, -t) * hamiltonian).exp();
    return u * rho * u.adjoint();
}

/// Von Neumann entropy (nats) of qubit 0 after tracing out qubit 1.
inline double entropy_q0(const V4 &psi) {
    M2 r = M2::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int j = 0; j < 2; ++j) {
                r(a, b) += psi(2 * a + j) * std::conj(psi(2 * b + j));
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<M2> es(r);
    double s = 0;
    for (int i = 0; i < 2; ++i) {
        double l = es.eigenvalues()(i);
        if (l > 1e-300) {
            s -= l * std::log(l);
        }
    }
    return s;
}

/// Haar-distributed 2x2 unitary from the QR decomposition of a complex Gaussian matrix.
inline M2 haar_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0, 1);
    M2 z;
    for (int i = 0; i < 4; ++i) {
        z(i / 2, i % 2) = C(n(rng), n(rng));
    }
    Eigen::HouseholderQR<M2> qr(z);
    M2 q = qr.householderQ();
    M2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) {
        q.col(i) *= r(i, i) / std::abs(r(i, i));
    }
    return q;
}

/// Euclidean projection onto the probability simplex.
inline Eigen::Vector4d project_simplex(const Eigen::Vector4d &v) {
    std::array<double, 4> u{v(0), v(1), v(2), v(3)};
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0, tau = 0;
    for (int i = 0; i < 4; ++i) {
        css += u[i];
        double t = (css - 1) / (i + 1);
        if (u[i] - t > 0) {
            tau = t;
        }
    }
    return (v.array() - tau).max(0.0).matrix();
}

/// argmin ||A x - y|| over the simplex by accelerated projected gradient descent.
inline Eigen::Vector4d simplex_least_squares(const Eigen::Matrix4d &a, const Eigen::Vector4d &y, int iters = 200000) {
    const Eigen::Matrix4d ata = a.transpose() * a;
    const Eigen::Vector4d aty = a.transpose() * y;
    const double lipschitz = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(ata).eigenvalues().maxCoeff();
    Eigen::Vector4d x = Eigen::Vector4d::Constant(0.25), z = x;
    double t = 1;
    for (int i = 0; i < iters; ++i) {
        Eigen::Vector4d next = project_simplex(z - (ata * z - aty) / lipschitz);
        double tn = (1 + std::sqrt(1 + 4 * t * t)) / 2;
        z = next + ((t - 1) / tn) * (next - x);
        x = next;
        t = tn;
    }
    return x;
}

inline M4 to_eigen(const qet::Mat4 &m) {
    M4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = m(i, j);
        }
    }
    return r;
}

inline qet::Mat4 from_eigen(const M4 &m) {
    qet::Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = m(i, j);
        }
    }
    return r;
}

inline qet::Mat2 from_eigen(const M2 &m) {
    return qet::Mat2::from_rows(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

inline V4 to_eigen(const qet::Amplitudes &a) {
    return V4(a[0], a[1], a[2], a[3]);
}

inline double max_abs(const M4 &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace oracle
