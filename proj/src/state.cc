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

#include "qet/state.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qet {

PureState::PureState() : amps_{1, 0, 0, 0} {
}

PureState PureState::basis(unsigned index) {
    if (index > 3) {
        throw std::invalid_argument("basis index must be in [0, 3]");
    }
    Amplitudes a{};
    a[index] = 1;
    return PureState(a);
}

PureState PureState::from_amplitudes(const Amplitudes &amps) {
    double n = norm(amps);
    if (!(std::abs(n - 1) <= kAlgebraicTol)) {
        throw std::invalid_argument("state is not normalized (norm " + std::to_string(n) + ")");
    }
    return PureState(amps);
}

PureState PureState::normalized(const Amplitudes &amps) {
    double n = norm(amps);
    if (!(n > 1e-300) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    Amplitudes out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = amps[i] / n;
    }
    return PureState(out);
}

bool equal_up_to_phase(const PureState &a, const PureState &b, double tol) {
    return std::abs(std::abs(inner(a.amplitudes(), b.amplitudes())) - 1) <= tol;
}

DensityMatrix DensityMatrix::from_matrix(const Mat4 &m, double tol) {
    if (!is_hermitian(m, tol)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    Complex tr = trace(m);
    if (std::abs(tr - 1.0) > tol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (eigh(m).values[0] < -kDecompositionTol) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(const PureState &psi) {
    return DensityMatrix(outer(psi.amplitudes()));
}

Observable Observable::from_matrix(const Mat4 &m) {
    if (!is_hermitian(m)) {
        throw std::invalid_argument("observable is not Hermitian");
    }
    return Observable(m);
}

Observable Observable::operator+(const Observable &o) const {
    return Observable(m_ + o.m_);
}

double entanglement_entropy(const PureState &psi) {
    // Reduced state of qubit 0: rho_A = M M^dagger with M(b0, b1) = amplitude.
    const auto &a = psi.amplitudes();
    Complex r00 = std::norm(a[0]) + std::norm(a[1]);
    Complex r11 = std::norm(a[2]) + std::norm(a[3]);
    Complex r01 = a[0] * std::conj(a[2]) + a[1] * std::conj(a[3]);
    double tr = (r00 + r11).real();
    double det = (r00 * r11).real() - std::norm(r01);
    double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
    double big = tr / 2 + disc;
    double s = 0;
    for (double lambda : {big, std::max(0.0, det) / big}) {
        if (lambda > 1e-300) {
            s -= lambda * std::log(lambda);
        }
    }
    return s;
}

}  // namespace qet
