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

#include "qet/linalg.h"

namespace qet {

/// Normalized two-qubit pure state, basis |q0 q1> in order 00, 01, 10, 11.
class PureState {
   public:
    /// |00>
    PureState();

    /// Computational basis state with index 2*b0 + b1.
    static PureState basis(unsigned index);

    /// Rejects vectors whose norm differs from 1 by more than 1e-12.
    static PureState from_amplitudes(const Amplitudes &amps);

    /// Rescales to unit norm. Rejects (near) zero vectors.
    static PureState normalized(const Amplitudes &amps);

    const Amplitudes &amplitudes() const {
        return amps_;
    }
    const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }

   private:
    explicit PureState(const Amplitudes &amps) : amps_(amps) {
    }
    Amplitudes amps_;
};

/// |<a|b>| == 1 within tol, i.e. equal up to a global phase.
bool equal_up_to_phase(const PureState &a, const PureState &b, double tol);

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix.
class DensityMatrix {
   public:
    /// Validates Hermiticity and trace within `tol`, eigenvalues >= -1e-10.
    static DensityMatrix from_matrix(const Mat4 &m, double tol = kAlgebraicTol);
    static DensityMatrix pure(const PureState &psi);

    const Mat4 &matrix() const {
        return m_;
    }

   private:
    explicit DensityMatrix(const Mat4 &m) : m_(m) {
    }
    Mat4 m_;
};

/// Hermitian 4x4 operator.
class Observable {
   public:
    static Observable from_matrix(const Mat4 &m);

    const Mat4 &matrix() const {
        return m_;
    }

    Observable operator+(const Observable &o) const;

   private:
    explicit Observable(const Mat4 &m) : m_(m) {
    }
    Mat4 m_;
};

/// Von Neumann entropy (nats) of qubit 0's reduced state.
double entanglement_entropy(const PureState &psi);

}  // namespace qet
