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

#include <cstdint>

#include "qet/circuit.h"
#include "qet/rng.h"
#include "qet/state.h"

namespace qet {

/// 4x4 unitary of a gate step. Throws std::invalid_argument for MeasureZ and
/// ClassicallyControlledRY, which are not plain unitaries.
Mat4 gate_matrix(const GateStep &step);

/// U * state. Rejects measurement and classically controlled steps.
PureState apply_gate(const PureState &state, const GateStep &step);

struct MeasurementResult {
    unsigned outcome;
    PureState state;
};

/// Probability of reading 0 on `target`.
double probability_zero(const PureState &state, unsigned target);

/// Projective Z measurement. Throws NumericalError if both outcome probabilities are below
/// 1e-15 (the state is corrupted).
MeasurementResult measure_z(const PureState &state, unsigned target, Rng &rng);

/// Executes the circuit from |00> once per shot and tallies the final classical register.
Counts run_shots(const Circuit &circuit, std::uint64_t n_shots, Rng &rng);
Counts run_shots(const Circuit &circuit, std::uint64_t n_shots, std::uint64_t seed);

/// Exact distribution of the final classical register, by enumerating every measurement branch.
Distribution exact_distribution(const Circuit &circuit);

/// Final state of a circuit without measurements, starting from |00>.
PureState final_state(const Circuit &unitary_circuit);

/// Tr[rho * obs]. Throws std::invalid_argument if the imaginary part exceeds 1e-10.
double expectation(const DensityMatrix &rho, const Observable &obs);
double expectation(const PureState &psi, const Observable &obs);

/// exp(-iHt) rho exp(iHt), through the eigendecomposition of H.
DensityMatrix evolve(const DensityMatrix &rho, const Observable &hamiltonian, double t);

}  // namespace qet
