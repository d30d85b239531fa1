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

// Closed-form quantities of the minimal two-qubit energy-teleportation model:
//
//   H_tot = H_0 + H_1 + V
//   H_n   = h Z_n + h^2 / sqrt(h^2 + k^2)
//   V     = 2k X_0 X_1 + 2k^2 / sqrt(h^2 + k^2)
//
// The constants make every term vanish in the ground state. Alice measures X_0 with
// P_0(mu) = (1 + mu X_0) / 2 and Bob answers with U_1(mu) = RY(2 mu phi) on qubit 1.

#include "qet/linalg.h"
#include "qet/state.h"

namespace qet {

/// Couplings (h, k). Both must be positive and finite.
class ModelParams {
   public:
    ModelParams(double h, double k);

    double h() const {
        return h_;
    }
    double k() const {
        return k_;
    }
    /// sqrt(h^2 + k^2)
    double scale() const;

    bool operator==(const ModelParams &) const = default;

   private:
    double h_;
    double k_;
};

struct HamiltonianSet {
    Observable h0;
    Observable h1;
    Observable v;
    Observable total;
};

HamiltonianSet build_hamiltonians(const ModelParams &params);

/// Observables measured by the estimators.
Observable z1_observable();
Observable x0x1_observable();

/// Closed-form ground state a|00> - b|11>.
PureState ground_state(const ModelParams &params);

struct ProtocolAngles {
    /// Ground-state preparation: |g> = CNOT (RY(2 theta) (x) I) |00>.
    double theta;
    /// Bob's rotation half-angle; U_1(mu) = RY(2 mu phi).
    double phi;
};

ProtocolAngles angles(const ModelParams &params);

/// Bob's operation for Alice's outcome mu = +1 / -1, lifted to the two-qubit space.
Mat4 bob_rotation(int mu, double phi);
/// Alice's projector P_0(mu) onto X_0 = mu.
Mat4 alice_projector(int mu);

double analytic_e0(const ModelParams &params);
double analytic_e1(const ModelParams &params);
/// <E1> for an arbitrary rotation half-angle phi.
double analytic_e1(const ModelParams &params, double phi);
/// Tr[rho_QET H_1] and Tr[rho_QET V] in closed form.
double analytic_h1(const ModelParams &params);
double analytic_v(const ModelParams &params);

/// Ensemble after Bob's conditional rotation: sum_mu U_1(mu) P_0(mu)|g><g|P_0(mu) U_1(mu)^dagger.
DensityMatrix rho_qet(const ModelParams &params);
DensityMatrix rho_qet(const ModelParams &params, double phi);
/// Ensemble right after Alice's measurement: sum_mu P_0(mu)|g><g|P_0(mu).
DensityMatrix rho_measured(const ModelParams &params);

/// Minimum eigenvalues of V and of H_n in closed form.
double local_ground_energy_v(const ModelParams &params);
double local_ground_energy_h(const ModelParams &params);

/// Energy change Tr[rho_W H_tot] - <E0> when Bob applies an unconditioned unitary W1 after
/// Alice's measurement. Rejects W1 that is not unitary within 1e-10.
double nogo_gap(const ModelParams &params, const Mat2 &w1);

struct EntropyReport {
    /// Entanglement entropy of the ground state (nats).
    double s_ab;
    /// Branch probabilities p_+ and p_- of Alice's outcome.
    double p_plus;
    double p_minus;
    /// Entanglement entropy of each post-measurement branch.
    double s_ab_plus;
    double s_ab_minus;
    /// S_AB - sum_mu p_mu S_AB(mu)
    double delta_s;
    /// arctan(k / h)
    double xi;
    /// Energy Bob receives, -<E1>.
    double e_b;
    /// Right-hand side of the lower bound on delta_s.
    double delta_s_lower_bound;
    /// Lower bound on the maximal energy Bob can receive.
    double max_eb_lower_bound;
};

EntropyReport entropy_report(const ModelParams &params);

/// <H_1(t)> and <V(t)> for the post-measurement ensemble evolving freely under H_tot.
double free_evolution_h1(const ModelParams &params, double t);
double free_evolution_v(const ModelParams &params, double t);

}  // namespace qet
