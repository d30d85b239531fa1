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

#include "qet/simulator.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qet/errors.h"

namespace qet {
namespace {

constexpr double kUnderflow = 1e-15;

Mat2 projector(unsigned value) {
    return value == 0 ? Mat2::from_rows(1, 0, 0, 0) : Mat2::from_rows(0, 0, 0, 1);
}

Mat4 controlled(unsigned control, unsigned control_value, const Mat2 &u, unsigned target) {
    if (control > 1 || target > 1 || control == target || control_value > 1) {
        throw std::invalid_argument("invalid controlled gate indices");
    }
    Mat2 on = projector(control_value);
    Mat2 off = projector(1 - control_value);
    if (control == 0) {
        return kron(on, u) + kron(off, Mat2::identity());
    }
    return kron(u, on) + kron(Mat2::identity(), off);
}

// Compiled circuit step: a unitary, a measurement, or a classically gated unitary.
struct Op {
    enum class Kind { unitary, measure, gated } kind;
    Mat4 m;
    unsigned target = 0;
    unsigned bit = 0;
    unsigned required = 0;
};

struct Program {
    Amplitudes initial;
    std::vector<Op> ops;
};

Program compile(const Circuit &circuit) {
    circuit.validate();
    Program p;
    p.initial = PureState().amplitudes();
    bool folding = true;
    for (const auto &step : circuit.steps()) {
        if (const auto *m = std::get_if<MeasureZ>(&step)) {
            folding = false;
            p.ops.push_back({Op::Kind::measure, Mat4{}, m->target, m->bit, 0});
        } else if (const auto *g = std::get_if<ClassicallyControlledRY>(&step)) {
            folding = false;
            p.ops.push_back({Op::Kind::gated, on_qubit(ry(g->angle), g->target), g->target, g->bit, g->required_value});
        } else if (folding) {
            // Gates before the first measurement act identically on every shot.
            p.initial = gate_matrix(step) * p.initial;
        } else {
            p.ops.push_back({Op::Kind::unitary, gate_matrix(step), 0, 0, 0});
        }
    }
    return p;
}

inline unsigned qubit_bit(unsigned basis_index, unsigned qubit) {
    return qubit == 0 ? (basis_index >> 1) & 1 : basis_index & 1;
}

double prob_zero(const Amplitudes &a, unsigned target) {
    double p = 0;
    for (unsigned i = 0; i < 4; ++i) {
        if (qubit_bit(i, target) == 0) {
            p += std::norm(a[i]);
        }
    }
    return p;
}

// Projects onto `outcome` of `target` and rescales by 1/sqrt(prob).
void collapse(Amplitudes &a, unsigned target, unsigned outcome, double prob) {
    double scale = 1 / std::sqrt(prob);
    for (unsigned i = 0; i < 4; ++i) {
        a[i] = qubit_bit(i, target) == outcome ? a[i] * scale : Complex(0);
    }
}

// Returns (p0, p1); throws on underflow.
std::pair<double, double> outcome_probabilities(const Amplitudes &a, unsigned target) {
    double p0 = prob_zero(a, target);
    double p1 = 0;
    for (unsigned i = 0; i < 4; ++i) {
        if (qubit_bit(i, target) == 1) {
            p1 += std::norm(a[i]);
        }
    }
    if (p0 < kUnderflow && p1 < kUnderflow) {
        throw NumericalError("measurement probabilities underflow; state is corrupted");
    }
    return {p0, p1};
}

void enumerate(const Program &p, std::size_t pc, Amplitudes amps, unsigned creg, double weight, Distribution &out) {
    for (; pc < p.ops.size(); ++pc) {
        const Op &op = p.ops[pc];
        switch (op.kind) {
            case Op::Kind::unitary:
                amps = op.m * amps;
                break;
            case Op::Kind::gated:
                if (((creg >> (1 - op.bit)) & 1) == op.required) {
                    amps = op.m * amps;
                }
                break;
            case Op::Kind::measure: {
                auto [p0, p1] = outcome_probabilities(amps, op.target);
                double total = p0 + p1;
                for (unsigned outcome = 0; outcome < 2; ++outcome) {
                    double q = (outcome == 0 ? p0 : p1) / total;
                    if (q <= 0) {
                        continue;
                    }
                    Amplitudes branch = amps;
                    collapse(branch, op.target, outcome, outcome == 0 ? p0 : p1);
                    unsigned mask = 1u << (1 - op.bit);
                    unsigned next = outcome ? (creg | mask) : (creg & ~mask);
                    enumerate(p, pc + 1, branch, next, weight * q, out);
                }
                return;
            }
        }
    }
    out[creg] += weight;
}

}  // namespace

Mat4 gate_matrix(const GateStep &step) {
    if (const auto *g = std::get_if<RY>(&step)) {
        return on_qubit(ry(g->angle), g->target);
    }
    if (const auto *g = std::get_if<Hadamard>(&step)) {
        return on_qubit(hadamard(), g->target);
    }
    if (const auto *g = std::get_if<PauliX>(&step)) {
        return on_qubit(pauli::x(), g->target);
    }
    if (const auto *g = std::get_if<CNOT>(&step)) {
        return controlled(g->control, 1, pauli::x(), g->target);
    }
    if (const auto *g = std::get_if<ControlledRY>(&step)) {
        return controlled(g->control, g->control_value, ry(g->angle), g->target);
    }
    throw std::invalid_argument("step '" + describe(step) + "' is not a unitary gate; use measure_z or run_shots");
}

PureState apply_gate(const PureState &state, const GateStep &step) {
    return PureState::normalized(gate_matrix(step) * state.amplitudes());
}

double probability_zero(const PureState &state, unsigned target) {
    if (target > 1) {
        throw std::invalid_argument("qubit index must be 0 or 1");
    }
    return prob_zero(state.amplitudes(), target);
}

MeasurementResult measure_z(const PureState &state, unsigned target, Rng &rng) {
    if (target > 1) {
        throw std::invalid_argument("qubit index must be 0 or 1");
    }
    Amplitudes a = state.amplitudes();
    auto [p0, p1] = outcome_probabilities(a, target);
    unsigned outcome = rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
    collapse(a, target, outcome, outcome == 0 ? p0 : p1);
    return {outcome, PureState::normalized(a)};
}

Counts run_shots(const Circuit &circuit, std::uint64_t n_shots, Rng &rng) {
    Program p = compile(circuit);
    Counts counts;
    for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
        Amplitudes amps = p.initial;
        unsigned creg = 0;
        for (const Op &op : p.ops) {
            switch (op.kind) {
                case Op::Kind::unitary:
                    amps = op.m * amps;
                    break;
                case Op::Kind::gated:
                    if (((creg >> (1 - op.bit)) & 1) == op.required) {
                        amps = op.m * amps;
                    }
                    break;
                case Op::Kind::measure: {
                    auto [p0, p1] = outcome_probabilities(amps, op.target);
                    unsigned outcome = rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
                    collapse(amps, op.target, outcome, outcome == 0 ? p0 : p1);
                    unsigned mask = 1u << (1 - op.bit);
                    creg = outcome ? (creg | mask) : (creg & ~mask);
                    break;
                }
            }
        }
        counts.add(creg);
    }
    return counts;
}

Counts run_shots(const Circuit &circuit, std::uint64_t n_shots, std::uint64_t seed) {
    Rng rng(seed);
    return run_shots(circuit, n_shots, rng);
}

Distribution exact_distribution(const Circuit &circuit) {
    Program p = compile(circuit);
    Distribution out{};
    enumerate(p, 0, p.initial, 0, 1.0, out);
    return out;
}

PureState final_state(const Circuit &unitary_circuit) {
    Amplitudes a = PureState().amplitudes();
    for (const auto &step : unitary_circuit.steps()) {
        a = gate_matrix(step) * a;
    }
    return PureState::normalized(a);
}

double expectation(const DensityMatrix &rho, const Observable &obs) {
    Complex t = trace(rho.matrix() * obs.matrix());
    if (std::abs(t.imag()) > kDecompositionTol) {
        throw std::invalid_argument("expectation has imaginary residue " + std::to_string(t.imag()) +
                                    "; input is not Hermitian");
    }
    return t.real();
}

double expectation(const PureState &psi, const Observable &obs) {
    return expectation(DensityMatrix::pure(psi), obs);
}

DensityMatrix evolve(const DensityMatrix &rho, const Observable &hamiltonian, double t) {
    HermitianEigen eig = eigh(hamiltonian.matrix());
    Mat4 phases;
    for (std::size_t i = 0; i < 4; ++i) {
        phases(i, i) = std::exp(Complex(0, -eig.values[i] * t));
    }
    Mat4 u = eig.vectors * phases * adjoint(eig.vectors);
    return DensityMatrix::from_matrix(u * rho.matrix() * adjoint(u), kDecompositionTol);
}

}  // namespace qet
