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

#include "qet/model.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qet/kernels.h"
#include "qet/simulator.h"

namespace qet {

ModelParams::ModelParams(double h, double k) : h_(h), k_(k) {
    if (!(h > 0) || !(k > 0) || !std::isfinite(h) || !std::isfinite(k)) {
        throw std::invalid_argument("model couplings must be positive and finite (h=" + std::to_string(h) +
                                    ", k=" + std::to_string(k) + ")");
    }
}

double ModelParams::scale() const {
    return std::hypot(h_, k_);
}

HamiltonianSet build_hamiltonians(const ModelParams &params) {
    const double h = params.h();
    const double k = params.k();
    const double s = params.scale();
    const Mat4 id = Mat4::identity();
    Mat4 h0 = Complex(h) * on_qubit(pauli::z(), 0) + Complex(h * h / s) * id;
    Mat4 h1 = Complex(h) * on_qubit(pauli::z(), 1) + Complex(h * h / s) * id;
    Mat4 v = Complex(2 * k) * kron(pauli::x(), pauli::x()) + Complex(2 * k * k / s) * id;
    return {
        Observable::from_matrix(h0),
        Observable::from_matrix(h1),
        Observable::from_matrix(v),
        Observable::from_matrix(h0 + h1 + v),
    };
}

Observable z1_observable() {
    return Observable::from_matrix(on_qubit(pauli::z(), 1));
}

Observable x0x1_observable() {
    return Observable::from_matrix(kron(pauli::x(), pauli::x()));
}

PureState ground_state(const ModelParams &params) {
    const double c = params.h() / params.scale();
    const double a = std::sqrt((1 - c) / 2);
    const double b = std::sqrt((1 + c) / 2);
    return PureState::normalized({a, 0, 0, -b});
}

ProtocolAngles angles(const ModelParams &params) {
    const double h = params.h();
    const double k = params.k();
    const double c = h / params.scale();
    return {
        -std::acos(std::sqrt((1 - c) / 2)),
        0.5 * std::atan2(h * k, h * h + 2 * k * k),
    };
}

Mat4 bob_rotation(int mu, double phi) {
    if (mu != 1 && mu != -1) {
        throw std::invalid_argument("mu must be +1 or -1");
    }
    return on_qubit(ry(2 * mu * phi), 1);
}

Mat4 alice_projector(int mu) {
    if (mu != 1 && mu != -1) {
        throw std::invalid_argument("mu must be +1 or -1");
    }
    return Complex(0.5) * (Mat4::identity() + Complex(mu) * on_qubit(pauli::x(), 0));
}

double analytic_e0(const ModelParams &params) {
    return params.h() * params.h() / params.scale();
}

double analytic_e1(const ModelParams &params, double phi) {
    const double h = params.h();
    const double k = params.k();
    return -(h * k * std::sin(2 * phi) - (h * h + 2 * k * k) * (1 - std::cos(2 * phi))) / params.scale();
}

double analytic_e1(const ModelParams &params) {
    return analytic_e1(params, angles(params).phi);
}

double analytic_h1(const ModelParams &params) {
    double h = params.h(), k = params.k(), out;
    kernels::active().model_energies(&h, &k, 1, nullptr, &out, nullptr);
    return out;
}

double analytic_v(const ModelParams &params) {
    double h = params.h(), k = params.k(), out;
    kernels::active().model_energies(&h, &k, 1, nullptr, nullptr, &out);
    return out;
}

DensityMatrix rho_qet(const ModelParams &params, double phi) {
    const Amplitudes g = ground_state(params).amplitudes();
    Mat4 rho = Mat4::zero();
    for (int mu : {1, -1}) {
        Amplitudes branch = bob_rotation(mu, phi) * (alice_projector(mu) * g);
        rho = rho + outer(branch);
    }
    return DensityMatrix::from_matrix(rho);
}

DensityMatrix rho_qet(const ModelParams &params) {
    return rho_qet(params, angles(params).phi);
}

DensityMatrix rho_measured(const ModelParams &params) {
    return rho_qet(params, 0.0);
}

double local_ground_energy_v(const ModelParams &params) {
    const double k = params.k();
    return -2 * k + 2 * k * k / params.scale();
}

double local_ground_energy_h(const ModelParams &params) {
    const double h = params.h();
    return -h + h * h / params.scale();
}

double nogo_gap(const ModelParams &params, const Mat2 &w1) {
    if (!is_unitary(w1, kDecompositionTol)) {
        throw std::invalid_argument("W1 is not unitary");
    }
    const Mat4 w = on_qubit(w1, 1);
    const Mat4 rho_w = adjoint(w) * rho_measured(params).matrix() * w;
    const Observable total = build_hamiltonians(params).total;
    return expectation(DensityMatrix::from_matrix(rho_w), total) - analytic_e0(params);
}

EntropyReport entropy_report(const ModelParams &params) {
    EntropyReport r{};
    const PureState g = ground_state(params);
    r.s_ab = entanglement_entropy(g);

    for (int mu : {1, -1}) {
        Amplitudes branch = alice_projector(mu) * g.amplitudes();
        double p = norm(branch) * norm(branch);
        double s = entanglement_entropy(PureState::normalized(branch));
        if (mu == 1) {
            r.p_plus = p;
            r.s_ab_plus = s;
        } else {
            r.p_minus = p;
            r.s_ab_minus = s;
        }
    }
    r.delta_s = r.s_ab - (r.p_plus * r.s_ab_plus + r.p_minus * r.s_ab_minus);

    const double scale = params.scale();
    r.xi = std::atan2(params.k(), params.h());
    r.e_b = -analytic_e1(params);

    const double c = std::cos(r.xi);
    const double sn = std::sin(r.xi);
    r.delta_s_lower_bound = (1 + sn * sn) / (2 * c * c * c) * std::log((1 + c) / (1 - c)) * r.e_b / scale;

    const double numerator = 2 * scale * (std::sqrt(4 - 3 * c * c) - 2 + c * c) * r.delta_s;
    const double denominator = (1 + c) * std::log(2 / (1 + c)) + (1 - c) * std::log(2 / (1 - c));
    r.max_eb_lower_bound = numerator / denominator;
    return r;
}

double free_evolution_h1(const ModelParams &params, double t) {
    const double h = params.h();
    return h * h * (1 - std::cos(4 * params.k() * t)) / (2 * params.scale());
}

double free_evolution_v(const ModelParams &, double) {
    return 0.0;
}

}  // namespace qet
