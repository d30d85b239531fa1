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

#include "qet/protocol.h"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qet/simulator.h"

namespace qet {
namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    for (char &c : out) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

// Eigenvalue-mapped per-shot reading of the measured operator, +1 or -1.
int reading(MeasurementTarget target, unsigned index) {
    int s0 = 1 - 2 * static_cast<int>(index >> 1);
    int s1 = 1 - 2 * static_cast<int>(index & 1);
    switch (target) {
        case MeasurementTarget::E0:
            return s0;
        case MeasurementTarget::H1:
            return s1;
        case MeasurementTarget::V:
            return s0 * s1;
        case MeasurementTarget::E1:
            break;
    }
    throw std::invalid_argument("E1 is the sum of separate H1 and V runs, not a single-circuit reading");
}

// Observable = coefficient * reading + offset.
std::pair<double, double> affine_map(const ModelParams &params, MeasurementTarget target) {
    const double h = params.h();
    const double k = params.k();
    const double s = params.scale();
    switch (target) {
        case MeasurementTarget::E0:
        case MeasurementTarget::H1:
            return {h, h * h / s};
        case MeasurementTarget::V:
            return {2 * k, 2 * k * k / s};
        case MeasurementTarget::E1:
            break;
    }
    throw std::invalid_argument("E1 has no single-circuit estimator; combine H1 and V");
}

EstimationResult estimate_from_weights(const ModelParams &params, MeasurementTarget target, const Distribution &w,
                                       std::uint64_t n_shots) {
    auto [coefficient, offset] = affine_map(params, target);
    double mean_reading = 0;
    for (unsigned i = 0; i < 4; ++i) {
        mean_reading += w[i] * reading(target, i);
    }
    EstimationResult r;
    r.mean = coefficient * mean_reading + offset;
    r.n_shots = n_shots;
    if (n_shots > 1) {
        // Readings are +-1, so the sample variance is n/(n-1) * (1 - mean^2).
        double n = static_cast<double>(n_shots);
        double var = std::max(0.0, n / (n - 1) * (1 - mean_reading * mean_reading));
        r.std_error = std::abs(coefficient) * std::sqrt(var / n);
    }
    return r;
}

unsigned stream_base(MeasurementTarget target) {
    return 2 * static_cast<unsigned>(target);
}

}  // namespace

std::string_view target_name(MeasurementTarget t) {
    switch (t) {
        case MeasurementTarget::E0:
            return "E0";
        case MeasurementTarget::H1:
            return "H1";
        case MeasurementTarget::V:
            return "V";
        case MeasurementTarget::E1:
            return "E1";
    }
    return "?";
}

MeasurementTarget parse_target(std::string_view name) {
    std::string u = upper(name);
    if (u == "E0") {
        return MeasurementTarget::E0;
    }
    if (u == "H1") {
        return MeasurementTarget::H1;
    }
    if (u == "V") {
        return MeasurementTarget::V;
    }
    if (u == "E1") {
        return MeasurementTarget::E1;
    }
    throw std::invalid_argument("unknown target '" + std::string(name) + "' (expected E0, H1, V or E1)");
}

std::string_view mode_name(ProtocolMode m) {
    return m == ProtocolMode::conditional ? "conditional" : "deferred";
}

ProtocolMode parse_mode(std::string_view name) {
    if (name == "conditional") {
        return ProtocolMode::conditional;
    }
    if (name == "deferred") {
        return ProtocolMode::deferred;
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected conditional or deferred)");
}

Circuit build_circuit(const ModelParams &params, MeasurementTarget target, ProtocolMode mode) {
    if (target == MeasurementTarget::E1) {
        throw std::invalid_argument("E1 is not measured by a single circuit; run H1 and V separately");
    }
    const ProtocolAngles a = angles(params);
    Circuit c{RY{2 * a.theta, 0}, CNOT{0, 1}, Hadamard{0}};

    if (target == MeasurementTarget::E0) {
        // Alice's X measurement, then read Z_0 of the post-measurement state. Nothing is conditioned on
        // the outcome, so both modes share this circuit.
        c.add(MeasureZ{0, 0}).add(Hadamard{0}).add(MeasureZ{0, 0}).add(MeasureZ{1, 1});
        return c;
    }

    if (mode == ProtocolMode::conditional) {
        c.add(MeasureZ{0, 0});
        c.add(ClassicallyControlledRY{0, 1, -2 * a.phi, 1});
        c.add(ClassicallyControlledRY{0, 0, 2 * a.phi, 1});
    } else {
        c.add(ControlledRY{0, 1, -2 * a.phi, 1});
        c.add(ControlledRY{0, 0, 2 * a.phi, 1});
    }
    // Qubit 0 already sits in Alice's X frame; only Bob's qubit needs a basis change for X_0 X_1.
    if (target == MeasurementTarget::V) {
        c.add(Hadamard{1});
    }
    if (mode == ProtocolMode::deferred) {
        c.add(MeasureZ{0, 0});
    }
    c.add(MeasureZ{1, 1});
    return c;
}

double estimate_z1(const Counts &counts) {
    Distribution f = frequencies(counts);
    return f[0] - f[1] + f[2] - f[3];
}

double estimate_x0x1(const Counts &counts) {
    Distribution f = frequencies(counts);
    return f[0] - f[1] - f[2] + f[3];
}

double estimate_z0(const Counts &counts) {
    Distribution f = frequencies(counts);
    return f[0] + f[1] - f[2] - f[3];
}

EstimationResult estimate_energy(const ModelParams &params, MeasurementTarget target, const Counts &counts) {
    if (target == MeasurementTarget::E1) {
        throw std::invalid_argument("E1 needs separate H1 and V counts; use combine_e1");
    }
    EstimationResult r = estimate_from_weights(params, target, frequencies(counts), counts.total());
    r.raw_counts = {counts};
    return r;
}

EstimationResult estimate_energy(const ModelParams &params, MeasurementTarget target, const Distribution &dist,
                                 std::uint64_t n_shots) {
    if (n_shots == 0) {
        throw std::invalid_argument("n_shots must be positive");
    }
    return estimate_from_weights(params, target, dist, n_shots);
}

EstimationResult combine_e1(const EstimationResult &h1, const EstimationResult &v) {
    EstimationResult r;
    r.mean = h1.mean + v.mean;
    r.std_error = std::hypot(h1.std_error, v.std_error);
    r.n_shots = h1.n_shots;
    r.raw_counts = h1.raw_counts;
    r.raw_counts.insert(r.raw_counts.end(), v.raw_counts.begin(), v.raw_counts.end());
    return r;
}

Counts sample_target(const ModelParams &params, MeasurementTarget target, ProtocolMode mode, std::uint64_t n_shots,
                     std::uint64_t seed, const std::optional<ReadoutNoise> &noise) {
    Circuit circuit = build_circuit(params, target, mode);
    Rng circuit_rng(seed, stream_base(target));
    Counts counts = run_shots(circuit, n_shots, circuit_rng);
    if (noise) {
        Rng noise_rng(seed, stream_base(target) + 1);
        counts = apply_noise(counts, *noise, noise_rng);
    }
    return counts;
}

EstimationResult run_protocol(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                              std::uint64_t n_shots, std::uint64_t seed, const std::optional<ReadoutNoise> &noise) {
    if (n_shots == 0) {
        throw std::invalid_argument("n_shots must be positive");
    }
    if (target == MeasurementTarget::E1) {
        return combine_e1(run_protocol(params, MeasurementTarget::H1, mode, n_shots, seed, noise),
                          run_protocol(params, MeasurementTarget::V, mode, n_shots, seed, noise));
    }
    return estimate_energy(params, target, sample_target(params, target, mode, n_shots, seed, noise));
}

double analytic_value(const ModelParams &params, MeasurementTarget target) {
    switch (target) {
        case MeasurementTarget::E0:
            return analytic_e0(params);
        case MeasurementTarget::H1:
            return analytic_h1(params);
        case MeasurementTarget::V:
            return analytic_v(params);
        case MeasurementTarget::E1:
            return analytic_e1(params);
    }
    throw std::invalid_argument("unknown target");
}

}  // namespace qet
