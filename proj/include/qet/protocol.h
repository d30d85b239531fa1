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
#include <optional>
#include <string_view>
#include <vector>

#include "qet/circuit.h"
#include "qet/model.h"
#include "qet/noise.h"

namespace qet {

enum class ProtocolMode {
    /// Mid-circuit measurement of Alice's qubit, Bob's rotation chosen by the classical bit.
    conditional,
    /// Controlled / anti-controlled rotations, all measurements terminal.
    deferred,
};

enum class MeasurementTarget {
    /// Alice's deposited energy.
    E0,
    /// Bob's local term, measured in the Z basis of qubit 1.
    H1,
    /// Interaction term, measured in the X (x) X basis.
    V,
    /// H1 + V. Never a single circuit: the sum of separate H1 and V runs.
    E1,
};

std::string_view target_name(MeasurementTarget t);
MeasurementTarget parse_target(std::string_view name);
std::string_view mode_name(ProtocolMode m);
ProtocolMode parse_mode(std::string_view name);

struct EstimationResult {
    double mean = 0;
    double std_error = 0;
    /// Shots per circuit run.
    std::uint64_t n_shots = 0;
    /// One entry per circuit run: a single run for E0/H1/V, the H1 then V runs for E1.
    std::vector<Counts> raw_counts;

    bool operator==(const EstimationResult &) const = default;
};

/// Ground-state preparation, Alice's X_0 measurement and Bob's response, followed by the basis
/// change for `target`. Bit b0 always reads qubit 0 and b1 reads qubit 1.
/// Throws std::invalid_argument for E1.
Circuit build_circuit(const ModelParams &params, MeasurementTarget target, ProtocolMode mode);

/// sum (1 - 2 b1) counts / n
double estimate_z1(const Counts &counts);
/// sum (1 - 2 b0)(1 - 2 b1) counts / n
double estimate_x0x1(const Counts &counts);
/// sum (1 - 2 b0) counts / n
double estimate_z0(const Counts &counts);

/// Energy estimate with per-shot standard error. Throws std::invalid_argument for E1
/// (it needs two runs; use combine_e1) and for empty counts.
EstimationResult estimate_energy(const ModelParams &params, MeasurementTarget target, const Counts &counts);

/// Same estimator applied to a (for example, mitigated) outcome distribution backed by n_shots shots.
EstimationResult estimate_energy(const ModelParams &params, MeasurementTarget target, const Distribution &dist,
                                 std::uint64_t n_shots);

/// <E1> = <H1> + <V>, errors combined in quadrature.
EstimationResult combine_e1(const EstimationResult &h1, const EstimationResult &v);

/// Builds, samples, optionally applies readout noise, and estimates. Deterministic in `seed`.
EstimationResult run_protocol(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                              std::uint64_t n_shots, std::uint64_t seed,
                              const std::optional<ReadoutNoise> &noise = std::nullopt);

/// Counts for the single circuit of `target` (E0, H1 or V). Each target draws from its own RNG
/// streams of `seed`, so the H1 and V halves of an E1 run match standalone H1 and V runs.
Counts sample_target(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                     std::uint64_t n_shots, std::uint64_t seed, const std::optional<ReadoutNoise> &noise);

/// Closed-form value of a target.
double analytic_value(const ModelParams &params, MeasurementTarget target);

}  // namespace qet
