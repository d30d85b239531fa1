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
#include <span>
#include <vector>

#include "qet/model.h"
#include "qet/noise.h"
#include "qet/protocol.h"

namespace qet {

/// Rectangular (h, k) grid; cell index = i_h * k.size() + i_k.
struct SweepGrid {
    std::vector<double> h;
    std::vector<double> k;

    /// Throws std::invalid_argument on empty axes or non-positive entries.
    void validate() const;
    std::size_t size() const {
        return h.size() * k.size();
    }

    /// n evenly spaced values from lo to hi inclusive on both axes.
    static SweepGrid uniform(double lo, double hi, std::size_t n);
};

/// n evenly spaced points from lo to hi inclusive (n == 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct HeatmapCell {
    double h;
    double k;
    double v;
    double h1;
};

/// Tr[rho_QET V] and Tr[rho_QET H1] for every cell, through the batched closed-form kernel.
std::vector<HeatmapCell> heatmap(const SweepGrid &grid);

struct PhiScanResult {
    double best_phi;
    double min_e1;
    /// phi from angles(params).
    double reference_phi;
    double distance;
    /// Grid spacing.
    double resolution;
};

/// Grid search of <E1(phi)> = Tr[rho_QET(phi) (H1 + V)] over [phi_lo, phi_hi).
PhiScanResult phi_scan(const ModelParams &params, double phi_lo = 0.0, double phi_hi = 1.5707963267948966,
                       std::size_t points = 10000);

struct EvolutionRow {
    double t;
    double h1_numeric;
    double h1_closed_form;
    double v_numeric;
};

/// Free evolution of the post-measurement ensemble under H_tot, numeric against closed form.
std::vector<EvolutionRow> evolution_scan(const ModelParams &params, std::span<const double> times);

/// Estimate plus its standard error.
struct Estimate {
    double mean = 0;
    double std_error = 0;
};

struct MitigatedRun {
    EstimationResult unmitigated;
    /// Equal to `unmitigated` when no mitigation method is given.
    EstimationResult mitigated;
    CalibrationMatrix calibration;
};

/// Noisy run of a single-circuit target (E0, H1, V) followed by calibration-matrix mitigation.
/// The calibration circuits run under the same noise with `calibration_shots` shots each.
MitigatedRun run_with_mitigation(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                                 std::uint64_t n_shots, std::uint64_t seed, const ReadoutNoise &noise,
                                 std::optional<MitigationMethod> method, std::uint64_t calibration_shots);

/// Same as run_with_mitigation but with an already estimated calibration matrix.
MitigatedRun run_with_mitigation(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                                 std::uint64_t n_shots, std::uint64_t seed, const ReadoutNoise &noise,
                                 std::optional<MitigationMethod> method, const CalibrationMatrix &calibration);

struct ComparisonRow {
    ModelParams params;
    MeasurementTarget quantity;
    double analytic;
    Estimate noiseless;
    Estimate unmitigated;
    Estimate mitigated;
};

struct ReportConfig {
    std::vector<ModelParams> pairs;
    std::uint64_t shots = 100000;
    /// 0 means "same as shots".
    std::uint64_t calibration_shots = 0;
    std::uint64_t seed = 1;
    ProtocolMode mode = ProtocolMode::deferred;
    ReadoutNoise noise;
    std::optional<MitigationMethod> mitigation = MitigationMethod::least_squares;
};

/// The four (h, k) pairs of the reference comparison table.
std::vector<ModelParams> reference_pairs();

/// Rows E0, H1, V, E1 per pair. E1 = H1 + V with errors in quadrature.
std::vector<ComparisonRow> comparison_report(const ReportConfig &config);

}  // namespace qet
