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

#include "qet/analysis.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qet/kernels.h"
#include "qet/simulator.h"

namespace qet {

void SweepGrid::validate() const {
    if (h.empty() || k.empty()) {
        throw std::invalid_argument("sweep grid axes must be nonempty");
    }
    for (const auto *axis : {&h, &k}) {
        for (double v : *axis) {
            if (!(v > 0) || !std::isfinite(v)) {
                throw std::invalid_argument("sweep grid values must be positive and finite");
            }
        }
    }
}

SweepGrid SweepGrid::uniform(double lo, double hi, std::size_t n) {
    return {linspace(lo, hi, n), linspace(lo, hi, n)};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<HeatmapCell> heatmap(const SweepGrid &grid) {
    grid.validate();
    const std::size_t n = grid.size();
    std::vector<double> hs(n), ks(n), v(n), h1(n);
    for (std::size_t i = 0; i < grid.h.size(); ++i) {
        for (std::size_t j = 0; j < grid.k.size(); ++j) {
            hs[i * grid.k.size() + j] = grid.h[i];
            ks[i * grid.k.size() + j] = grid.k[j];
        }
    }
    kernels::active().model_energies(hs.data(), ks.data(), n, nullptr, h1.data(), v.data());
    std::vector<HeatmapCell> cells(n);
    for (std::size_t c = 0; c < n; ++c) {
        cells[c] = {hs[c], ks[c], v[c], h1[c]};
    }
    return cells;
}

PhiScanResult phi_scan(const ModelParams &params, double phi_lo, double phi_hi, std::size_t points) {
    if (points == 0 || !(phi_hi > phi_lo)) {
        throw std::invalid_argument("phi scan needs a nonempty range and at least one point");
    }
    const HamiltonianSet hs = build_hamiltonians(params);
    const Observable local = hs.h1 + hs.v;
    PhiScanResult r{};
    r.resolution = (phi_hi - phi_lo) / static_cast<double>(points);
    r.min_e1 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points; ++j) {
        double phi = phi_lo + r.resolution * static_cast<double>(j);
        double e1 = expectation(rho_qet(params, phi), local);
        if (e1 < r.min_e1) {
            r.min_e1 = e1;
            r.best_phi = phi;
        }
    }
    r.reference_phi = angles(params).phi;
    r.distance = std::abs(r.best_phi - r.reference_phi);
    return r;
}

std::vector<EvolutionRow> evolution_scan(const ModelParams &params, std::span<const double> times) {
    const HamiltonianSet hs = build_hamiltonians(params);
    const DensityMatrix rho_m = rho_measured(params);
    std::vector<EvolutionRow> rows;
    rows.reserve(times.size());
    for (double t : times) {
        DensityMatrix rho_t = evolve(rho_m, hs.total, t);
        rows.push_back({t, expectation(rho_t, hs.h1), free_evolution_h1(params, t), expectation(rho_t, hs.v)});
    }
    return rows;
}

MitigatedRun run_with_mitigation(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                                 std::uint64_t n_shots, std::uint64_t seed, const ReadoutNoise &noise,
                                 std::optional<MitigationMethod> method, const CalibrationMatrix &calibration) {
    MitigatedRun run{run_protocol(params, target, mode, n_shots, seed, noise), {}, calibration};
    if (!method) {
        run.mitigated = run.unmitigated;
        return run;
    }
    if (target == MeasurementTarget::E1) {
        auto h1 = run_with_mitigation(params, MeasurementTarget::H1, mode, n_shots, seed, noise, method, calibration);
        auto v = run_with_mitigation(params, MeasurementTarget::V, mode, n_shots, seed, noise, method, calibration);
        run.mitigated = combine_e1(h1.mitigated, v.mitigated);
        return run;
    }
    const Counts &counts = run.unmitigated.raw_counts.front();
    run.mitigated = estimate_energy(params, target, mitigate(counts, calibration, *method), counts.total());
    run.mitigated.raw_counts = run.unmitigated.raw_counts;
    return run;
}

MitigatedRun run_with_mitigation(const ModelParams &params, MeasurementTarget target, ProtocolMode mode,
                                 std::uint64_t n_shots, std::uint64_t seed, const ReadoutNoise &noise,
                                 std::optional<MitigationMethod> method, std::uint64_t calibration_shots) {
    CalibrationMatrix calibration;
    if (method) {
        calibration = run_calibration(noise, calibration_shots, derive_seed(seed, 1000));
    }
    return run_with_mitigation(params, target, mode, n_shots, seed, noise, method, calibration);
}

std::vector<ModelParams> reference_pairs() {
    return {{1.0, 0.2}, {1.0, 0.5}, {1.0, 1.0}, {1.5, 1.0}};
}

std::vector<ComparisonRow> comparison_report(const ReportConfig &config) {
    if (config.shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    const std::uint64_t cal_shots = config.calibration_shots != 0 ? config.calibration_shots : config.shots;
    std::vector<ComparisonRow> rows;
    for (std::size_t i = 0; i < config.pairs.size(); ++i) {
        const ModelParams &p = config.pairs[i];
        const std::uint64_t seed = derive_seed(config.seed, i);
        CalibrationMatrix calibration;
        if (config.mitigation) {
            calibration = run_calibration(config.noise, cal_shots, derive_seed(seed, 1000));
        }
        auto to_estimate = [](const EstimationResult &r) { return Estimate{r.mean, r.std_error}; };
        std::vector<EstimationResult> clean;
        std::vector<MitigatedRun> noisy;
        for (MeasurementTarget t : {MeasurementTarget::E0, MeasurementTarget::H1, MeasurementTarget::V}) {
            clean.push_back(run_protocol(p, t, config.mode, config.shots, seed));
            noisy.push_back(
                run_with_mitigation(p, t, config.mode, config.shots, seed, config.noise, config.mitigation, calibration));
            rows.push_back({p, t, analytic_value(p, t), to_estimate(clean.back()), to_estimate(noisy.back().unmitigated),
                            to_estimate(noisy.back().mitigated)});
        }
        rows.push_back({p, MeasurementTarget::E1, analytic_e1(p), to_estimate(combine_e1(clean[1], clean[2])),
                        to_estimate(combine_e1(noisy[1].unmitigated, noisy[2].unmitigated)),
                        to_estimate(combine_e1(noisy[1].mitigated, noisy[2].mitigated))});
    }
    return rows;
}

}  // namespace qet
