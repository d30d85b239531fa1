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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "qet/analysis.h"
#include "qet/model.h"
#include "qet/noise.h"
#include "qet/protocol.h"
#include "qet/simulator.h"
#include "reference_values.h"

using namespace qet;

namespace {

constexpr double kAnalyticTol = 1e-4;
constexpr double kAnalyticBudgetSeconds = 1;
constexpr std::uint64_t kSampleShots = 100000;
constexpr int kSampleSeeds = 20;
constexpr int kSampleMinPass = 19;
constexpr double kSampleSigmas = 4;
constexpr double kSampleBudgetSeconds = 30;
constexpr double kModeTol = 1e-12;
constexpr int kNoGoUnitaries = 1000;
constexpr double kNoGoTol = -1e-10;
constexpr double kEvolutionTol = 1e-9;
constexpr std::size_t kEvolutionPoints = 101;
constexpr double kEntropySlack = -1e-10;
constexpr std::uint64_t kMitigationShots = 100000;
constexpr int kMitigationSeeds = 100;
constexpr int kCloserMin = 95;
constexpr int kNegativeMin = 99;
constexpr double kMitigationBudgetSeconds = 300;
constexpr double kOrderingTol = 1e-10;
constexpr std::size_t kHeatmapSide = 50;
constexpr double kHeatmapBudgetSeconds = 10;
constexpr double kPhiResolutionFactor = 2;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

std::vector<ModelParams> reference_five() {
    std::vector<ModelParams> v;
    for (const auto &r : reference::kReferenceRows) {
        v.emplace_back(r.h, r.k);
    }
    return v;
}

std::vector<ModelParams> reference_four() {
    auto v = reference_five();
    v.pop_back();
    return v;
}

std::vector<ModelParams> entropy_grid() {
    std::vector<ModelParams> g;
    for (double h : {0.5, 1.0, 1.5}) {
        for (double k : {0.1, 0.2, 0.5, 1.0}) {
            g.emplace_back(h, k);
        }
    }
    for (const auto &p : reference_five()) {
        g.push_back(p);
    }
    for (double h : linspace(0.05, 2, 20)) {
        for (double k : linspace(0.05, 2, 20)) {
            g.emplace_back(h, k);
        }
    }
    return g;
}

Outcome analytic_regression() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (const auto &r : reference::kReferenceRows) {
        ModelParams p(r.h, r.k);
        worst = std::max({worst, std::abs(analytic_e0(p) - r.e0), std::abs(analytic_h1(p) - r.h1),
                          std::abs(analytic_v(p) - r.v), std::abs(analytic_e1(p) - r.e1)});
    }
    double elapsed = seconds_since(t0);
    return {worst <= kAnalyticTol && elapsed < kAnalyticBudgetSeconds,
            fmt("max |computed - reference| = %.2e (tol %.0e) over 5 pairs x 4 quantities, %.4f s (budget %.0f s)",
                worst, kAnalyticTol, elapsed, kAnalyticBudgetSeconds)};
}

Outcome sampled_agreement() {
    auto t0 = std::chrono::steady_clock::now();
    int worst_pass = kSampleSeeds;
    std::string worst_setting = "none";
    for (const auto &p : reference_five()) {
        for (auto t : {MeasurementTarget::E0, MeasurementTarget::H1, MeasurementTarget::V, MeasurementTarget::E1}) {
            int pass = 0;
            for (int s = 1; s <= kSampleSeeds; ++s) {
                EstimationResult r = run_protocol(p, t, ProtocolMode::deferred, kSampleShots, s);
                pass += std::abs(r.mean - analytic_value(p, t)) <= kSampleSigmas * r.std_error;
            }
            if (pass < worst_pass || worst_setting == "none") {
                worst_pass = std::min(worst_pass, pass);
                worst_setting = fmt("(%.1f,%.1f) %s", p.h(), p.k(), std::string(target_name(t)).c_str());
            }
        }
    }
    double elapsed = seconds_since(t0);
    return {worst_pass >= kSampleMinPass && elapsed < kSampleBudgetSeconds,
            fmt("worst setting %s: %d/%d seeds within %.0f sigma at %llu shots (need %d), %.1f s (budget %.0f s)",
                worst_setting.c_str(), worst_pass, kSampleSeeds, kSampleSigmas, (unsigned long long)kSampleShots,
                kSampleMinPass, elapsed, kSampleBudgetSeconds)};
}

Outcome mode_equivalence() {
    std::vector<ModelParams> grid = entropy_grid();
    for (double h : linspace(0.05, 2, kHeatmapSide)) {
        for (double k : linspace(0.05, 2, kHeatmapSide)) {
            grid.emplace_back(h, k);
        }
    }
    double worst = 0;
    for (const auto &p : grid) {
        for (auto t : {MeasurementTarget::E0, MeasurementTarget::H1, MeasurementTarget::V}) {
            Distribution a = exact_distribution(build_circuit(p, t, ProtocolMode::conditional));
            Distribution b = exact_distribution(build_circuit(p, t, ProtocolMode::deferred));
            for (unsigned i = 0; i < 4; ++i) {
                worst = std::max(worst, std::abs(a[i] - b[i]));
            }
        }
    }
    return {worst < kModeTol, fmt("max |P_conditional - P_deferred| = %.2e (tol %.0e) over %zu parameter points x 3 "
                                  "targets",
                                  worst, kModeTol, grid.size())};
}

Outcome no_go() {
    std::mt19937_64 rng(20240101);
    double worst = INFINITY;
    for (const auto &p : reference_four()) {
        for (int i = 0; i < kNoGoUnitaries; ++i) {
            worst = std::min(worst, nogo_gap(p, oracle::from_eigen(oracle::haar_unitary(rng))));
        }
    }
    return {worst >= kNoGoTol, fmt("min Tr[rho_W H] - <E0> = %.3e (need >= %.0e) over %d Haar unitaries x 4 pairs",
                                   worst, kNoGoTol, kNoGoUnitaries)};
}

Outcome time_evolution() {
    double worst = 0;
    for (auto [h, k] : {std::pair{1.0, 1.0}, std::pair{1.5, 1.0}}) {
        ModelParams p(h, k);
        auto times = linspace(0, 2 * std::numbers::pi / k, kEvolutionPoints);
        for (const auto &row : evolution_scan(p, times)) {
            worst = std::max({worst, std::abs(row.h1_numeric - row.h1_closed_form),
                              std::abs(row.v_numeric - free_evolution_v(p, row.t))});
        }
    }
    return {worst < kEvolutionTol, fmt("max |numeric - closed form| = %.2e (tol %.0e) over %zu points at (1,1), (1.5,1)",
                                       worst, kEvolutionTol, kEvolutionPoints)};
}

Outcome entropy_bound() {
    double worst = INFINITY;
    auto grid = entropy_grid();
    for (const auto &p : grid) {
        EntropyReport r = entropy_report(p);
        worst = std::min(worst, r.delta_s - r.delta_s_lower_bound);
    }
    return {worst >= kEntropySlack,
            fmt("min (Delta S_AB - bound) = %.3e (need >= %.0e) over %zu grid points", worst, kEntropySlack, grid.size())};
}

struct MitigationStats {
    int closer = 0;
    int negative = 0;
    int unmit_below_mit = 0;
    int full_ordering = 0;
};

std::vector<MitigationStats> mitigation_runs(double &elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    ReadoutNoise lima = ReadoutNoise::preset("lima-like");
    std::vector<MitigationStats> stats;
    for (const auto &p : reference_four()) {
        MitigationStats s;
        const double exact = analytic_v(p);
        for (int seed = 1; seed <= kMitigationSeeds; ++seed) {
            MitigatedRun run = run_with_mitigation(p, MeasurementTarget::V, ProtocolMode::deferred, kMitigationShots,
                                                   seed, lima, MitigationMethod::least_squares, kMitigationShots);
            double u = run.unmitigated.mean, m = run.mitigated.mean;
            s.closer += std::abs(m - exact) < std::abs(u - exact);
            s.negative += m < 0;
            s.unmit_below_mit += std::abs(u) < std::abs(m);
            s.full_ordering += std::abs(u) < std::abs(m) && std::abs(m) <= std::abs(exact);
        }
        stats.push_back(s);
    }
    elapsed = seconds_since(t0);
    return stats;
}

Outcome mitigation_efficacy(const std::vector<MitigationStats> &stats, double elapsed) {
    int min_closer = kMitigationSeeds, min_negative = kMitigationSeeds;
    for (const auto &s : stats) {
        min_closer = std::min(min_closer, s.closer);
        min_negative = std::min(min_negative, s.negative);
    }
    return {min_closer >= kCloserMin && min_negative >= kNegativeMin && elapsed < kMitigationBudgetSeconds,
            fmt("lima-like, %llu shots: worst pair %d/%d seeds mitigated closer (need %d), %d/%d mitigated <V> < 0 "
                "(need %d), %.1f s (budget %.0f s)",
                (unsigned long long)kMitigationShots, min_closer, kMitigationSeeds, kCloserMin, min_negative,
                kMitigationSeeds, kNegativeMin, elapsed, kMitigationBudgetSeconds)};
}

Outcome ordering(const std::vector<MitigationStats> &stats) {
    // Infinite-shot check: observed distribution A p, mitigated with the exact A.
    bool exact_ok = true;
    double worst_margin = INFINITY;
    for (const auto &name : ReadoutNoise::preset_names()) {
        CalibrationMatrix a = CalibrationMatrix::from_noise(ReadoutNoise::preset(name));
        for (const auto &p : reference_four()) {
            Distribution clean = exact_distribution(build_circuit(p, MeasurementTarget::V, ProtocolMode::deferred));
            Distribution noisy = a.apply(clean);
            double u = estimate_energy(p, MeasurementTarget::V, noisy, 1).mean;
            double m = estimate_energy(p, MeasurementTarget::V, mitigate(noisy, a, MitigationMethod::least_squares), 1).mean;
            double exact = analytic_v(p);
            exact_ok = exact_ok && std::abs(u) < std::abs(m) && std::abs(m) <= std::abs(exact) + kOrderingTol;
            worst_margin = std::min(worst_margin, std::abs(m) - std::abs(u));
        }
    }
    int min_sampled = kMitigationSeeds, min_full = kMitigationSeeds;
    for (const auto &s : stats) {
        min_sampled = std::min(min_sampled, s.unmit_below_mit);
        min_full = std::min(min_full, s.full_ordering);
    }
    return {exact_ok && min_sampled >= kCloserMin,
            fmt("exact |unmit| < |mit| <= |analytic| (+%.0e) for 3 presets x 4 pairs: %s (min gap %.4f); sampled "
                "|unmit| < |mit| in worst pair %d/%d (need %d); full sampled ordering %d/%d (informational)",
                kOrderingTol, exact_ok ? "yes" : "no", worst_margin, min_sampled, kMitigationSeeds, kCloserMin,
                min_full, kMitigationSeeds)};
}

Outcome sign_structure() {
    auto t0 = std::chrono::steady_clock::now();
    auto cells = heatmap(SweepGrid::uniform(0.05, 2, kHeatmapSide));
    std::size_t bad = 0;
    for (const auto &c : cells) {
        bad += !(c.v < 0 && c.h1 > 0);
    }
    double elapsed = seconds_since(t0);
    return {bad == 0 && cells.size() == kHeatmapSide * kHeatmapSide && elapsed < kHeatmapBudgetSeconds,
            fmt("%zu/%zu cells violate <V> < 0, <H1> > 0, %.4f s (budget %.0f s)", bad, cells.size(), elapsed,
                kHeatmapBudgetSeconds)};
}

Outcome phi_optimality() {
    double worst_ratio = 0;
    for (const auto &p : reference_four()) {
        PhiScanResult r = phi_scan(p);
        worst_ratio = std::max(worst_ratio, r.distance / r.resolution);
    }
    return {worst_ratio <= kPhiResolutionFactor,
            fmt("max |argmin - phi| = %.2f grid steps (need <= %.0f) at 4 pairs", worst_ratio, kPhiResolutionFactor)};
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
    double mitigation_seconds = 0;
    std::vector<MitigationStats> stats;
    checks.emplace_back("analytic regression", analytic_regression);
    checks.emplace_back("sampled estimator agreement", sampled_agreement);
    checks.emplace_back("mode equivalence", mode_equivalence);
    checks.emplace_back("no-go inequality", no_go);
    checks.emplace_back("time evolution", time_evolution);
    checks.emplace_back("entropy bound", entropy_bound);
    checks.emplace_back("mitigation efficacy", [&] {
        stats = mitigation_runs(mitigation_seconds);
        return mitigation_efficacy(stats, mitigation_seconds);
    });
    checks.emplace_back("qualitative ordering under synthetic noise", [&] { return ordering(stats); });
    checks.emplace_back("sign structure", sign_structure);
    checks.emplace_back("phi optimality", phi_optimality);

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        Outcome o = checks[i].second();
        failures += !o.pass;
        std::printf("criterion %2zu %s: %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", checks[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failures, checks.size());
    return failures == 0 ? 0 : 1;
}
