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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "reference_values.h"

using namespace qet;

TEST(analysis, linspace) {
    auto v = linspace(0.05, 2, 50);
    ASSERT_EQ(v.size(), 50u);
    EXPECT_DOUBLE_EQ(v.front(), 0.05);
    EXPECT_DOUBLE_EQ(v.back(), 2);
    EXPECT_EQ(linspace(3, 4, 1), std::vector<double>{3});
    EXPECT_TRUE(linspace(0, 1, 0).empty());
}

TEST(analysis, grid_validation) {
    EXPECT_THROW(heatmap(SweepGrid{{}, {1}}), std::invalid_argument);
    EXPECT_THROW(heatmap(SweepGrid{{1, -1}, {1}}), std::invalid_argument);
    EXPECT_THROW(heatmap(SweepGrid{{1}, {0}}), std::invalid_argument);
}

TEST(analysis, heatmap_single_cell) {
    auto cells = heatmap(SweepGrid{{1}, {1}});
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_NEAR(cells[0].v, -0.3746, 1e-4);
    EXPECT_NEAR(cells[0].h1, 0.2598, 1e-4);
}

TEST(analysis, heatmap_matches_density_matrix_route) {
    SweepGrid grid = SweepGrid::uniform(0.05, 2, 12);
    auto cells = heatmap(grid);
    ASSERT_EQ(cells.size(), 144u);
    for (std::size_t i = 0; i < grid.h.size(); ++i) {
        for (std::size_t j = 0; j < grid.k.size(); ++j) {
            const auto &c = cells[i * grid.k.size() + j];
            EXPECT_EQ(c.h, grid.h[i]);
            EXPECT_EQ(c.k, grid.k[j]);
            oracle::Hams o = oracle::hamiltonians(c.h, c.k);
            oracle::M4 rq = oracle::rho_qet(c.h, c.k, angles(ModelParams(c.h, c.k)).phi);
            EXPECT_NEAR(c.v, oracle::expect(rq, o.v), 1e-11);
            EXPECT_NEAR(c.h1, oracle::expect(rq, o.h1), 1e-11);
        }
    }
}

TEST(analysis, heatmap_signs) {
    for (const auto &c : heatmap(SweepGrid::uniform(0.05, 2, 50))) {
        EXPECT_LT(c.v, 0);
        EXPECT_GT(c.h1, 0);
    }
}

TEST(analysis, phi_scan_finds_closed_form_angle) {
    for (const auto &row : reference::kReferenceRows) {
        ModelParams p(row.h, row.k);
        PhiScanResult r = phi_scan(p);
        EXPECT_LE(r.distance, 2 * r.resolution);
        EXPECT_NEAR(r.min_e1, analytic_e1(p), 1e-6);
        EXPECT_LE(analytic_e1(p), r.min_e1 + 1e-12);
    }
    EXPECT_THROW(phi_scan(ModelParams(1, 1), 1, 0), std::invalid_argument);
    EXPECT_THROW(phi_scan(ModelParams(1, 1), 0, 1, 0), std::invalid_argument);
}

TEST(analysis, evolution_scan) {
    for (auto [h, k] : {std::pair{1.0, 1.0}, std::pair{1.5, 1.0}}) {
        ModelParams p(h, k);
        auto times = linspace(0, 2 * std::numbers::pi / k, 101);
        auto rows = evolution_scan(p, times);
        ASSERT_EQ(rows.size(), 101u);
        EXPECT_NEAR(rows[0].h1_numeric, 0, 1e-12);
        for (const auto &r : rows) {
            EXPECT_NEAR(r.h1_numeric, r.h1_closed_form, 1e-9);
            EXPECT_NEAR(r.v_numeric, 0, 1e-9);
        }
        // Peak h^2/s at kt = pi/4.
        auto peak = evolution_scan(p, std::vector<double>{std::numbers::pi / 4 / k});
        EXPECT_NEAR(peak[0].h1_numeric, h * h / p.scale(), 1e-9);
    }
}

TEST(analysis, run_with_mitigation_without_method) {
    ModelParams p(1, 1);
    ReadoutNoise lima = ReadoutNoise::preset("lima-like");
    MitigatedRun r =
        run_with_mitigation(p, MeasurementTarget::V, ProtocolMode::deferred, 20000, 3, lima, std::nullopt, 20000);
    EXPECT_EQ(r.mitigated, r.unmitigated);
}

TEST(analysis, run_with_mitigation_e1_combines_parts) {
    ModelParams p(1, 1);
    ReadoutNoise lima = ReadoutNoise::preset("lima-like");
    CalibrationMatrix cal = CalibrationMatrix::from_noise(lima);
    auto e1 = run_with_mitigation(p, MeasurementTarget::E1, ProtocolMode::deferred, 20000, 3, lima,
                                  MitigationMethod::least_squares, cal);
    auto h1 = run_with_mitigation(p, MeasurementTarget::H1, ProtocolMode::deferred, 20000, 3, lima,
                                  MitigationMethod::least_squares, cal);
    auto v = run_with_mitigation(p, MeasurementTarget::V, ProtocolMode::deferred, 20000, 3, lima,
                                 MitigationMethod::least_squares, cal);
    EXPECT_DOUBLE_EQ(e1.mitigated.mean, h1.mitigated.mean + v.mitigated.mean);
    EXPECT_DOUBLE_EQ(e1.unmitigated.mean, h1.unmitigated.mean + v.unmitigated.mean);
}

TEST(analysis, report_analytic_column) {
    ReportConfig config;
    config.pairs = reference_pairs();
    config.shots = 2000;
    auto rows = comparison_report(config);
    ASSERT_EQ(rows.size(), 16u);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto &ref = reference::kReferenceRows[i];
        EXPECT_NEAR(rows[4 * i + 0].analytic, ref.e0, reference::kReferenceTol);
        EXPECT_NEAR(rows[4 * i + 1].analytic, ref.h1, reference::kReferenceTol);
        EXPECT_NEAR(rows[4 * i + 2].analytic, ref.v, reference::kReferenceTol);
        EXPECT_NEAR(rows[4 * i + 3].analytic, ref.e1, reference::kReferenceTol);
        EXPECT_EQ(rows[4 * i + 3].quantity, MeasurementTarget::E1);
    }
}

TEST(analysis, report_without_noise_collapses_columns) {
    ReportConfig config;
    config.pairs = reference_pairs();
    config.shots = 5000;
    config.mitigation = std::nullopt;
    for (const auto &row : comparison_report(config)) {
        EXPECT_EQ(row.noiseless.mean, row.unmitigated.mean);
        EXPECT_EQ(row.noiseless.mean, row.mitigated.mean);
        EXPECT_EQ(row.noiseless.std_error, row.mitigated.std_error);
    }
}

TEST(analysis, report_lima_mitigated_v_negative) {
    ReportConfig config;
    config.pairs = reference_pairs();
    config.noise = ReadoutNoise::preset("lima-like");
    auto rows = comparison_report(config);
    for (const auto &row : rows) {
        if (row.quantity == MeasurementTarget::V) {
            EXPECT_LT(row.mitigated.mean, 0);
        }
    }
    auto again = comparison_report(config);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].mitigated.mean, again[i].mitigated.mean);
    }
    config.shots = 0;
    EXPECT_THROW(comparison_report(config), std::invalid_argument);
}
