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

#include "qet/noise.h"

#include <cmath>
#include <Eigen/Dense>
#include <limits>
#include <stdexcept>

#include "qet/errors.h"
#include "qet/simulator.h"

namespace qet {
namespace {

void check_probability(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("readout flip probability must be in [0, 1], got " + std::to_string(p));
    }
}

Eigen::Matrix4d to_eigen(const CalibrationMatrix &a) {
    Eigen::Matrix4d m;
    for (unsigned r = 0; r < 4; ++r) {
        for (unsigned c = 0; c < 4; ++c) {
            m(r, c) = a(r, c);
        }
    }
    return m;
}

Distribution renormalized(const Eigen::Vector4d &x) {
    Distribution d;
    double total = 0;
    for (int i = 0; i < 4; ++i) {
        d[i] = std::max(0.0, x(i));
        total += d[i];
    }
    if (!(total > 0)) {
        throw NumericalError("mitigated distribution has no positive mass");
    }
    for (double &v : d) {
        v /= total;
    }
    return d;
}

Distribution solve_direct(const Eigen::Matrix4d &a, const Eigen::Vector4d &y) {
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(a);
    const auto &sv = svd.singularValues();
    double smin = sv(3);
    if (!(smin > 0) || sv(0) / smin > kMaxCalibrationCondition) {
        throw NumericalError("calibration matrix is singular or ill-conditioned (condition number " +
                             std::to_string(smin > 0 ? sv(0) / smin : std::numeric_limits<double>::infinity()) +
                             "); use least-squares mitigation");
    }
    return renormalized(a.partialPivLu().solve(y));
}

// The simplex-constrained minimizer lies in the relative interior of exactly one face. For each
// face (support set) solve the equality-constrained problem through its KKT system; the best
// feasible candidate is the global optimum of the convex problem.
Distribution solve_least_squares(const Eigen::Matrix4d &a, const Eigen::Vector4d &y) {
    double best_objective = std::numeric_limits<double>::infinity();
    Eigen::Vector4d best = Eigen::Vector4d::Constant(0.25);
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<int> support;
        for (int i = 0; i < 4; ++i) {
            if (mask & (1u << i)) {
                support.push_back(i);
            }
        }
        const int n = static_cast<int>(support.size());
        Eigen::MatrixXd as(4, n);
        for (int j = 0; j < n; ++j) {
            as.col(j) = a.col(support[j]);
        }
        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + 1, n + 1);
        kkt.topLeftCorner(n, n) = 2 * as.transpose() * as;
        kkt.topRightCorner(n, 1).setOnes();
        kkt.bottomLeftCorner(1, n).setOnes();
        Eigen::VectorXd rhs(n + 1);
        rhs.head(n) = 2 * as.transpose() * y;
        rhs(n) = 1;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
        if (!lu.isInvertible()) {
            continue;
        }
        Eigen::VectorXd sol = lu.solve(rhs);
        Eigen::Vector4d x = Eigen::Vector4d::Zero();
        bool feasible = true;
        for (int j = 0; j < n; ++j) {
            if (sol(j) < -1e-14) {
                feasible = false;
                break;
            }
            x(support[j]) = std::max(0.0, sol(j));
        }
        if (!feasible) {
            continue;
        }
        double objective = (a * x - y).squaredNorm();
        if (objective < best_objective) {
            best_objective = objective;
            best = x;
        }
    }
    return renormalized(best);
}

}  // namespace

ReadoutNoise::ReadoutNoise(QubitReadoutError q0, QubitReadoutError q1) : q_{q0, q1} {
    for (const auto &q : q_) {
        check_probability(q.p1_given_0);
        check_probability(q.p0_given_1);
    }
}

ReadoutNoise ReadoutNoise::symmetric(double p_q0, double p_q1) {
    return ReadoutNoise({p_q0, p_q0}, {p_q1, p_q1});
}

ReadoutNoise ReadoutNoise::preset(std::string_view name) {
    // Readout assignment errors of the first and second qubit used on each device.
    if (name == "lima-like") {
        return symmetric(1.960e-2, 1.300e-2);
    }
    if (name == "jakarta-like") {
        return symmetric(2.440e-2, 2.400e-2);
    }
    if (name == "cairo-like") {
        return symmetric(8.500e-3, 8.000e-3);
    }
    throw std::invalid_argument("unknown noise preset '" + std::string(name) + "'");
}

std::vector<std::string> ReadoutNoise::preset_names() {
    return {"lima-like", "jakarta-like", "cairo-like"};
}

bool ReadoutNoise::is_zero() const {
    for (const auto &q : q_) {
        if (q.p1_given_0 != 0 || q.p0_given_1 != 0) {
            return false;
        }
    }
    return true;
}

Counts apply_noise(const Counts &counts, const ReadoutNoise &noise, Rng &rng) {
    if (noise.is_zero()) {
        return counts;
    }
    Counts out;
    for (unsigned index = 0; index < 4; ++index) {
        for (std::uint64_t shot = 0; shot < counts[index]; ++shot) {
            unsigned observed = 0;
            for (unsigned q = 0; q < 2; ++q) {
                unsigned bit = (index >> (1 - q)) & 1;
                const auto &e = noise.qubit(q);
                double flip = bit == 0 ? e.p1_given_0 : e.p0_given_1;
                if (rng.uniform() < flip) {
                    bit ^= 1;
                }
                observed |= bit << (1 - q);
            }
            out.add(observed);
        }
    }
    return out;
}

CalibrationMatrix::CalibrationMatrix() {
    for (unsigned j = 0; j < 4; ++j) {
        columns_[j] = {};
        columns_[j][j] = 1;
    }
}

CalibrationMatrix CalibrationMatrix::from_columns(const std::array<Distribution, 4> &columns) {
    for (const auto &col : columns) {
        double sum = 0;
        for (double v : col) {
            if (!(v >= 0 && v <= 1)) {
                throw std::invalid_argument("calibration entries must lie in [0, 1]");
            }
            sum += v;
        }
        if (std::abs(sum - 1) > kAlgebraicTol) {
            throw std::invalid_argument("calibration matrix columns must sum to 1");
        }
    }
    CalibrationMatrix m;
    m.columns_ = columns;
    return m;
}

CalibrationMatrix CalibrationMatrix::from_noise(const ReadoutNoise &noise) {
    // Per-qubit response r_q(observed, true).
    auto response = [&](unsigned q, unsigned observed, unsigned truth) {
        const auto &e = noise.qubit(q);
        double flip = truth == 0 ? e.p1_given_0 : e.p0_given_1;
        return observed == truth ? 1 - flip : flip;
    };
    std::array<Distribution, 4> cols;
    for (unsigned prepared = 0; prepared < 4; ++prepared) {
        for (unsigned observed = 0; observed < 4; ++observed) {
            cols[prepared][observed] = response(0, observed >> 1, prepared >> 1) * response(1, observed & 1, prepared & 1);
        }
    }
    return from_columns(cols);
}

double CalibrationMatrix::fidelity() const {
    double s = 0;
    for (unsigned j = 0; j < 4; ++j) {
        s += (*this)(j, j);
    }
    return s / 4;
}

Distribution CalibrationMatrix::apply(const Distribution &p) const {
    Distribution out{};
    for (unsigned obs = 0; obs < 4; ++obs) {
        for (unsigned prep = 0; prep < 4; ++prep) {
            out[obs] += (*this)(obs, prep) * p[prep];
        }
    }
    return out;
}

double CalibrationMatrix::condition_number() const {
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(to_eigen(*this));
    const auto &sv = svd.singularValues();
    return sv(3) > 0 ? sv(0) / sv(3) : std::numeric_limits<double>::infinity();
}

std::array<Circuit, 4> build_calibration_circuits() {
    std::array<Circuit, 4> circuits;
    for (unsigned prepared = 0; prepared < 4; ++prepared) {
        Circuit c;
        if (prepared & 2) {
            c.add(PauliX{0});
        }
        if (prepared & 1) {
            c.add(PauliX{1});
        }
        c.add(MeasureZ{0, 0}).add(MeasureZ{1, 1});
        circuits[prepared] = c;
    }
    return circuits;
}

CalibrationMatrix estimate_calibration_matrix(std::span<const Counts, 4> runs) {
    std::array<Distribution, 4> cols;
    for (unsigned j = 0; j < 4; ++j) {
        if (runs[j].total() == 0) {
            throw std::invalid_argument("calibration run " + bitstring(j) + " has no shots");
        }
        cols[j] = frequencies(runs[j]);
    }
    return CalibrationMatrix::from_columns(cols);
}

CalibrationMatrix run_calibration(const ReadoutNoise &noise, std::uint64_t shots_per_circuit, std::uint64_t seed) {
    auto circuits = build_calibration_circuits();
    std::array<Counts, 4> runs;
    for (unsigned j = 0; j < 4; ++j) {
        Rng circuit_rng(seed, 2 * j);
        Rng noise_rng(seed, 2 * j + 1);
        runs[j] = apply_noise(run_shots(circuits[j], shots_per_circuit, circuit_rng), noise, noise_rng);
    }
    return estimate_calibration_matrix(runs);
}

Distribution mitigate(const Distribution &observed, const CalibrationMatrix &a, MitigationMethod method) {
    Eigen::Vector4d y(observed[0], observed[1], observed[2], observed[3]);
    Eigen::Matrix4d m = to_eigen(a);
    switch (method) {
        case MitigationMethod::direct_inverse:
            return solve_direct(m, y);
        case MitigationMethod::least_squares:
            return solve_least_squares(m, y);
    }
    throw std::invalid_argument("unknown mitigation method");
}

Distribution mitigate(const Counts &counts, const CalibrationMatrix &a, MitigationMethod method) {
    return mitigate(frequencies(counts), a, method);
}

std::string_view method_name(MitigationMethod m) {
    switch (m) {
        case MitigationMethod::direct_inverse:
            return "direct";
        case MitigationMethod::least_squares:
            return "least-squares";
    }
    return "unknown";
}

MitigationMethod parse_method(std::string_view name) {
    if (name == "direct") {
        return MitigationMethod::direct_inverse;
    }
    if (name == "least-squares") {
        return MitigationMethod::least_squares;
    }
    throw std::invalid_argument("unknown mitigation method '" + std::string(name) + "'");
}

}  // namespace qet
