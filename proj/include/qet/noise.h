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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qet/circuit.h"
#include "qet/rng.h"

namespace qet {

/// Terminal readout flips of one qubit.
struct QubitReadoutError {
    /// p(read 1 | true 0)
    double p1_given_0 = 0;
    /// p(read 0 | true 1)
    double p0_given_1 = 0;
};

/// Independent per-qubit readout error acting on the final classical register.
class ReadoutNoise {
   public:
    ReadoutNoise() = default;
    /// Probabilities must lie in [0, 1].
    ReadoutNoise(QubitReadoutError q0, QubitReadoutError q1);

    /// Same flip probability in both directions on each qubit.
    static ReadoutNoise symmetric(double p_q0, double p_q1);

    /// Named presets carrying only the readout assignment errors of the corresponding backend
    /// calibration: "lima-like", "jakarta-like", "cairo-like".
    static ReadoutNoise preset(std::string_view name);
    static std::vector<std::string> preset_names();

    const QubitReadoutError &qubit(unsigned q) const {
        return q_[q];
    }
    bool is_zero() const;

   private:
    std::array<QubitReadoutError, 2> q_{};
};

/// Flips every recorded bit of every shot independently.
Counts apply_noise(const Counts &counts, const ReadoutNoise &noise, Rng &rng);

/// Column-stochastic readout response: entry(observed, prepared).
class CalibrationMatrix {
   public:
    /// Identity response.
    CalibrationMatrix();

    /// Validates entries in [0, 1] and column sums of 1 within 1e-12.
    static CalibrationMatrix from_columns(const std::array<Distribution, 4> &columns);

    /// Exact response implied by a readout channel (Kronecker product of the per-qubit 2x2 matrices).
    static CalibrationMatrix from_noise(const ReadoutNoise &noise);

    double operator()(unsigned observed, unsigned prepared) const {
        return columns_[prepared][observed];
    }
    const Distribution &column(unsigned prepared) const {
        return columns_[prepared];
    }

    /// Mean of the diagonal.
    double fidelity() const;

    /// Observed distribution for a true distribution p.
    Distribution apply(const Distribution &p) const;

    /// Ratio of extreme singular values.
    double condition_number() const;

   private:
    std::array<Distribution, 4> columns_;
};

/// Prepare |00>, |01>, |10>, |11> with X gates and measure both qubits.
std::array<Circuit, 4> build_calibration_circuits();

/// Column j is the empirical distribution when basis state j was prepared.
CalibrationMatrix estimate_calibration_matrix(std::span<const Counts, 4> runs);

/// Runs the calibration circuits under `noise` and estimates the response.
CalibrationMatrix run_calibration(const ReadoutNoise &noise, std::uint64_t shots_per_circuit, std::uint64_t seed);

enum class MitigationMethod {
    /// Solve A x = y, clip negatives, renormalize. Fails on ill-conditioned A.
    direct_inverse,
    /// argmin ||A x - y|| over the probability simplex.
    least_squares,
};

/// Condition-number limit for the direct method.
inline constexpr double kMaxCalibrationCondition = 1e6;

/// Corrected distribution. The direct method throws NumericalError when A is singular or its
/// condition number exceeds 1e6.
Distribution mitigate(const Distribution &observed, const CalibrationMatrix &a, MitigationMethod method);
Distribution mitigate(const Counts &counts, const CalibrationMatrix &a, MitigationMethod method);

std::string_view method_name(MitigationMethod m);
MitigationMethod parse_method(std::string_view name);

}  // namespace qet
