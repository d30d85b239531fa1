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
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qet {

struct RY {
    double angle;
    unsigned target;
};
struct Hadamard {
    unsigned target;
};
struct PauliX {
    unsigned target;
};
struct CNOT {
    unsigned control;
    unsigned target;
};
/// Applies RY(angle) to `target` when qubit `control` is in |control_value>.
/// control_value 0 is the anti-controlled gate.
struct ControlledRY {
    unsigned control;
    unsigned control_value;
    double angle;
    unsigned target;
};
/// Projective Z measurement of `target`, outcome written to classical bit `bit`.
struct MeasureZ {
    unsigned target;
    unsigned bit;
};
/// Applies RY(angle) to `target` when classical bit `bit` equals `required_value`.
struct ClassicallyControlledRY {
    unsigned bit;
    unsigned required_value;
    double angle;
    unsigned target;
};

using GateStep = std::variant<RY, Hadamard, PauliX, CNOT, ControlledRY, MeasureZ, ClassicallyControlledRY>;

std::string describe(const GateStep &step);

inline constexpr unsigned kNumQubits = 2;
inline constexpr unsigned kNumClassicalBits = 2;

/// Ordered steps on two qubits with a two-bit classical register. The register starts at 00;
/// a later MeasureZ on the same bit overwrites it.
class Circuit {
   public:
    Circuit() = default;
    Circuit(std::initializer_list<GateStep> steps);

    Circuit &add(const GateStep &step);

    const std::vector<GateStep> &steps() const {
        return steps_;
    }
    bool empty() const {
        return steps_.empty();
    }

    /// Throws std::invalid_argument on out-of-range indices, control == target, or a
    /// classically controlled step reading a bit no earlier MeasureZ wrote.
    void validate() const;

    /// Number of gate layers, measurements excluded.
    unsigned depth() const;

    bool has_mid_circuit_measurement() const;

    bool operator==(const Circuit &other) const;

   private:
    std::vector<GateStep> steps_;
};

/// Outcome index of the two-bit register: 2*b0 + b1.
std::string bitstring(unsigned index);
unsigned bitstring_index(std::string_view bits);

/// Outcome counts of a shot ensemble, keyed by b0b1.
class Counts {
   public:
    Counts() = default;
    Counts(std::initializer_list<std::pair<std::string_view, std::uint64_t>> entries);

    std::uint64_t operator[](unsigned index) const {
        return c_[index];
    }
    std::uint64_t at(std::string_view bits) const {
        return c_[bitstring_index(bits)];
    }
    void add(unsigned index, std::uint64_t n = 1) {
        c_[index] += n;
    }
    std::uint64_t total() const;
    std::map<std::string, std::uint64_t> as_map() const;
    const std::array<std::uint64_t, 4> &raw() const {
        return c_;
    }

    bool operator==(const Counts &other) const = default;

   private:
    std::array<std::uint64_t, 4> c_{};
};

/// Probability per outcome index 2*b0 + b1.
using Distribution = std::array<double, 4>;

Distribution frequencies(const Counts &counts);

}  // namespace qet
