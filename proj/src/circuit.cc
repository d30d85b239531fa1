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

#include "qet/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qet {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_qubit(unsigned q) {
    if (q >= kNumQubits) {
        throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    }
}

void check_bit(unsigned b) {
    if (b >= kNumClassicalBits) {
        throw std::invalid_argument("classical bit index " + std::to_string(b) + " out of range");
    }
}

void check_value(unsigned v) {
    if (v > 1) {
        throw std::invalid_argument("control value must be 0 or 1");
    }
}

}  // namespace

std::string describe(const GateStep &step) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const RY &g) { out << "RY(" << g.angle << ") q" << g.target; },
                   [&](const Hadamard &g) { out << "H q" << g.target; },
                   [&](const PauliX &g) { out << "X q" << g.target; },
                   [&](const CNOT &g) { out << "CNOT q" << g.control << " q" << g.target; },
                   [&](const ControlledRY &g) {
                       out << "CRY(" << g.angle << ") q" << g.control << "=" << g.control_value << " q" << g.target;
                   },
                   [&](const MeasureZ &g) { out << "MZ q" << g.target << " -> c" << g.bit; },
                   [&](const ClassicallyControlledRY &g) {
                       out << "RY(" << g.angle << ") q" << g.target << " if c" << g.bit << "==" << g.required_value;
                   },
               },
               step);
    return out.str();
}

Circuit::Circuit(std::initializer_list<GateStep> steps) : steps_(steps) {
}

Circuit &Circuit::add(const GateStep &step) {
    steps_.push_back(step);
    return *this;
}

void Circuit::validate() const {
    std::array<bool, kNumClassicalBits> written{};
    for (const auto &step : steps_) {
        std::visit(overloaded{
                       [](const RY &g) { check_qubit(g.target); },
                       [](const Hadamard &g) { check_qubit(g.target); },
                       [](const PauliX &g) { check_qubit(g.target); },
                       [](const CNOT &g) {
                           check_qubit(g.control);
                           check_qubit(g.target);
                           if (g.control == g.target) {
                               throw std::invalid_argument("CNOT control equals target");
                           }
                       },
                       [](const ControlledRY &g) {
                           check_qubit(g.control);
                           check_qubit(g.target);
                           check_value(g.control_value);
                           if (g.control == g.target) {
                               throw std::invalid_argument("controlled RY control equals target");
                           }
                       },
                       [&](const MeasureZ &g) {
                           check_qubit(g.target);
                           check_bit(g.bit);
                           written[g.bit] = true;
                       },
                       [&](const ClassicallyControlledRY &g) {
                           check_qubit(g.target);
                           check_bit(g.bit);
                           check_value(g.required_value);
                           if (!written[g.bit]) {
                               throw std::invalid_argument("classically controlled step reads c" +
                                                           std::to_string(g.bit) + " before any measurement wrote it");
                           }
                       },
                   },
                   step);
    }
}

unsigned Circuit::depth() const {
    std::array<unsigned, kNumQubits> layer{};
    // Layer at which each classical bit becomes available.
    std::array<unsigned, kNumClassicalBits> bit_ready{};
    for (const auto &step : steps_) {
        std::visit(overloaded{
                       [&](const CNOT &g) {
                           unsigned l = std::max(layer[g.control], layer[g.target]) + 1;
                           layer[g.control] = layer[g.target] = l;
                       },
                       [&](const ControlledRY &g) {
                           unsigned l = std::max(layer[g.control], layer[g.target]) + 1;
                           layer[g.control] = layer[g.target] = l;
                       },
                       [&](const MeasureZ &g) { bit_ready[g.bit] = layer[g.target]; },
                       [&](const ClassicallyControlledRY &g) {
                           layer[g.target] = std::max(layer[g.target], bit_ready[g.bit]) + 1;
                       },
                       [&](const auto &g) { layer[g.target] += 1; },
                   },
                   step);
    }
    return std::max(layer[0], layer[1]);
}

bool Circuit::has_mid_circuit_measurement() const {
    bool measured = false;
    for (const auto &step : steps_) {
        if (std::holds_alternative<MeasureZ>(step)) {
            measured = true;
        } else if (measured) {
            return true;
        }
    }
    return false;
}

bool Circuit::operator==(const Circuit &other) const {
    if (steps_.size() != other.steps_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (describe(steps_[i]) != describe(other.steps_[i])) {
            return false;
        }
    }
    return true;
}

std::string bitstring(unsigned index) {
    if (index > 3) {
        throw std::invalid_argument("outcome index out of range");
    }
    return {static_cast<char>('0' + (index >> 1)), static_cast<char>('0' + (index & 1))};
}

unsigned bitstring_index(std::string_view bits) {
    if (bits.size() != 2 || (bits[0] != '0' && bits[0] != '1') || (bits[1] != '0' && bits[1] != '1')) {
        throw std::invalid_argument("bitstring must be two characters of 0/1, got '" + std::string(bits) + "'");
    }
    return 2 * static_cast<unsigned>(bits[0] - '0') + static_cast<unsigned>(bits[1] - '0');
}

Counts::Counts(std::initializer_list<std::pair<std::string_view, std::uint64_t>> entries) {
    for (const auto &[bits, n] : entries) {
        c_[bitstring_index(bits)] += n;
    }
}

std::uint64_t Counts::total() const {
    return c_[0] + c_[1] + c_[2] + c_[3];
}

std::map<std::string, std::uint64_t> Counts::as_map() const {
    std::map<std::string, std::uint64_t> m;
    for (unsigned i = 0; i < 4; ++i) {
        if (c_[i] != 0) {
            m[bitstring(i)] = c_[i];
        }
    }
    return m;
}

Distribution frequencies(const Counts &counts) {
    std::uint64_t n = counts.total();
    if (n == 0) {
        throw std::invalid_argument("empty counts");
    }
    Distribution d;
    for (unsigned i = 0; i < 4; ++i) {
        d[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    }
    return d;
}

}  // namespace qet
