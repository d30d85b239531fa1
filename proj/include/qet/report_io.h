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

// Serialization of reports. Every number is written with fixed 6-decimal formatting so that
// output is byte-stable for a given configuration and seed. CSV: comma separated, header row,
// LF line endings.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qet/analysis.h"
#include "qet/noise.h"
#include "qet/protocol.h"

namespace qet::io {

inline constexpr int kSchemaVersion = 1;

/// "%.6f", with negative zero printed as 0.000000.
std::string fixed6(double v);

/// Minimal ordered JSON object builder.
class JsonObject {
   public:
    JsonObject &number(std::string_view key, double v);
    JsonObject &integer(std::string_view key, std::uint64_t v);
    JsonObject &string(std::string_view key, std::string_view v);
    JsonObject &object(std::string_view key, JsonObject v);
    JsonObject &array(std::string_view key, std::vector<JsonObject> items);
    JsonObject &number_array(std::string_view key, std::span<const double> values);

    std::string str() const;

   private:
    enum class Kind { scalar, object, array };
    struct Field {
        std::string key;
        Kind kind;
        std::string scalar;
        std::vector<JsonObject> children;
    };
    void render(std::string &out, int level) const;
    std::vector<Field> fields_;
};

std::string json_string(std::string_view s);

JsonObject counts_json(const Counts &counts);
JsonObject distribution_json(const Distribution &d);
JsonObject calibration_json(const CalibrationMatrix &a);

void write_heatmap_csv(std::ostream &out, std::span<const HeatmapCell> cells);
void write_evolution_csv(std::ostream &out, std::span<const EvolutionRow> rows);
void write_report_csv(std::ostream &out, std::span<const ComparisonRow> rows);
std::string report_json(std::span<const ComparisonRow> rows, const JsonObject &config);

}  // namespace qet::io
