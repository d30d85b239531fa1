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

#include "qet/report_io.h"

#include <cstdio>

namespace qet::io {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            default:
                out += c;
        }
    }
    out += '"';
    return out;
}

JsonObject &JsonObject::number(std::string_view key, double v) {
    fields_.push_back({std::string(key), Kind::scalar, fixed6(v), {}});
    return *this;
}

JsonObject &JsonObject::integer(std::string_view key, std::uint64_t v) {
    fields_.push_back({std::string(key), Kind::scalar, std::to_string(v), {}});
    return *this;
}

JsonObject &JsonObject::string(std::string_view key, std::string_view v) {
    fields_.push_back({std::string(key), Kind::scalar, json_string(v), {}});
    return *this;
}

JsonObject &JsonObject::object(std::string_view key, JsonObject v) {
    fields_.push_back({std::string(key), Kind::object, {}, {std::move(v)}});
    return *this;
}

JsonObject &JsonObject::array(std::string_view key, std::vector<JsonObject> items) {
    fields_.push_back({std::string(key), Kind::array, {}, std::move(items)});
    return *this;
}

JsonObject &JsonObject::number_array(std::string_view key, std::span<const double> values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? ", " : "") + fixed6(values[i]);
    }
    s += "]";
    fields_.push_back({std::string(key), Kind::scalar, s, {}});
    return *this;
}

void JsonObject::render(std::string &out, int level) const {
    if (fields_.empty()) {
        out += "{}";
        return;
    }
    const std::string pad(2 * (level + 1), ' ');
    const std::string close_pad(2 * level, ' ');
    out += "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        const Field &f = fields_[i];
        out += pad + json_string(f.key) + ": ";
        switch (f.kind) {
            case Kind::scalar:
                out += f.scalar;
                break;
            case Kind::object:
                f.children.front().render(out, level + 1);
                break;
            case Kind::array:
                if (f.children.empty()) {
                    out += "[]";
                    break;
                }
                out += "[\n";
                for (std::size_t j = 0; j < f.children.size(); ++j) {
                    out += pad + "  ";
                    f.children[j].render(out, level + 2);
                    out += j + 1 < f.children.size() ? ",\n" : "\n";
                }
                out += pad + "]";
                break;
        }
        out += i + 1 < fields_.size() ? ",\n" : "\n";
    }
    out += close_pad + "}";
}

std::string JsonObject::str() const {
    std::string out;
    render(out, 0);
    out += "\n";
    return out;
}

JsonObject counts_json(const Counts &counts) {
    JsonObject o;
    for (unsigned i = 0; i < 4; ++i) {
        o.integer(bitstring(i), counts[i]);
    }
    return o;
}

JsonObject distribution_json(const Distribution &d) {
    JsonObject o;
    for (unsigned i = 0; i < 4; ++i) {
        o.number(bitstring(i), d[i]);
    }
    return o;
}

JsonObject calibration_json(const CalibrationMatrix &a) {
    JsonObject o;
    for (unsigned observed = 0; observed < 4; ++observed) {
        std::array<double, 4> row;
        for (unsigned prepared = 0; prepared < 4; ++prepared) {
            row[prepared] = a(observed, prepared);
        }
        o.number_array("observed_" + bitstring(observed), row);
    }
    return o;
}

void write_heatmap_csv(std::ostream &out, std::span<const HeatmapCell> cells) {
    out << "h,k,V,H1\n";
    for (const auto &c : cells) {
        out << fixed6(c.h) << ',' << fixed6(c.k) << ',' << fixed6(c.v) << ',' << fixed6(c.h1) << '\n';
    }
}

void write_evolution_csv(std::ostream &out, std::span<const EvolutionRow> rows) {
    out << "t,H1_numeric,H1_closed_form,V_numeric\n";
    for (const auto &r : rows) {
        out << fixed6(r.t) << ',' << fixed6(r.h1_numeric) << ',' << fixed6(r.h1_closed_form) << ','
            << fixed6(r.v_numeric) << '\n';
    }
}

void write_report_csv(std::ostream &out, std::span<const ComparisonRow> rows) {
    out << "h,k,quantity,analytic,noiseless,noiseless_err,unmitigated,unmitigated_err,mitigated,mitigated_err\n";
    for (const auto &r : rows) {
        out << fixed6(r.params.h()) << ',' << fixed6(r.params.k()) << ',' << target_name(r.quantity) << ','
            << fixed6(r.analytic) << ',' << fixed6(r.noiseless.mean) << ',' << fixed6(r.noiseless.std_error) << ','
            << fixed6(r.unmitigated.mean) << ',' << fixed6(r.unmitigated.std_error) << ','
            << fixed6(r.mitigated.mean) << ',' << fixed6(r.mitigated.std_error) << '\n';
    }
}

std::string report_json(std::span<const ComparisonRow> rows, const JsonObject &config) {
    auto estimate = [](const Estimate &e) { return JsonObject().number("mean", e.mean).number("std_error", e.std_error); };
    std::vector<JsonObject> items;
    for (const auto &r : rows) {
        items.push_back(JsonObject()
                            .number("h", r.params.h())
                            .number("k", r.params.k())
                            .string("quantity", target_name(r.quantity))
                            .number("analytic", r.analytic)
                            .object("noiseless", estimate(r.noiseless))
                            .object("unmitigated", estimate(r.unmitigated))
                            .object("mitigated", estimate(r.mitigated)));
    }
    JsonObject root;
    root.integer("schema_version", kSchemaVersion).string("command", "report").object("config", config).array("rows", items);
    return root.str();
}

}  // namespace qet::io
