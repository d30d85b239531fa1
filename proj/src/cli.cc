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

#include "qet/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qet/analysis.h"
#include "qet/errors.h"
#include "qet/kernels.h"
#include "qet/noise.h"
#include "qet/protocol.h"
#include "qet/report_io.h"

namespace qet::cli {
namespace {

using io::JsonObject;

struct Options {
    std::optional<double> h;
    std::optional<double> k;
    std::optional<std::string> target;
    std::string mode = "deferred";
    std::uint64_t shots = 100000;
    std::optional<std::uint64_t> calibration_shots;
    std::uint64_t seed = 1;
    std::optional<std::string> noise;
    std::string mitigation = "least-squares";
    std::optional<std::string> out;
    std::string grid_h = "0.05:2:50";
    std::string grid_k = "0.05:2:50";
    std::optional<double> t_max;
    std::size_t t_steps = 101;
    std::optional<std::string> format;
    std::optional<std::string> pairs;
};

double parse_number(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    double v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

// "lo:hi:n" or an explicit comma separated list.
std::vector<double> parse_axis(const std::string &text) {
    if (text.find(':') != std::string::npos) {
        auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument("grid axis must be 'lo:hi:n' or a comma separated list: '" + text + "'");
        }
        double n = parse_number(parts[2]);
        if (!(n >= 1) || n != std::floor(n) || n > 1e6) {
            throw std::invalid_argument("grid axis point count must be a positive integer: '" + text + "'");
        }
        return linspace(parse_number(parts[0]), parse_number(parts[1]), static_cast<std::size_t>(n));
    }
    std::vector<double> values;
    for (const auto &p : split(text, ',')) {
        values.push_back(parse_number(p));
    }
    return values;
}

std::vector<ModelParams> parse_pairs(const std::string &text) {
    std::vector<ModelParams> pairs;
    for (const auto &item : split(text, ',')) {
        auto hk = split(item, ':');
        if (hk.size() != 2) {
            throw std::invalid_argument("pairs must look like 'h:k,h:k': '" + text + "'");
        }
        pairs.emplace_back(parse_number(hk[0]), parse_number(hk[1]));
    }
    if (pairs.empty()) {
        throw std::invalid_argument("pairs list is empty");
    }
    return pairs;
}

// "none", a preset name, "p", "p_q0,p_q1" (symmetric flips) or
// "p1|0_q0,p0|1_q0,p1|0_q1,p0|1_q1".
ReadoutNoise parse_noise(const std::string &text) {
    if (text == "none") {
        return {};
    }
    for (const auto &name : ReadoutNoise::preset_names()) {
        if (text == name) {
            return ReadoutNoise::preset(name);
        }
    }
    std::vector<double> p;
    try {
        for (const auto &item : split(text, ',')) {
            p.push_back(parse_number(item));
        }
    } catch (const std::invalid_argument &) {
        p.clear();
    }
    switch (p.size()) {
        case 1:
            return ReadoutNoise::symmetric(p[0], p[0]);
        case 2:
            return ReadoutNoise::symmetric(p[0], p[1]);
        case 4:
            return ReadoutNoise({p[0], p[1]}, {p[2], p[3]});
        default:
            break;
    }
    std::string names;
    for (const auto &name : ReadoutNoise::preset_names()) {
        names += name + ", ";
    }
    throw std::invalid_argument("unknown noise '" + text + "' (expected none, " + names +
                                "or 1, 2 or 4 comma separated probabilities)");
}

std::optional<MitigationMethod> parse_mitigation(const std::string &text) {
    if (text == "none") {
        return std::nullopt;
    }
    return parse_method(text);
}

enum class Format { csv, json };

Format resolve_format(const Options &o, Format fallback) {
    if (!o.format) {
        return fallback;
    }
    if (*o.format == "csv") {
        return Format::csv;
    }
    if (*o.format == "json") {
        return Format::json;
    }
    throw std::invalid_argument("unknown format '" + *o.format + "' (expected csv or json)");
}

void require_json(const Options &o, const char *command) {
    if (resolve_format(o, Format::json) != Format::json) {
        throw std::invalid_argument(std::string(command) + " only writes JSON");
    }
}

void require_shots(std::uint64_t shots, const char *what) {
    if (shots == 0) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

ModelParams params_of(const Options &o) {
    return {o.h.value_or(1.0), o.k.value_or(1.0)};
}

JsonObject estimate_json(double mean, double std_error) {
    return JsonObject().number("mean", mean).number("std_error", std_error);
}

JsonObject header(std::string_view command) {
    JsonObject root;
    root.integer("schema_version", io::kSchemaVersion).string("command", command);
    return root;
}

JsonObject run_config_json(const Options &o, const ModelParams &p, MeasurementTarget target, const std::string &noise) {
    return JsonObject()
        .number("h", p.h())
        .number("k", p.k())
        .string("target", target_name(target))
        .string("mode", o.mode)
        .integer("shots", o.shots)
        .integer("seed", o.seed)
        .string("noise", noise)
        .string("mitigation", o.mitigation);
}

std::vector<JsonObject> counts_list(const EstimationResult &r) {
    std::vector<JsonObject> list;
    for (const auto &c : r.raw_counts) {
        list.push_back(io::counts_json(c));
    }
    return list;
}

std::string cmd_run(const Options &o) {
    require_json(o, "run");
    require_shots(o.shots, "shots");
    const ModelParams p = params_of(o);
    const MeasurementTarget target = parse_target(o.target.value_or("V"));
    const ProtocolMode mode = parse_mode(o.mode);
    const std::string noise_name = o.noise.value_or("none");
    const ReadoutNoise noise = parse_noise(noise_name);
    const auto method = parse_mitigation(o.mitigation);

    const double analytic = analytic_value(p, target);
    JsonObject result;
    result.number("analytic", analytic);
    EstimationResult final;
    std::optional<EstimationResult> unmitigated;
    if (noise.is_zero()) {
        final = run_protocol(p, target, mode, o.shots, o.seed);
    } else {
        const std::uint64_t cal_shots = o.calibration_shots.value_or(o.shots);
        require_shots(cal_shots, "calibration shots");
        MitigatedRun run = run_with_mitigation(p, target, mode, o.shots, o.seed, noise, method, cal_shots);
        final = run.mitigated;
        unmitigated = run.unmitigated;
    }
    result.number("mean", final.mean).number("std_error", final.std_error);
    if (final.std_error > 0) {
        result.number("deviation_sigma", (final.mean - analytic) / final.std_error);
    }
    result.integer("n_shots", final.n_shots);
    if (unmitigated) {
        result.object("unmitigated", estimate_json(unmitigated->mean, unmitigated->std_error));
    }
    result.array("counts", counts_list(unmitigated ? *unmitigated : final));

    return header("run").object("config", run_config_json(o, p, target, noise_name)).object("result", result).str();
}

std::string cmd_sweep(const Options &o) {
    SweepGrid grid{parse_axis(o.grid_h), parse_axis(o.grid_k)};
    const auto cells = heatmap(grid);
    if (resolve_format(o, Format::csv) == Format::csv) {
        std::ostringstream os;
        io::write_heatmap_csv(os, cells);
        return os.str();
    }
    std::vector<JsonObject> items;
    for (const auto &c : cells) {
        items.push_back(JsonObject().number("h", c.h).number("k", c.k).number("V", c.v).number("H1", c.h1));
    }
    return header("sweep").array("cells", items).str();
}

std::string cmd_evolve(const Options &o) {
    const ModelParams p = params_of(o);
    const double t_max = o.t_max.value_or(2 * std::numbers::pi / p.k());
    if (!(t_max >= 0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("t-max must be finite and nonnegative");
    }
    if (o.t_steps == 0) {
        throw std::invalid_argument("t-steps must be positive");
    }
    const auto times = linspace(0, t_max, o.t_steps);
    const auto rows = evolution_scan(p, times);
    if (resolve_format(o, Format::csv) == Format::csv) {
        std::ostringstream os;
        io::write_evolution_csv(os, rows);
        return os.str();
    }
    std::vector<JsonObject> items;
    for (const auto &r : rows) {
        items.push_back(JsonObject()
                            .number("t", r.t)
                            .number("H1_numeric", r.h1_numeric)
                            .number("H1_closed_form", r.h1_closed_form)
                            .number("V_numeric", r.v_numeric));
    }
    JsonObject config = JsonObject().number("h", p.h()).number("k", p.k()).number("t_max", t_max).integer("t_steps", o.t_steps);
    return header("evolve").object("config", config).array("rows", items).str();
}

std::string cmd_report(const Options &o) {
    ReportConfig config;
    config.pairs = o.pairs ? parse_pairs(*o.pairs) : reference_pairs();
    require_shots(o.shots, "shots");
    config.shots = o.shots;
    config.calibration_shots = o.calibration_shots.value_or(o.shots);
    require_shots(config.calibration_shots, "calibration shots");
    config.seed = o.seed;
    config.mode = parse_mode(o.mode);
    const std::string noise_name = o.noise.value_or("lima-like");
    config.noise = parse_noise(noise_name);
    config.mitigation = parse_mitigation(o.mitigation);

    const auto rows = comparison_report(config);
    if (resolve_format(o, Format::csv) == Format::csv) {
        std::ostringstream os;
        io::write_report_csv(os, rows);
        return os.str();
    }
    std::vector<JsonObject> pairs;
    for (const auto &p : config.pairs) {
        pairs.push_back(JsonObject().number("h", p.h()).number("k", p.k()));
    }
    JsonObject echo = JsonObject()
                          .array("pairs", pairs)
                          .string("mode", o.mode)
                          .integer("shots", config.shots)
                          .integer("calibration_shots", config.calibration_shots)
                          .integer("seed", config.seed)
                          .string("noise", noise_name)
                          .string("mitigation", o.mitigation);
    return io::report_json(rows, echo);
}

std::string cmd_mitigate_demo(const Options &o) {
    require_json(o, "mitigate-demo");
    require_shots(o.shots, "shots");
    const ModelParams p = params_of(o);
    const MeasurementTarget target = parse_target(o.target.value_or("V"));
    if (target == MeasurementTarget::E1) {
        throw std::invalid_argument("mitigate-demo needs a single-circuit target (E0, H1 or V)");
    }
    const ProtocolMode mode = parse_mode(o.mode);
    const std::string noise_name = o.noise.value_or("lima-like");
    const ReadoutNoise noise = parse_noise(noise_name);
    const auto method = parse_mitigation(o.mitigation);
    const std::uint64_t cal_shots = o.calibration_shots.value_or(o.shots);
    require_shots(cal_shots, "calibration shots");

    const CalibrationMatrix calibration = run_calibration(noise, cal_shots, derive_seed(o.seed, 1000));
    const MitigatedRun run = run_with_mitigation(p, target, mode, o.shots, o.seed, noise, method, calibration);
    const Counts &counts = run.unmitigated.raw_counts.front();
    const Distribution observed = frequencies(counts);
    const Distribution corrected = method ? mitigate(counts, calibration, *method) : observed;

    JsonObject cal = JsonObject()
                         .object("matrix", io::calibration_json(calibration))
                         .object("exact_matrix", io::calibration_json(CalibrationMatrix::from_noise(noise)))
                         .number("fidelity", calibration.fidelity())
                         .number("condition_number", calibration.condition_number())
                         .integer("shots_per_circuit", cal_shots);
    JsonObject result = JsonObject()
                            .number("analytic", analytic_value(p, target))
                            .object("counts", io::counts_json(counts))
                            .object("observed", io::distribution_json(observed))
                            .object("mitigated_distribution", io::distribution_json(corrected))
                            .object("unmitigated", estimate_json(run.unmitigated.mean, run.unmitigated.std_error))
                            .object("mitigated", estimate_json(run.mitigated.mean, run.mitigated.std_error));
    JsonObject config = run_config_json(o, p, target, noise_name);
    return header("mitigate-demo").object("config", config).object("calibration", cal).object("result", result).str();
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out) {
        std::ofstream file(*o.out, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open output file '" + *o.out + "'");
        }
        file << text;
        if (!file) {
            throw std::invalid_argument("failed writing output file '" + *o.out + "'");
        }
    }
    out << text;
}

}  // namespace

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Two-qubit quantum energy teleportation simulator", "qet"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_config("--config", "", "Flat key = value configuration file; flags override it");
    app.require_subcommand(1);

    app.add_option("--h", o.h, "Local field strength h > 0 (default 1)");
    app.add_option("--k", o.k, "Interaction strength k > 0 (default 1)");
    app.add_option("--target", o.target, "E0, H1, V or E1 (default V)");
    app.add_option("--mode", o.mode, "conditional or deferred")->capture_default_str();
    app.add_option("--shots", o.shots, "Shots per circuit")->capture_default_str();
    app.add_option("--calibration-shots", o.calibration_shots, "Shots per calibration circuit (default: --shots)");
    app.add_option("--seed", o.seed, "RNG seed")->envname("QET_SEED")->capture_default_str();
    app.add_option("--noise", o.noise, "none, a preset name, or flip probabilities");
    app.add_option("--mitigation", o.mitigation, "none, direct or least-squares")->capture_default_str();
    app.add_option("--out", o.out, "Also write the output to this file");
    app.add_option("--grid-h", o.grid_h, "h axis: lo:hi:n or a comma separated list")->capture_default_str();
    app.add_option("--grid-k", o.grid_k, "k axis: lo:hi:n or a comma separated list")->capture_default_str();
    app.add_option("--t-max", o.t_max, "End of the time range (default 2 pi / k)");
    app.add_option("--t-steps", o.t_steps, "Number of time points")->capture_default_str();
    app.add_option("--format", o.format, "csv or json");
    app.add_option("--pairs", o.pairs, "Comma separated h:k pairs (default: the four reference pairs)");

    auto *run = app.add_subcommand("run", "Sample one target and compare with its analytic value (JSON)");
    auto *sweep = app.add_subcommand("sweep", "Closed-form <V> and <H1> over an (h, k) grid (CSV)");
    auto *evolve = app.add_subcommand("evolve", "Free evolution after Alice's measurement (CSV)");
    auto *report = app.add_subcommand("report", "Analytic, noiseless, unmitigated and mitigated comparison table");
    auto *demo = app.add_subcommand("mitigate-demo", "Calibration and readout mitigation walk-through (JSON)");
    for (auto *sub : {run, sweep, evolve, report, demo}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        std::string text;
        if (run->parsed()) {
            text = cmd_run(o);
        } else if (sweep->parsed()) {
            text = cmd_sweep(o);
        } else if (evolve->parsed()) {
            text = cmd_evolve(o);
        } else if (report->parsed()) {
            text = cmd_report(o);
        } else {
            text = cmd_mitigate_demo(o);
        }
        emit(o, text, out);
    } catch (const NumericalError &e) {
        err << "qet: numerical failure: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::invalid_argument &e) {
        err << "qet: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "qet: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

}  // namespace qet::cli
