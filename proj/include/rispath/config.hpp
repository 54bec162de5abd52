// SPDX-License-Identifier: Apache-2.0
//
// rispath: physical path loss modelling for RIS-enabled radio channels
// Copyright (C) 2026 The rispath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// JSON configuration schema for scenarios and sweeps. Parsing is strict:
// unknown keys are rejected, every violation is reported with the dotted
// field path and a reason, and physically meaningless values never reach the
// engine. Scenario configs round-trip exactly through serialization.
//
// Scenario file keys:
//   wavelength_m | frequency_hz   exactly one
//   tx_power_w, tx_gain, rx_gain, efficiency   optional, defaults 1
//   pattern { q | broadside_gain_dbi }         optional, default q = 0.285
//   ris { rows, cols, spacing_over_lambda }    spacing optional, default 0.5
//   tx { r_m | r_lambda, psi_deg, azimuth_deg }  angles optional, default 0
//   rx { ... same shape ... }
//   strategy   focusing | beamforming | uniform | custom, default focusing
//
// Sweep file keys:
//   wavelength_m | frequency_hz   exactly one
//   efficiency, pattern           optional, as above
//   sweep {
//     r_m | r_lambda              number or array, exactly one form
//     psi_s_deg                   number or array
//     side_lambda                 array of sides or { from, to, step }
//     strategies                  array from {focusing, beamforming, far}
//     normalization               optional, default free_space_equal_length
//     azimuth_deg                 optional, default 0
//     max_elements_per_side       optional, default 400
//   }

#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rispath/coefficients.hpp"
#include "rispath/constants.hpp"
#include "rispath/errors.hpp"
#include "rispath/experiments.hpp"
#include "rispath/geometry.hpp"
#include "rispath/link.hpp"
#include "rispath/pattern.hpp"

namespace rispath {

namespace detail {

inline std::string join_path(const std::string &base, const std::string &key) {
    return base.empty() ? key : base + "." + key;
}

inline void require_object(const nlohmann::json &v, const std::string &path) {
    if (!v.is_object())
        throw config_error(path.empty() ? "(root)" : path, "expected an object");
}

inline void reject_unknown_keys(const nlohmann::json &obj, const std::string &path,
                                std::initializer_list<const char *> allowed) {
    for (const auto &item : obj.items()) {
        bool known = false;
        for (const char *a : allowed)
            if (item.key() == a) {
                known = true;
                break;
            }
        if (!known)
            throw config_error(join_path(path, item.key()), "unknown key");
    }
}

inline double as_number(const nlohmann::json &v, const std::string &path) {
    if (!v.is_number())
        throw config_error(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw config_error(path, "expected a finite number");
    return x;
}

inline double as_positive(const nlohmann::json &v, const std::string &path) {
    const double x = as_number(v, path);
    if (!(x > 0.0))
        throw config_error(path, "expected a positive number, got " + std::to_string(x));
    return x;
}

inline int as_positive_int(const nlohmann::json &v, const std::string &path) {
    if (!v.is_number_integer())
        throw config_error(path, "expected an integer");
    const long long x = v.get<long long>();
    if (x < 1 || x > 1000000000)
        throw config_error(path, "expected a positive integer, got " + std::to_string(x));
    return static_cast<int>(x);
}

inline std::string as_string(const nlohmann::json &v, const std::string &path) {
    if (!v.is_string())
        throw config_error(path, "expected a string");
    return v.get<std::string>();
}

// Accepts a single number or a non-empty array of numbers.
inline std::vector<double> as_number_list(const nlohmann::json &v, const std::string &path) {
    std::vector<double> out;
    if (v.is_number()) {
        out.push_back(as_number(v, path));
        return out;
    }
    if (!v.is_array() || v.empty())
        throw config_error(path, "expected a number or a non-empty array of numbers");
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline nlohmann::json parse_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw config_error(path, "cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw config_error(path, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Scenario configuration
// ---------------------------------------------------------------------------

struct PatternConfig {
    std::optional<double> q;
    std::optional<double> broadside_gain_dbi;

    bool operator==(const PatternConfig &) const = default;
};

struct RisConfig {
    int rows = 0;
    int cols = 0;
    double spacing_over_lambda = 0.5;

    bool operator==(const RisConfig &) const = default;
};

struct TerminalConfig {
    std::optional<double> r_m;
    std::optional<double> r_lambda;
    double psi_deg = 0.0;
    double azimuth_deg = 0.0;

    bool operator==(const TerminalConfig &) const = default;
};

struct ScenarioConfig {
    std::optional<double> wavelength_m;
    std::optional<double> frequency_hz;
    double tx_power_w = 1.0;
    double tx_gain = 1.0;
    double rx_gain = 1.0;
    double efficiency = 1.0;
    PatternConfig pattern;
    RisConfig ris;
    TerminalConfig tx;
    TerminalConfig rx;
    Strategy strategy = Strategy::focusing;

    bool operator==(const ScenarioConfig &) const = default;
};

namespace detail {

inline PatternConfig parse_pattern_config(const nlohmann::json &v, const std::string &path) {
    require_object(v, path);
    reject_unknown_keys(v, path, {"q", "broadside_gain_dbi"});
    PatternConfig out;
    if (v.contains("q"))
        out.q = as_number(v["q"], join_path(path, "q"));
    if (v.contains("broadside_gain_dbi"))
        out.broadside_gain_dbi =
            as_number(v["broadside_gain_dbi"], join_path(path, "broadside_gain_dbi"));
    if (out.q && out.broadside_gain_dbi)
        throw config_error(path, "give q or broadside_gain_dbi, not both");
    return out;
}

inline TerminalConfig parse_terminal_config(const nlohmann::json &v, const std::string &path) {
    require_object(v, path);
    reject_unknown_keys(v, path, {"r_m", "r_lambda", "psi_deg", "azimuth_deg"});
    TerminalConfig out;
    if (v.contains("r_m"))
        out.r_m = as_positive(v["r_m"], join_path(path, "r_m"));
    if (v.contains("r_lambda"))
        out.r_lambda = as_positive(v["r_lambda"], join_path(path, "r_lambda"));
    if (static_cast<bool>(out.r_m) == static_cast<bool>(out.r_lambda))
        throw config_error(path, "exactly one of r_m or r_lambda is required");
    if (v.contains("psi_deg")) {
        out.psi_deg = as_number(v["psi_deg"], join_path(path, "psi_deg"));
        if (!(out.psi_deg >= 0.0 && out.psi_deg < 90.0))
            throw config_error(join_path(path, "psi_deg"), "must lie in [0, 90)");
    }
    if (v.contains("azimuth_deg"))
        out.azimuth_deg = as_number(v["azimuth_deg"], join_path(path, "azimuth_deg"));
    return out;
}

inline void check_wavelength_keys(const nlohmann::json &root,
                                  const std::optional<double> &wavelength,
                                  const std::optional<double> &frequency) {
    (void)root;
    if (static_cast<bool>(wavelength) == static_cast<bool>(frequency))
        throw config_error("wavelength_m", "exactly one of wavelength_m or frequency_hz is "
                                           "required");
}

} // namespace detail

inline ScenarioConfig parse_scenario_config(const nlohmann::json &root) {
    detail::require_object(root, "");
    detail::reject_unknown_keys(root, "",
                                {"wavelength_m", "frequency_hz", "tx_power_w", "tx_gain",
                                 "rx_gain", "efficiency", "pattern", "ris", "tx", "rx",
                                 "strategy"});
    ScenarioConfig cfg;
    if (root.contains("wavelength_m"))
        cfg.wavelength_m = detail::as_positive(root["wavelength_m"], "wavelength_m");
    if (root.contains("frequency_hz"))
        cfg.frequency_hz = detail::as_positive(root["frequency_hz"], "frequency_hz");
    detail::check_wavelength_keys(root, cfg.wavelength_m, cfg.frequency_hz);

    if (root.contains("tx_power_w"))
        cfg.tx_power_w = detail::as_positive(root["tx_power_w"], "tx_power_w");
    if (root.contains("tx_gain"))
        cfg.tx_gain = detail::as_positive(root["tx_gain"], "tx_gain");
    if (root.contains("rx_gain"))
        cfg.rx_gain = detail::as_positive(root["rx_gain"], "rx_gain");
    if (root.contains("efficiency")) {
        cfg.efficiency = detail::as_positive(root["efficiency"], "efficiency");
        if (cfg.efficiency > 1.0)
            throw config_error("efficiency", "must lie in (0, 1]; a passive surface cannot "
                                             "re-radiate more power than it captures");
    }
    if (root.contains("pattern"))
        cfg.pattern = detail::parse_pattern_config(root["pattern"], "pattern");

    if (!root.contains("ris"))
        throw config_error("ris", "required object is missing");
    detail::require_object(root["ris"], "ris");
    detail::reject_unknown_keys(root["ris"], "ris", {"rows", "cols", "spacing_over_lambda"});
    if (!root["ris"].contains("rows"))
        throw config_error("ris.rows", "required key is missing");
    if (!root["ris"].contains("cols"))
        throw config_error("ris.cols", "required key is missing");
    cfg.ris.rows = detail::as_positive_int(root["ris"]["rows"], "ris.rows");
    cfg.ris.cols = detail::as_positive_int(root["ris"]["cols"], "ris.cols");
    if (root["ris"].contains("spacing_over_lambda"))
        cfg.ris.spacing_over_lambda =
            detail::as_positive(root["ris"]["spacing_over_lambda"], "ris.spacing_over_lambda");

    if (!root.contains("tx"))
        throw config_error("tx", "required object is missing");
    if (!root.contains("rx"))
        throw config_error("rx", "required object is missing");
    cfg.tx = detail::parse_terminal_config(root["tx"], "tx");
    cfg.rx = detail::parse_terminal_config(root["rx"], "rx");

    if (root.contains("strategy"))
        cfg.strategy = parse_strategy(detail::as_string(root["strategy"], "strategy"));
    return cfg;
}

inline ScenarioConfig load_scenario_config(const std::string &path) {
    return parse_scenario_config(detail::parse_json_file(path));
}

inline double resolved_wavelength(const std::optional<double> &wavelength_m,
                                  const std::optional<double> &frequency_hz) {
    if (wavelength_m)
        return *wavelength_m;
    return speed_of_light_m_s / *frequency_hz;
}

inline Scenario build_scenario(const ScenarioConfig &cfg) {
    Scenario sc;
    sc.wavelength_m = resolved_wavelength(cfg.wavelength_m, cfg.frequency_hz);
    sc.tx_power_w = cfg.tx_power_w;
    sc.tx_gain = cfg.tx_gain;
    sc.rx_gain = cfg.rx_gain;
    sc.efficiency = cfg.efficiency;
    if (cfg.pattern.q)
        sc.pattern = pattern_from_exponent(*cfg.pattern.q);
    else if (cfg.pattern.broadside_gain_dbi)
        sc.pattern = pattern_from_broadside_gain(std::pow(10.0, *cfg.pattern.broadside_gain_dbi / 10.0));
    else
        sc.pattern = benchmark_pattern();
    sc.ris = build_square_grid(cfg.ris.rows, cfg.ris.cols,
                               cfg.ris.spacing_over_lambda * sc.wavelength_m);
    const auto place = [&](const TerminalConfig &t) {
        const double r = t.r_m ? *t.r_m : *t.r_lambda * sc.wavelength_m;
        return terminal_from_polar(r, t.psi_deg * deg_to_rad, t.azimuth_deg * deg_to_rad);
    };
    sc.tx = place(cfg.tx);
    sc.rx = place(cfg.rx);
    return sc;
}

inline nlohmann::json scenario_config_to_json(const ScenarioConfig &cfg) {
    nlohmann::json j = nlohmann::json::object();
    if (cfg.wavelength_m)
        j["wavelength_m"] = *cfg.wavelength_m;
    if (cfg.frequency_hz)
        j["frequency_hz"] = *cfg.frequency_hz;
    j["tx_power_w"] = cfg.tx_power_w;
    j["tx_gain"] = cfg.tx_gain;
    j["rx_gain"] = cfg.rx_gain;
    j["efficiency"] = cfg.efficiency;
    if (cfg.pattern.q || cfg.pattern.broadside_gain_dbi) {
        nlohmann::json p = nlohmann::json::object();
        if (cfg.pattern.q)
            p["q"] = *cfg.pattern.q;
        if (cfg.pattern.broadside_gain_dbi)
            p["broadside_gain_dbi"] = *cfg.pattern.broadside_gain_dbi;
        j["pattern"] = p;
    }
    j["ris"] = {{"rows", cfg.ris.rows},
                {"cols", cfg.ris.cols},
                {"spacing_over_lambda", cfg.ris.spacing_over_lambda}};
    const auto terminal = [](const TerminalConfig &t) {
        nlohmann::json o = nlohmann::json::object();
        if (t.r_m)
            o["r_m"] = *t.r_m;
        if (t.r_lambda)
            o["r_lambda"] = *t.r_lambda;
        o["psi_deg"] = t.psi_deg;
        o["azimuth_deg"] = t.azimuth_deg;
        return o;
    };
    j["tx"] = terminal(cfg.tx);
    j["rx"] = terminal(cfg.rx);
    j["strategy"] = to_string(cfg.strategy);
    return j;
}

inline std::string serialize_scenario_config(const ScenarioConfig &cfg) {
    return scenario_config_to_json(cfg).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Sweep configuration
// ---------------------------------------------------------------------------

struct SideRange {
    double from_lambda = 0.0;
    double to_lambda = 0.0;
    double step_lambda = 0.0;

    bool operator==(const SideRange &) const = default;
};

struct SweepConfig {
    std::optional<double> wavelength_m;
    std::optional<double> frequency_hz;
    double efficiency = 1.0;
    PatternConfig pattern;

    std::vector<double> r_m;      // exactly one of r_m / r_lambda is non-empty
    std::vector<double> r_lambda;
    std::vector<double> psi_s_deg;
    std::vector<double> side_lambda_list; // explicit sides, or
    std::optional<SideRange> side_range;  // a generated range
    std::vector<std::string> strategies;
    std::string normalization = "free_space_equal_length";
    double azimuth_deg = 0.0;
    int max_elements_per_side = 400;

    bool operator==(const SweepConfig &) const = default;
};

inline SweepConfig parse_sweep_config(const nlohmann::json &root) {
    detail::require_object(root, "");
    detail::reject_unknown_keys(root, "",
                                {"wavelength_m", "frequency_hz", "efficiency", "pattern",
                                 "sweep"});
    SweepConfig cfg;
    if (root.contains("wavelength_m"))
        cfg.wavelength_m = detail::as_positive(root["wavelength_m"], "wavelength_m");
    if (root.contains("frequency_hz"))
        cfg.frequency_hz = detail::as_positive(root["frequency_hz"], "frequency_hz");
    detail::check_wavelength_keys(root, cfg.wavelength_m, cfg.frequency_hz);
    if (root.contains("efficiency")) {
        cfg.efficiency = detail::as_positive(root["efficiency"], "efficiency");
        if (cfg.efficiency > 1.0)
            throw config_error("efficiency", "must lie in (0, 1]; a passive surface cannot "
                                             "re-radiate more power than it captures");
    }
    if (root.contains("pattern"))
        cfg.pattern = detail::parse_pattern_config(root["pattern"], "pattern");

    if (!root.contains("sweep"))
        throw config_error("sweep", "required object is missing");
    const nlohmann::json &sw = root["sweep"];
    detail::require_object(sw, "sweep");
    detail::reject_unknown_keys(sw, "sweep",
                                {"r_m", "r_lambda", "psi_s_deg", "side_lambda", "strategies",
                                 "normalization", "azimuth_deg", "max_elements_per_side"});

    if (sw.contains("r_m"))
        cfg.r_m = detail::as_number_list(sw["r_m"], "sweep.r_m");
    if (sw.contains("r_lambda"))
        cfg.r_lambda = detail::as_number_list(sw["r_lambda"], "sweep.r_lambda");
    if (cfg.r_m.empty() == cfg.r_lambda.empty())
        throw config_error("sweep", "exactly one of r_m or r_lambda is required");

    if (!sw.contains("psi_s_deg"))
        throw config_error("sweep.psi_s_deg", "required key is missing");
    cfg.psi_s_deg = detail::as_number_list(sw["psi_s_deg"], "sweep.psi_s_deg");
    for (double a : cfg.psi_s_deg)
        if (!(a >= 0.0 && a < 90.0))
            throw config_error("sweep.psi_s_deg", "angles must lie in [0, 90) degrees, got " +
                                                      std::to_string(a));

    if (!sw.contains("side_lambda"))
        throw config_error("sweep.side_lambda", "required key is missing");
    const nlohmann::json &sides = sw["side_lambda"];
    if (sides.is_object()) {
        detail::reject_unknown_keys(sides, "sweep.side_lambda", {"from", "to", "step"});
        for (const char *k : {"from", "to", "step"})
            if (!sides.contains(k))
                throw config_error(detail::join_path("sweep.side_lambda", k),
                                   "required key is missing");
        SideRange r;
        r.from_lambda = detail::as_positive(sides["from"], "sweep.side_lambda.from");
        r.to_lambda = detail::as_positive(sides["to"], "sweep.side_lambda.to");
        r.step_lambda = detail::as_positive(sides["step"], "sweep.side_lambda.step");
        cfg.side_range = r;
    } else {
        cfg.side_lambda_list = detail::as_number_list(sides, "sweep.side_lambda");
    }

    if (!sw.contains("strategies"))
        throw config_error("sweep.strategies", "required key is missing");
    if (!sw["strategies"].is_array() || sw["strategies"].empty())
        throw config_error("sweep.strategies", "expected a non-empty array of strategy names");
    for (std::size_t i = 0; i < sw["strategies"].size(); ++i) {
        const std::string name = detail::as_string(
            sw["strategies"][i], "sweep.strategies[" + std::to_string(i) + "]");
        parse_sweep_strategy(name); // validates
        for (const std::string &seen : cfg.strategies)
            if (seen == name)
                throw config_error("sweep.strategies", "strategy \"" + name + "\" listed twice");
        cfg.strategies.push_back(name);
    }

    if (sw.contains("normalization")) {
        cfg.normalization = detail::as_string(sw["normalization"], "sweep.normalization");
        parse_normalization(cfg.normalization); // validates
    }
    if (sw.contains("azimuth_deg"))
        cfg.azimuth_deg = detail::as_number(sw["azimuth_deg"], "sweep.azimuth_deg");
    if (sw.contains("max_elements_per_side"))
        cfg.max_elements_per_side =
            detail::as_positive_int(sw["max_elements_per_side"], "sweep.max_elements_per_side");
    return cfg;
}

inline SweepConfig load_sweep_config(const std::string &path) {
    return parse_sweep_config(detail::parse_json_file(path));
}

inline SweepSpec build_sweep_spec(const SweepConfig &cfg) {
    SweepSpec spec;
    spec.wavelength_m = resolved_wavelength(cfg.wavelength_m, cfg.frequency_hz);
    spec.efficiency = cfg.efficiency;
    if (cfg.pattern.q)
        spec.pattern = pattern_from_exponent(*cfg.pattern.q);
    else if (cfg.pattern.broadside_gain_dbi)
        spec.pattern =
            pattern_from_broadside_gain(std::pow(10.0, *cfg.pattern.broadside_gain_dbi / 10.0));

    if (!cfg.r_m.empty()) {
        spec.distances_m = cfg.r_m;
    } else {
        spec.distances_m.reserve(cfg.r_lambda.size());
        for (double r : cfg.r_lambda)
            spec.distances_m.push_back(r * spec.wavelength_m);
    }
    spec.angles_rad.reserve(cfg.psi_s_deg.size());
    for (double a : cfg.psi_s_deg)
        spec.angles_rad.push_back(a * deg_to_rad);

    if (cfg.side_range) {
        spec.elements_per_side = expand_side_range(cfg.side_range->from_lambda,
                                                   cfg.side_range->to_lambda,
                                                   cfg.side_range->step_lambda);
    } else {
        spec.elements_per_side.reserve(cfg.side_lambda_list.size());
        for (double s : cfg.side_lambda_list)
            spec.elements_per_side.push_back(elements_for_side_lambda(s));
    }

    spec.strategies.reserve(cfg.strategies.size());
    for (const std::string &name : cfg.strategies)
        spec.strategies.push_back(parse_sweep_strategy(name));
    spec.normalization = parse_normalization(cfg.normalization);
    spec.azimuth_rad = cfg.azimuth_deg * deg_to_rad;
    spec.max_elements_per_side = cfg.max_elements_per_side;
    validate_sweep_spec(spec);
    return spec;
}

// ---------------------------------------------------------------------------
// Custom coefficient files
// ---------------------------------------------------------------------------

// One coefficient per line, "re" or "re,im", row-major element order.
// Blank lines and lines starting with '#' are skipped.
inline std::vector<std::complex<double>> load_coefficients_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw config_error(path, "cannot open file");
    std::vector<std::complex<double>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        const std::string where = path + ":" + std::to_string(line_no);
        std::istringstream ss(line.substr(start));
        double re = 0.0;
        double im = 0.0;
        if (!(ss >> re))
            throw config_error(where, "expected a number");
        char sep = 0;
        if (ss >> sep) {
            if (sep != ',')
                throw config_error(where, "expected ',' between real and imaginary parts");
            if (!(ss >> im))
                throw config_error(where, "expected an imaginary part after ','");
            if (ss >> sep)
                throw config_error(where, "trailing content after the imaginary part");
        }
        out.push_back({re, im});
    }
    if (out.empty())
        throw config_error(path, "no coefficients found");
    return out;
}

} // namespace rispath
