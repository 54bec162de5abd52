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
// Command-line front end.
//
//   rispath pathloss <scenario.json> [--coeffs file] [--per-element]
//   rispath sweep <sweep.json> --out <csv> [--threads N]
//   rispath tables [--case minimum|typical|both] [--out <csv>]
//   rispath size --freq <Hz> --fe <m> [--ui u] [--us u] [--eps e]
//   rispath validate
//
// Exit codes: 0 success, 2 configuration error, 3 resource cap exceeded,
// 4 numerical self-check failure.

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rispath/rispath.hpp"

namespace {

int run_pathloss(const std::string &scenario_path, const std::string &coeffs_path,
                 bool per_element) {
    const rispath::ScenarioConfig cfg = rispath::load_scenario_config(scenario_path);
    const rispath::Scenario sc = rispath::build_scenario(cfg);

    rispath::CoefficientSet coeffs;
    if (cfg.strategy == rispath::Strategy::custom) {
        if (coeffs_path.empty())
            throw rispath::config_error("strategy", "custom strategy requires --coeffs <file>");
        coeffs = rispath::custom_coefficients(rispath::load_coefficients_csv(coeffs_path));
    } else {
        if (!coeffs_path.empty())
            throw rispath::config_error("strategy",
                                        "--coeffs is only valid with strategy \"custom\"");
        coeffs = rispath::make_coefficients(sc, cfg.strategy);
    }

    const rispath::PathLossResult res = rispath::path_loss(sc, coeffs, per_element);
    const double r_i = rispath::norm(sc.tx.position);
    const double r_s = rispath::norm(sc.rx.position);
    const double fs_db = rispath::free_space_loss_db(r_i + r_s, sc.wavelength_m);

    std::printf("elements            : %d x %d (N = %zu)\n", sc.ris.rows, sc.ris.cols,
                sc.ris.size());
    std::printf("wavelength          : %.12g m\n", sc.wavelength_m);
    std::printf("element spacing     : %.12g m (%.12g lambda)\n", sc.ris.spacing_m,
                sc.ris.spacing_m / sc.wavelength_m);
    std::printf("pattern             : q = %.12g, broadside gain %.4f dBi\n", sc.pattern.q,
                rispath::broadside_gain_dbi(sc.pattern));
    std::printf("tx distance         : %.12g m\n", r_i);
    std::printf("rx distance         : %.12g m\n", r_s);
    std::printf("focal length        : %.12g m\n", rispath::effective_focal_length(r_i, r_s));
    std::printf("strategy            : %s\n", rispath::to_string(coeffs.strategy));
    std::printf("path loss           : %.6f dB\n", res.loss_db);
    std::printf("path gain (1/L)     : %.12g\n", res.inverse_loss);
    std::printf("received power      : %.12g W\n", res.received_power_w);
    std::printf("free space, 2 hops  : %.6f dB\n", fs_db);
    std::printf("gain vs free space  : %.6f dB\n", fs_db - res.loss_db);
    if (res.amplification_warning)
        std::printf("warning             : coefficients exceed unit magnitude (active surface)\n");
    if (per_element) {
        std::printf("n,power_w,phase_rad\n");
        for (std::size_t n = 0; n < res.per_element.size(); ++n)
            std::printf("%zu,%.12g,%.12g\n", n, res.per_element[n].power_w,
                        res.per_element[n].phase_rad);
    }
    return 0;
}

int run_sweep_cmd(const std::string &sweep_path, const std::string &out_path, int threads) {
    const rispath::SweepConfig cfg = rispath::load_sweep_config(sweep_path);
    const rispath::SweepSpec spec = rispath::build_sweep_spec(cfg);
    const std::vector<rispath::SweepRow> rows = rispath::run_sweep(spec, threads);
    rispath::write_text_file(out_path, rispath::sweep_csv(rows));
    std::printf("rows  : %zu\n", rows.size());
    std::printf("wrote : %s\n", out_path.c_str());
    return 0;
}

int run_tables(const std::string &case_name, const std::string &out_path) {
    std::vector<rispath::TableRow> rows;
    if (case_name == "both") {
        rows = rispath::make_table_rows(rispath::TableCase::minimum);
        const std::vector<rispath::TableRow> typ =
            rispath::make_table_rows(rispath::TableCase::typical);
        rows.insert(rows.end(), typ.begin(), typ.end());
    } else {
        rows = rispath::make_table_rows(rispath::parse_table_case(case_name));
    }
    const std::string csv = rispath::table_csv(rows);
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        rispath::write_text_file(out_path, csv);
        std::printf("rows  : %zu\n", rows.size());
        std::printf("wrote : %s\n", out_path.c_str());
    }
    return 0;
}

int run_size(double freq_hz, double fe_m, double u_i, double u_s, double eps) {
    if (!(freq_hz > 0.0))
        throw rispath::config_error("--freq", "frequency must be positive");
    const double lambda = rispath::speed_of_light_m_s / freq_hz;
    const rispath::RequiredArea req = rispath::required_area(fe_m, lambda, u_i, u_s, eps);
    std::printf("frequency           : %.12g Hz\n", freq_hz);
    std::printf("wavelength          : %.12g m\n", lambda);
    std::printf("focal length        : %.12g m\n", fe_m);
    if (req.degenerate) {
        std::printf("side                : 0 m (degenerate: zero focal length)\n");
        return 0;
    }
    std::printf("area                : %.12g m^2\n", req.area_m2);
    std::printf("side                : %.12g m (%.1f m rounded)\n", req.side_m,
                rispath::round_to_tenth(req.side_m));
    std::printf("side, electrical    : %.12g lambda (%.1f lambda rounded)\n", req.side_lambda,
                rispath::round_to_tenth(req.side_lambda));
    return 0;
}

int run_validate() {
    const std::vector<rispath::CheckResult> results = rispath::run_self_checks();
    for (const rispath::CheckResult &r : results)
        std::printf("[%s] %-34s %s\n", r.pass ? " ok " : "FAIL", r.name.c_str(),
                    r.detail.c_str());
    if (!rispath::all_passed(results)) {
        std::printf("self-check FAILED\n");
        return 4;
    }
    std::printf("all %zu checks passed\n", results.size());
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"rispath: path loss of a reconfigurable-surface radio link"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string coeffs_path;
    bool per_element = false;
    CLI::App *pathloss = app.add_subcommand("pathloss", "evaluate one scenario file");
    pathloss->add_option("scenario", scenario_path, "scenario JSON file")->required();
    pathloss->add_option("--coeffs", coeffs_path,
                         "CSV of per-element coefficients (strategy \"custom\")");
    pathloss->add_flag("--per-element", per_element, "also print per-element power and phase");

    std::string sweep_path;
    std::string sweep_out;
    int threads = 1;
    CLI::App *sweep = app.add_subcommand("sweep", "run a sweep file and write CSV");
    sweep->add_option("sweep", sweep_path, "sweep JSON file")->required();
    sweep->add_option("--out", sweep_out, "output CSV path")->required();
    sweep->add_option("--threads", threads, "worker threads (results are identical for any value)");

    std::string case_name = "both";
    std::string tables_out;
    CLI::App *tables = app.add_subcommand("tables", "surface sizing tables");
    tables->add_option("--case", case_name, "minimum, typical, or both (default both)");
    tables->add_option("--out", tables_out, "output CSV path (default stdout)");

    double freq_hz = 0.0;
    double fe_m = 0.0;
    double u_i = 1.0;
    double u_s = 1.0;
    double eps = 1.0;
    CLI::App *size = app.add_subcommand("size", "size a square surface to match free space");
    size->add_option("--freq", freq_hz, "carrier frequency in Hz")->required();
    size->add_option("--fe", fe_m, "effective focal length r_i r_s / (r_i + r_s) in m")
        ->required();
    size->add_option("--ui", u_i, "direction cosine toward the transmitter (default 1)");
    size->add_option("--us", u_s, "direction cosine toward the receiver (default 1)");
    size->add_option("--eps", eps, "re-radiation efficiency (default 1)");

    app.add_subcommand("validate", "run the numerical self-check battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("pathloss"))
            return run_pathloss(scenario_path, coeffs_path, per_element);
        if (app.got_subcommand("sweep"))
            return run_sweep_cmd(sweep_path, sweep_out, threads);
        if (app.got_subcommand("tables"))
            return run_tables(case_name, tables_out);
        if (app.got_subcommand("size"))
            return run_size(freq_hz, fe_m, u_i, u_s, eps);
        if (app.got_subcommand("validate"))
            return run_validate();
    } catch (const rispath::resource_limit_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
