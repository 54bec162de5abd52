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
// Numerical self-checks: a fast, deterministic battery of the model's core
// identities, runnable on any install to confirm the build computes what it
// should. The full property suite lives in the test tree; this battery is
// the subset wired to the command-line `validate` subcommand.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rispath/constants.hpp"
#include "rispath/csv.hpp"
#include "rispath/experiments.hpp"
#include "rispath/farfield.hpp"
#include "rispath/link.hpp"
#include "rispath/pattern.hpp"
#include "rispath/strategies.hpp"

namespace rispath {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string fmt_sci(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << x;
    return ss.str();
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline Scenario random_small_scenario(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> side(2, 5);
    std::uniform_real_distribution<double> lam(0.05, 1.0);
    std::uniform_real_distribution<double> spacing(0.4, 0.6);
    std::uniform_real_distribution<double> range(5.0, 50.0);
    std::uniform_real_distribution<double> angle(0.0, 80.0 * deg_to_rad);
    std::uniform_real_distribution<double> azim(0.0, two_pi);
    std::uniform_real_distribution<double> eff(0.1, 1.0);
    std::uniform_real_distribution<double> qdist(0.0, 2.0);
    std::uniform_real_distribution<double> gaindist(0.5, 4.0);

    Scenario sc;
    sc.wavelength_m = lam(rng);
    sc.tx_power_w = gaindist(rng);
    sc.tx_gain = gaindist(rng);
    sc.rx_gain = gaindist(rng);
    sc.efficiency = eff(rng);
    sc.pattern = pattern_from_exponent(qdist(rng));
    sc.ris = build_square_grid(side(rng), side(rng), spacing(rng) * sc.wavelength_m);
    sc.tx = terminal_from_polar(range(rng) * sc.wavelength_m, angle(rng), azim(rng));
    sc.rx = terminal_from_polar(range(rng) * sc.wavelength_m, angle(rng), azim(rng));
    return sc;
}

inline CoefficientSet random_phases(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> ph(0.0, two_pi);
    CoefficientSet c;
    c.strategy = Strategy::custom;
    c.values.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        c.values[k] = std::polar(1.0, ph(rng));
    return c;
}

} // namespace detail

inline std::vector<CheckResult> run_self_checks() {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(0x5eedULL);
    const auto report = [&](const std::string &name, bool pass, const std::string &detail) {
        results.push_back({name, pass, detail});
    };

    // 1. The element pattern radiates 4 pi steradian-watts per unit peak
    //    input regardless of its exponent.
    {
        double worst = 0.0;
        for (double q : {0.0, benchmark_exponent, 1.5}) {
            const double integral = radiated_power_integral(pattern_from_exponent(q));
            worst = std::max(worst, detail::rel_diff(integral, four_pi));
        }
        report("pattern power conservation", worst < 1e-6,
               "max relative deviation from 4pi: " + detail::fmt_sci(worst));
    }

    // 2. Broadside area form equals flat-plate scattering exactly.
    {
        std::uniform_real_distribution<double> dist(0.1, 1000.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double a = dist(rng), ri = dist(rng), rs = dist(rng);
            worst = std::max(worst, detail::rel_diff(far_path_loss_area(a, ri, rs, 1.0, 1.0),
                                                     plate_path_loss(a, ri, rs)));
        }
        report("flat-plate identity", worst < 1e-14,
               "max relative difference: " + detail::fmt_sci(worst));
    }

    // 3. Radar range equation with the plate RCS reproduces the plate loss.
    {
        std::uniform_real_distribution<double> dist(0.1, 100.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double a = dist(rng), ri = dist(rng), rs = dist(rng), lam = 0.01 * dist(rng);
            const double sigma = plate_rcs(a, lam);
            const double radar = (lam * lam) * sigma /
                                 ((four_pi * four_pi * four_pi) *
                                  ((ri * ri) * (rs * rs)));
            worst = std::max(worst, detail::rel_diff(radar, plate_path_loss(a, ri, rs)));
        }
        report("radar range equation consistency", worst < 1e-14,
               "max relative difference: " + detail::fmt_sci(worst));
    }

    // 4. The consolidated loss equals the per-element power/phase chain.
    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Scenario sc = detail::random_small_scenario(rng);
            const CoefficientSet coeffs = detail::random_phases(sc.ris.size(), rng);
            const PathLossResult res = path_loss(sc, coeffs, true);
            std::complex<double> s{0.0, 0.0};
            for (std::size_t k = 0; k < res.per_element.size(); ++k)
                s += coeffs.values[k] * std::polar(std::sqrt(res.per_element[k].power_w),
                                                   res.per_element[k].phase_rad);
            worst = std::max(worst, detail::rel_diff(std::norm(s), res.received_power_w));
        }
        report("per-element chain equivalence", worst < 1e-12,
               "max relative difference: " + detail::fmt_sci(worst));
    }

    // 5. Exchanging the terminals reproduces the loss bit for bit.
    {
        bool pass = true;
        for (int i = 0; i < 20 && pass; ++i) {
            Scenario sc = detail::random_small_scenario(rng);
            const CoefficientSet coeffs = focusing_coefficients(sc);
            const double a = path_loss(sc, coeffs).inverse_loss;
            std::swap(sc.tx, sc.rx);
            const double b = path_loss(sc, coeffs).inverse_loss;
            pass = (a == b);
        }
        report("terminal reciprocity", pass,
               pass ? "bit-identical under tx/rx exchange" : "losses differ");
    }

    // 6. Focusing upper-bounds every unit-modulus coefficient choice.
    {
        bool pass = true;
        const Scenario sc = detail::random_small_scenario(rng);
        const double best = path_loss(sc, focusing_coefficients(sc)).inverse_loss;
        for (int i = 0; i < 50 && pass; ++i)
            pass = path_loss(sc, detail::random_phases(sc.ris.size(), rng)).inverse_loss <=
                   best * (1.0 + 1e-12);
        report("focusing dominance", pass,
               pass ? "no random phase draw beat focusing" : "a random draw beat focusing");
    }

    // 7. A global phase on the coefficients cannot change the power.
    {
        const Scenario sc = detail::random_small_scenario(rng);
        CoefficientSet coeffs = detail::random_phases(sc.ris.size(), rng);
        const double before = path_loss(sc, coeffs).inverse_loss;
        const std::complex<double> rot = std::polar(1.0, 1.234);
        for (auto &v : coeffs.values)
            v *= rot;
        const double after = path_loss(sc, coeffs).inverse_loss;
        const double diff = detail::rel_diff(before, after);
        report("global phase invariance", diff < 1e-12,
               "relative change: " + detail::fmt_sci(diff));
    }

    // 8. The exact engine approaches the far closed form at long range.
    {
        FarScenario fs;
        fs.r_i_m = 1000.0;
        fs.r_s_m = 1000.0;
        fs.u_i = 1.0;
        fs.u_s = 1.0;
        fs.wavelength_m = 1.0;
        fs.n_elements = 400.0; // 20 x 20 at lambda/2

        Scenario sc;
        sc.wavelength_m = 1.0;
        sc.ris = build_square_grid(20, 20, 0.5);
        sc.tx = terminal_from_position({0.0, 0.0, 1000.0});
        sc.rx = terminal_from_position({0.0, 0.0, 1000.0});
        const double exact_db = path_loss(sc, focusing_coefficients(sc)).loss_db;
        const double far_db = -10.0 * std::log10(far_path_loss_focused(fs));
        const double diff = std::abs(exact_db - far_db);
        report("far-form convergence", diff < 0.5,
               "exact vs closed form at 1000 lambda: " + detail::fmt_sci(diff) + " dB");
    }

    // 9. The specular ratio is the free-space/area-form quotient.
    {
        std::uniform_real_distribution<double> dist(1.0, 500.0);
        std::uniform_real_distribution<double> u(0.1, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            FarScenario fs;
            fs.r_i_m = dist(rng);
            fs.r_s_m = dist(rng);
            fs.u_i = u(rng);
            fs.u_s = u(rng);
            fs.wavelength_m = 0.01 * dist(rng);
            fs.efficiency = u(rng);
            fs.area_m2 = dist(rng);
            const double direct = specular_ratio(fs);
            const double composed =
                free_space_loss(fs.r_i_m + fs.r_s_m, fs.wavelength_m) *
                far_path_loss_area(*fs.area_m2, fs.r_i_m, fs.r_s_m, fs.u_i, fs.u_s, fs.q,
                                   fs.efficiency);
            worst = std::max(worst, detail::rel_diff(direct, composed));
        }
        report("specular ratio composition", worst < 1e-12,
               "max relative difference: " + detail::fmt_sci(worst));
    }

    // 10. The sizing rule sits exactly on the break-even point.
    {
        std::uniform_real_distribution<double> dist(1.0, 500.0);
        std::uniform_real_distribution<double> u(0.1, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double ri = dist(rng), rs = dist(rng), lam = 0.01 * dist(rng);
            const double ui = u(rng), us = u(rng), eps = u(rng);
            const RequiredArea req =
                required_area(effective_focal_length(ri, rs), lam, ui, us, eps);
            FarScenario fs;
            fs.r_i_m = ri;
            fs.r_s_m = rs;
            fs.u_i = ui;
            fs.u_s = us;
            fs.wavelength_m = lam;
            fs.efficiency = eps;
            fs.area_m2 = req.area_m2;
            worst = std::max(worst, std::abs(specular_ratio(fs) - 1.0));
        }
        report("sizing rule break-even", worst < 1e-12,
               "max |ratio - 1|: " + detail::fmt_sci(worst));
    }

    // 11. Electrical side length scales as 1/sqrt(lambda) at fixed focal length.
    {
        const RequiredArea a = required_area(250.0, 0.4, 0.7, 0.9, 0.6);
        const RequiredArea b = required_area(250.0, 0.2, 0.7, 0.9, 0.6);
        const double diff = detail::rel_diff(b.side_lambda / a.side_lambda, std::sqrt(2.0));
        report("electrical size scaling", diff < 1e-12,
               "halved wavelength changes electrical side by sqrt(2) +/- " +
                   detail::fmt_sci(diff));
    }

    // 12. Sweeps are deterministic and thread-count independent.
    {
        SweepSpec spec;
        spec.wavelength_m = 1.0;
        spec.distances_m = {100.0};
        spec.angles_rad = {0.0, 45.0 * deg_to_rad};
        spec.elements_per_side = {4, 5, 6};
        spec.strategies = {SweepStrategy::focusing, SweepStrategy::beamforming,
                           SweepStrategy::far};
        const std::string a = sweep_csv(run_sweep(spec, 1));
        const std::string b = sweep_csv(run_sweep(spec, 3));
        report("sweep determinism", a == b,
               a == b ? "byte-identical CSV on 1 and 3 threads" : "CSV differs across threads");
    }

    return results;
}

inline bool all_passed(const std::vector<CheckResult> &results) {
    for (const CheckResult &r : results)
        if (!r.pass)
            return false;
    return true;
}

} // namespace rispath
