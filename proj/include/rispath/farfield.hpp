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
// Closed forms for the far case, where every element shares the same hop
// distances (r_i, r_s) and direction cosines (u_i, u_s):
//
//   general   1/L = (lambda/4pi)^4 gamma^2 (u_i u_s)^{2q} |sum b_n e^{j phi}|^2 eps_p / (r_i^2 r_s^2)
//   focused   the above with |sum|^2 = N^2 (phase-aligned elements)
//   area      1/L = (A / 4pi r_i r_s)^2 (u_i u_s)^{2q} eps_p
//
// The general/focused forms keep the exact pattern constant gamma = 2(2q+1)
// so the exact link engine converges to them without bias. The area form
// replaces gamma by pi (its value at the benchmark exponent is 3.14), which
// makes it wavelength-free and exactly equal to flat-plate scattering at
// broadside; the two conventions differ by (gamma/pi)^2, about 0.1% (0.004 dB)
// at the benchmark exponent.
//
// Also here: the flat-plate and specular benchmarks, the effective focal
// length f_e = r_i r_s / (r_i + r_s), the specular-to-surface loss ratio, and
// the surface sizing rule A = f_e lambda / sqrt((u_i u_s)^{2q} eps_p).

#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "rispath/constants.hpp"
#include "rispath/errors.hpp"
#include "rispath/link.hpp"
#include "rispath/pattern.hpp"

namespace rispath {

// Far-case description. Element count N assumes half-wavelength spacing, so
// N and the physical area are interchangeable via A = N (lambda/2)^2; when
// both are given they must agree to 1e-12 relative.
struct FarScenario {
    double r_i_m = 0.0;
    double r_s_m = 0.0;
    double u_i = 1.0; // direction cosine toward the transmitter, in (0, 1]
    double u_s = 1.0; // direction cosine toward the receiver, in (0, 1]
    double wavelength_m = 0.0;
    double efficiency = 1.0;
    double q = benchmark_exponent;
    std::optional<double> n_elements; // count at lambda/2 spacing
    std::optional<double> area_m2;
};

inline void validate_far_scenario(const FarScenario &fs) {
    if (!(fs.r_i_m > 0.0) || !(fs.r_s_m > 0.0))
        throw model_domain_error("hop distances must be positive");
    if (!(fs.u_i > 0.0) || fs.u_i > 1.0 + cosine_slack || !(fs.u_s > 0.0) ||
        fs.u_s > 1.0 + cosine_slack)
        throw model_domain_error("direction cosines must lie in (0, 1]");
    if (!(fs.wavelength_m > 0.0))
        throw model_domain_error("wavelength must be positive");
    if (!(fs.efficiency > 0.0))
        throw model_domain_error("efficiency must be positive");
    if (fs.q < 0.0)
        throw model_domain_error("pattern exponent must be non-negative");
    if (fs.n_elements && !(*fs.n_elements > 0.0))
        throw model_domain_error("element count must be positive");
    if (fs.area_m2 && !(*fs.area_m2 > 0.0))
        throw model_domain_error("area must be positive");
    if (fs.n_elements && fs.area_m2) {
        const double cell = 0.5 * fs.wavelength_m;
        const double implied = *fs.n_elements * (cell * cell);
        const double scale = std::max(std::abs(implied), std::abs(*fs.area_m2));
        if (std::abs(implied - *fs.area_m2) > 1e-12 * scale)
            throw model_domain_error("element count and area disagree: N (lambda/2)^2 = " +
                                     std::to_string(implied) + " m^2 vs area " +
                                     std::to_string(*fs.area_m2) + " m^2");
    }
}

inline double far_element_count(const FarScenario &fs) {
    if (fs.n_elements)
        return *fs.n_elements;
    if (fs.area_m2) {
        const double cell = 0.5 * fs.wavelength_m;
        return *fs.area_m2 / (cell * cell);
    }
    throw model_domain_error("far scenario needs an element count or an area");
}

inline double far_area(const FarScenario &fs) {
    if (fs.area_m2)
        return *fs.area_m2;
    if (fs.n_elements) {
        const double cell = 0.5 * fs.wavelength_m;
        return *fs.n_elements * (cell * cell);
    }
    throw model_domain_error("far scenario needs an element count or an area");
}

// Far-case inverse loss for an arbitrary coefficient set, with the phase sum
// magnitude |sum_n b_n e^{j phi_n}|^2 supplied by the caller (it is at most
// N^2 for unit-modulus coefficients).
inline double far_path_loss_general(const FarScenario &fs, double coherent_sum_sq) {
    validate_far_scenario(fs);
    if (coherent_sum_sq < 0.0)
        throw std::invalid_argument("squared sum magnitude cannot be negative");
    const ElementPattern pat = pattern_from_exponent(fs.q);
    const double lf = fs.wavelength_m / four_pi;
    const double lf4 = (lf * lf) * (lf * lf);
    const double angular = std::pow(fs.u_i * fs.u_s, 2.0 * fs.q);
    const double num =
        ((lf4 * (pat.gamma * pat.gamma)) * angular) * (coherent_sum_sq * fs.efficiency);
    return num / ((fs.r_i_m * fs.r_i_m) * (fs.r_s_m * fs.r_s_m));
}

// Phase-aligned upper bound: the N^2 law.
inline double far_path_loss_focused(const FarScenario &fs) {
    const double n = far_element_count(fs);
    return far_path_loss_general(fs, n * n);
}

// Wavelength-free area form (gamma -> pi convention). Exactly equal to
// flat-plate scattering at broadside with unit efficiency.
inline double far_path_loss_area(double area_m2, double r_i_m, double r_s_m, double u_i,
                                 double u_s, double q = benchmark_exponent,
                                 double efficiency = 1.0) {
    if (!(area_m2 > 0.0))
        throw model_domain_error("area must be positive, got " + std::to_string(area_m2));
    if (!(r_i_m > 0.0) || !(r_s_m > 0.0))
        throw model_domain_error("hop distances must be positive");
    if (!(u_i > 0.0) || !(u_s > 0.0))
        throw divergence_error("direction cosines must be positive; the surface seen edge-on "
                               "reflects nothing");
    if (q < 0.0)
        throw model_domain_error("pattern exponent must be non-negative");
    const double a = area_m2 / (four_pi * (r_i_m * r_s_m));
    return ((a * a) * std::pow(u_i * u_s, 2.0 * q)) * efficiency;
}

// Broadside flat-plate benchmark, L^-1 = (A / 4pi r_i r_s)^2.
inline double plate_path_loss(double area_m2, double r_i_m, double r_s_m) {
    if (!(area_m2 > 0.0))
        throw model_domain_error("area must be positive, got " + std::to_string(area_m2));
    if (!(r_i_m > 0.0) || !(r_s_m > 0.0))
        throw model_domain_error("hop distances must be positive");
    const double a = area_m2 / (four_pi * (r_i_m * r_s_m));
    return a * a;
}

// Broadside monostatic radar cross section of a flat plate, sigma = 4 pi A^2 / lambda^2.
inline double plate_rcs(double area_m2, double wavelength_m) {
    if (!(area_m2 > 0.0))
        throw model_domain_error("area must be positive, got " + std::to_string(area_m2));
    if (!(wavelength_m > 0.0))
        throw model_domain_error("wavelength must be positive, got " +
                                 std::to_string(wavelength_m));
    return four_pi * ((area_m2 * area_m2) / (wavelength_m * wavelength_m));
}

// Thin-lens combination of the two hop distances.
inline double effective_focal_length(double r_i_m, double r_s_m) {
    if (!(r_i_m > 0.0) || !(r_s_m > 0.0))
        throw model_domain_error("hop distances must be positive");
    return (r_i_m * r_s_m) / (r_i_m + r_s_m);
}

// Ratio of the equal-length free-space loss to the surface loss,
// L_S / L_RIS = (A / f_e lambda)^2 (u_i u_s)^{2q} eps_p. Values above 1 mean
// the surface outperforms a free-space channel of the same total length.
inline double specular_ratio(const FarScenario &fs) {
    validate_far_scenario(fs);
    const double area = far_area(fs);
    const double fe = effective_focal_length(fs.r_i_m, fs.r_s_m);
    const double x = area / (fe * fs.wavelength_m);
    return ((x * x) * std::pow(fs.u_i * fs.u_s, 2.0 * fs.q)) * fs.efficiency;
}

struct RequiredArea {
    double area_m2 = 0.0;
    double side_m = 0.0;      // sqrt(area)
    double side_lambda = 0.0; // side in wavelengths
    bool degenerate = false;  // f_e = 0: the sizing rule collapses to a point
};

// Square-surface size at which the surface channel matches the equal-length
// free-space channel: A = f_e lambda / sqrt((u_i u_s)^{2q} eps_p).
inline RequiredArea required_area(double focal_length_m, double wavelength_m, double u_i = 1.0,
                                  double u_s = 1.0, double efficiency = 1.0,
                                  double q = benchmark_exponent) {
    if (!(focal_length_m >= 0.0) || !std::isfinite(focal_length_m))
        throw model_domain_error("focal length must be non-negative and finite, got " +
                                 std::to_string(focal_length_m));
    if (!(wavelength_m > 0.0))
        throw model_domain_error("wavelength must be positive, got " +
                                 std::to_string(wavelength_m));
    if (u_i == 0.0 || u_s == 0.0)
        throw divergence_error("a surface seen edge-on cannot match free space at any size");
    if (!(u_i > 0.0) || u_i > 1.0 + cosine_slack || !(u_s > 0.0) || u_s > 1.0 + cosine_slack)
        throw model_domain_error("direction cosines must lie in (0, 1]");
    if (!(efficiency > 0.0) || efficiency > 1.0 + cosine_slack)
        throw model_domain_error("efficiency must lie in (0, 1], got " +
                                 std::to_string(efficiency));
    if (q < 0.0)
        throw model_domain_error("pattern exponent must be non-negative");

    RequiredArea out;
    if (focal_length_m == 0.0) {
        out.degenerate = true;
        return out;
    }
    const double discount = std::sqrt(std::pow(u_i * u_s, 2.0 * q) * efficiency);
    out.area_m2 = (focal_length_m * wavelength_m) / discount;
    out.side_m = std::sqrt(out.area_m2);
    out.side_lambda = out.side_m / wavelength_m;
    return out;
}

} // namespace rispath
