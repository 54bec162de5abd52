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
// Exact two-hop link engine. Each element n contributes an electrically
// small scatterer path with power
//
//   P_Rn = P_T G_T G_R (lambda/4pi)^4 G_e(u_in) G_e(u_sn) eps_p / (r_in^2 r_sn^2)
//
// and unreduced propagation phase phi_n = 2pi (r_in + r_sn) / lambda. The
// received power is the coherent superposition
//
//   P_R = | sum_n b_n sqrt(P_Rn) exp(j phi_n) |^2
//
// and the path loss factors out the terminal gains and transmit power:
//
//   1/L = (lambda/4pi)^4 | sum_n b_n sqrt(G_e G_e / (r^2 r^2)) exp(j phi) |^2 eps_p.
//
// Every per-element expression is written symmetrically in the two hops so
// that exchanging the terminals reproduces the result bit for bit. Summation
// is sequential in element order with Neumaier compensation, so results do
// not depend on how callers schedule the surrounding work.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "rispath/coefficients.hpp"
#include "rispath/constants.hpp"
#include "rispath/errors.hpp"
#include "rispath/geometry.hpp"
#include "rispath/pattern.hpp"

namespace rispath {

// Compensated (Neumaier) accumulator: sequential adds, one running
// correction term. Used for every coherent sum in the engine.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct Scenario {
    double wavelength_m = 0.0;
    double tx_power_w = 1.0;
    double tx_gain = 1.0;     // linear
    double rx_gain = 1.0;     // linear
    double efficiency = 1.0;  // polarization/material mismatch factor eps_p
    bool allow_active = false;

    RisArray ris;
    ElementPattern pattern = benchmark_pattern();
    TerminalPlacement tx;
    TerminalPlacement rx;
};

inline void validate_scenario(const Scenario &sc) {
    if (!(sc.wavelength_m > 0.0) || !std::isfinite(sc.wavelength_m))
        throw std::invalid_argument("wavelength must be positive and finite, got " +
                                    std::to_string(sc.wavelength_m));
    if (!(sc.tx_power_w > 0.0) || !std::isfinite(sc.tx_power_w))
        throw std::invalid_argument("transmit power must be positive and finite, got " +
                                    std::to_string(sc.tx_power_w));
    if (!(sc.tx_gain >= 0.0) || !(sc.rx_gain >= 0.0))
        throw std::invalid_argument("terminal gains cannot be negative");
    if (!(sc.efficiency > 0.0) || !std::isfinite(sc.efficiency))
        throw std::invalid_argument("efficiency must be positive and finite, got " +
                                    std::to_string(sc.efficiency));
    if (sc.efficiency > 1.0 && !sc.allow_active)
        throw model_domain_error("efficiency above 1 re-radiates more power than arrives; set "
                                 "allow_active to model an amplifying surface");
    if (sc.ris.size() == 0)
        throw std::invalid_argument("surface has no elements");
    // Terminal placement relative to the surface plane is validated per
    // element in link_geometry(); this catches the gross cases early.
    if (!(dot(sc.tx.position, sc.ris.normal) > 0.0))
        throw geometry_error("transmitter must lie strictly on the front side of the surface");
    if (!(dot(sc.rx.position, sc.ris.normal) > 0.0))
        throw geometry_error("receiver must lie strictly on the front side of the surface");
}

// Unreduced propagation phase of the two-hop path through one element.
inline double path_phase(double r_i_m, double r_s_m, double wavelength_m) {
    return two_pi * (r_i_m + r_s_m) / wavelength_m;
}

inline double path_phase(const LinkGeometry &geom, std::size_t n, double wavelength_m) {
    return path_phase(geom.r_i.at(n), geom.r_s.at(n), wavelength_m);
}

// Power received through a single element alone (coefficient magnitude 1).
// Zero direction cosines yield zero power, not an error: an element the
// terminal cannot see simply contributes nothing.
inline double element_received_power(const Scenario &sc, double r_i_m, double r_s_m, double u_i,
                                     double u_s) {
    const double lf = sc.wavelength_m / four_pi;
    const double lf4 = (lf * lf) * (lf * lf);
    const double gains = gain(sc.pattern, u_i) * gain(sc.pattern, u_s);
    const double denom = (r_i_m * r_i_m) * (r_s_m * r_s_m);
    const double common = ((sc.tx_power_w * (sc.tx_gain * sc.rx_gain)) * lf4) * sc.efficiency;
    return common * (gains / denom);
}

inline double element_received_power(const Scenario &sc, const LinkGeometry &geom,
                                     std::size_t n) {
    return element_received_power(sc, geom.r_i.at(n), geom.r_s.at(n), geom.u_i.at(n),
                                  geom.u_s.at(n));
}

struct PerElementTerm {
    double power_w = 0.0;   // P_Rn for unit coefficient magnitude
    double phase_rad = 0.0; // phi_n, unreduced
};

struct PathLossResult {
    double inverse_loss = 0.0;     // 1/L, dimensionless
    double loss_db = 0.0;          // -10 log10(1/L)
    double received_power_w = 0.0; // P_T G_T G_R / L, exactly
    std::complex<double> coherent_sum{0.0, 0.0}; // sum_n b_n sqrt(P_Rn) e^{j phi_n}, sqrt(W)
    bool amplification_warning = false;          // an amplifying configuration was permitted
    std::vector<PerElementTerm> per_element;     // filled only when requested
};

inline PathLossResult path_loss(const Scenario &sc, const LinkGeometry &geom,
                                const CoefficientSet &coeffs, bool want_per_element = false) {
    validate_scenario(sc);
    if (coeffs.size() != geom.size())
        throw std::invalid_argument("coefficient count " + std::to_string(coeffs.size()) +
                                    " does not match element count " + std::to_string(geom.size()));

    PathLossResult res;
    // Passive-power check: a surface element re-radiates eps_p |b_n|^2 of the
    // power it captures, which cannot exceed what arrived. Magnitudes above 1
    // are fine as long as the efficiency absorbs them.
    if (sc.efficiency * max_magnitude_sq(coeffs) > 1.0 + 1e-12) {
        if (!sc.allow_active)
            throw model_domain_error(
                "coefficients amplify: eps_p |b_n|^2 exceeds 1 for some element; a passive "
                "surface cannot do that (set allow_active to model amplifying elements)");
        res.amplification_warning = true;
    }

    const double lf = sc.wavelength_m / four_pi;
    const double lf4 = (lf * lf) * (lf * lf);
    const double gain_product = sc.tx_gain * sc.rx_gain;
    const double power_common = ((sc.tx_power_w * gain_product) * lf4) * sc.efficiency;

    if (want_per_element)
        res.per_element.resize(geom.size());

    CompensatedSum re;
    CompensatedSum im;
    for (std::size_t k = 0; k < geom.size(); ++k) {
        const double gi = gain(sc.pattern, geom.u_i[k]);
        const double gs = gain(sc.pattern, geom.u_s[k]);
        const double amp = std::sqrt(gi * gs) / (geom.r_i[k] * geom.r_s[k]);
        const double ph = path_phase(geom.r_i[k], geom.r_s[k], sc.wavelength_m);
        const std::complex<double> term = coeffs.values[k] * std::polar(amp, ph);
        re.add(term.real());
        im.add(term.imag());
        if (want_per_element) {
            const double denom = (geom.r_i[k] * geom.r_i[k]) * (geom.r_s[k] * geom.r_s[k]);
            res.per_element[k] = {power_common * ((gi * gs) / denom), ph};
        }
    }

    const std::complex<double> loss_sum{re.value(), im.value()};
    const double mag_sq = std::norm(loss_sum);
    res.inverse_loss = (lf4 * mag_sq) * sc.efficiency;
    res.loss_db = -10.0 * std::log10(res.inverse_loss);
    res.received_power_w = (sc.tx_power_w * gain_product) * res.inverse_loss;
    res.coherent_sum = std::sqrt(power_common) * loss_sum;
    return res;
}

inline PathLossResult path_loss(const Scenario &sc, const CoefficientSet &coeffs,
                                bool want_per_element = false) {
    validate_scenario(sc);
    return path_loss(sc, link_geometry(sc.ris, sc.tx, sc.rx), coeffs, want_per_element);
}

// Receive power alone, for callers that do not need the loss breakdown.
inline double receive_power(const Scenario &sc, const CoefficientSet &coeffs) {
    return path_loss(sc, coeffs).received_power_w;
}

// Line-of-sight (Friis) reference: L = (4 pi r / lambda)^2.
inline double free_space_loss(double distance_m, double wavelength_m) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("distance must be positive, got " + std::to_string(distance_m));
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("wavelength must be positive, got " +
                                    std::to_string(wavelength_m));
    const double x = four_pi * distance_m / wavelength_m;
    return x * x;
}

inline double free_space_loss_db(double distance_m, double wavelength_m) {
    return 10.0 * std::log10(free_space_loss(distance_m, wavelength_m));
}

} // namespace rispath
