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
// Element radiation pattern: G_e(psi) = gamma * cos^(2q)(psi) on the front
// half-space and zero behind, with gamma = 2*(2q + 1) so that the pattern
// radiates exactly 4*pi of solid-angle-weighted gain (lossless element).
//
// The default exponent q = 0.285 makes the broadside effective apertures of
// the elements sum to the physical aperture area at half-wavelength spacing
// (broadside gain 3.14, about 5 dBi).

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rispath/constants.hpp"
#include "rispath/errors.hpp"

namespace rispath {

inline constexpr double benchmark_exponent = 0.285;

// Tolerated overshoot of |cos(psi)| above 1 from upstream floating-point noise.
inline constexpr double cosine_slack = 1e-12;

struct ElementPattern {
    double q = benchmark_exponent;
    double gamma = 2.0 * (2.0 * benchmark_exponent + 1.0);
};

constexpr bool operator==(const ElementPattern &a, const ElementPattern &b) {
    return a.q == b.q && a.gamma == b.gamma;
}

inline ElementPattern pattern_from_exponent(double q) {
    if (!(q >= 0.0))
        throw model_domain_error("pattern exponent must be >= 0, got " + std::to_string(q));
    return {q, 2.0 * (2.0 * q + 1.0)};
}

inline ElementPattern benchmark_pattern() { return pattern_from_exponent(benchmark_exponent); }

// Inverse of gamma = 2*(2q + 1): broadside (linear) gain g0 determines q.
// g0 < 2 would require q < 0, i.e. a pattern wider than a bare half-space.
inline ElementPattern pattern_from_broadside_gain(double g0) {
    if (!(g0 >= 2.0))
        throw model_domain_error("broadside gain must be >= 2 (3 dBi), got " + std::to_string(g0));
    return {g0 / 4.0 - 0.5, g0};
}

// Directive gain toward a direction with cos(psi) = u off broadside.
// Exactly zero on and behind the element plane (u <= 0).
inline double gain(const ElementPattern &p, double u) {
    if (std::abs(u) > 1.0 + cosine_slack)
        throw std::invalid_argument("gain: direction cosine " + std::to_string(u) + " outside [-1, 1]");
    if (u <= 0.0)
        return 0.0;
    if (u > 1.0)
        u = 1.0;
    return p.gamma * std::pow(u, 2.0 * p.q);
}

inline double broadside_gain_dbi(const ElementPattern &p) { return 10.0 * std::log10(p.gamma); }

// Capture area (m^2) presented toward cos(psi) = u at the given wavelength.
inline double effective_aperture(const ElementPattern &p, double u, double wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("effective_aperture: wavelength must be positive");
    return wavelength_m * wavelength_m / four_pi * gain(p, u);
}

namespace detail {

template <typename F>
double adaptive_simpson(F f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(F f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace detail

// Total gain integrated over the sphere. Self-check quantity: every lossless
// pattern of this family must integrate to 4*pi regardless of q.
inline double radiated_power_integral(const ElementPattern &p) {
    const auto f = [&p](double psi) { return p.gamma * std::pow(std::cos(psi), 2.0 * p.q) * std::sin(psi); };
    return two_pi * detail::integrate(f, 0.0, 0.5 * pi, 1e-12);
}

} // namespace rispath
