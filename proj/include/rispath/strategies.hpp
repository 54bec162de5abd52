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
// Reflection coefficient builders.
//
// focusing     cancels the exact per-element path phase, b_n = e^{-j phi_n}.
//              This aligns every contribution and upper-bounds the received
//              power of any unit-magnitude coefficient set.
// beamforming  uses only the array layout and the terminal directions seen
//              from the surface center: b_n = e^{+j k p_n.(t + s)} with unit
//              vectors t toward the transmitter and s toward the receiver.
//              It matches focusing when both terminals are far from the
//              surface and degrades as the spherical wavefront curvature
//              across the aperture becomes non-negligible.

#pragma once

#include <complex>
#include <cstddef>

#include "rispath/coefficients.hpp"
#include "rispath/constants.hpp"
#include "rispath/geometry.hpp"
#include "rispath/link.hpp"
#include "rispath/vec3.hpp"

namespace rispath {

inline CoefficientSet focusing_coefficients(const LinkGeometry &geom, double wavelength_m) {
    CoefficientSet c;
    c.strategy = Strategy::focusing;
    c.values.resize(geom.size());
    for (std::size_t k = 0; k < geom.size(); ++k)
        c.values[k] = std::polar(1.0, -path_phase(geom.r_i[k], geom.r_s[k], wavelength_m));
    return c;
}

inline CoefficientSet focusing_coefficients(const Scenario &sc) {
    return focusing_coefficients(link_geometry(sc.ris, sc.tx, sc.rx), sc.wavelength_m);
}

inline CoefficientSet beamforming_coefficients(const RisArray &ris, const TerminalPlacement &tx,
                                               const TerminalPlacement &rx, double wavelength_m) {
    const Vec3 steer = unit(tx.position) + unit(rx.position);
    const double k_wave = two_pi / wavelength_m;
    CoefficientSet c;
    c.strategy = Strategy::beamforming;
    c.values.resize(ris.size());
    for (std::size_t n = 0; n < ris.size(); ++n)
        c.values[n] = std::polar(1.0, k_wave * dot(ris.positions[n], steer));
    return c;
}

inline CoefficientSet beamforming_coefficients(const Scenario &sc) {
    return beamforming_coefficients(sc.ris, sc.tx, sc.rx, sc.wavelength_m);
}

// Dispatch by strategy name; Strategy::custom has no generic recipe and must
// be built through custom_coefficients().
inline CoefficientSet make_coefficients(const Scenario &sc, Strategy strategy) {
    switch (strategy) {
    case Strategy::focusing: return focusing_coefficients(sc);
    case Strategy::beamforming: return beamforming_coefficients(sc);
    case Strategy::uniform: return uniform_coefficients(sc.ris.size());
    case Strategy::custom:
        throw config_error("strategy", "custom coefficients must be supplied explicitly");
    }
    throw std::logic_error("unreachable strategy value");
}

} // namespace rispath
