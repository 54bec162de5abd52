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
// Canonical frame: the reflecting surface lies in the z = 0 plane with its
// grid centroid at the origin and unit normal +z. Terminals must be strictly
// on the +z side. Element order is row-major and is the summation order used
// throughout the engine.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rispath/constants.hpp"
#include "rispath/errors.hpp"
#include "rispath/vec3.hpp"

namespace rispath {

struct TerminalPlacement {
    Vec3 position;
};

inline TerminalPlacement terminal_from_position(const Vec3 &position) { return {position}; }

// Polar placement relative to the surface: range r from the origin, angle psi
// off the surface normal (strictly inside the front half-space), and azimuth
// of the measurement plane around the normal. Azimuth 0 places the terminal
// in the x-z plane.
inline TerminalPlacement terminal_from_polar(double r_m, double psi_rad, double azimuth_rad = 0.0) {
    if (!(r_m > 0.0))
        throw std::invalid_argument("terminal range must be positive, got " + std::to_string(r_m));
    if (!(psi_rad >= 0.0 && psi_rad < 0.5 * pi))
        throw geometry_error("terminal angle off normal must lie in [0, pi/2), got " +
                             std::to_string(psi_rad) + " rad");
    const double s = std::sin(psi_rad);
    return {{r_m * s * std::cos(azimuth_rad), r_m * s * std::sin(azimuth_rad), r_m * std::cos(psi_rad)}};
}

struct RisArray {
    std::vector<Vec3> positions; // element centers, row-major
    Vec3 normal{0.0, 0.0, 1.0};
    double spacing_m = 0.0;
    int rows = 0;
    int cols = 0;
    double area_m2 = 0.0; // rows * cols * spacing^2

    std::size_t size() const { return positions.size(); }
};

// Uniform rows x cols grid, spacing-centered on the origin:
// element (r, c) sits at ((r - (rows-1)/2) * s, (c - (cols-1)/2) * s, 0).
inline RisArray build_square_grid(int rows, int cols, double spacing_m) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid must have at least one row and one column");
    if (!(spacing_m > 0.0))
        throw std::invalid_argument("element spacing must be positive, got " + std::to_string(spacing_m));

    RisArray a;
    a.spacing_m = spacing_m;
    a.rows = rows;
    a.cols = cols;
    a.area_m2 = static_cast<double>(rows) * static_cast<double>(cols) * spacing_m * spacing_m;
    a.positions.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    const double row_off = (rows - 1) / 2.0;
    const double col_off = (cols - 1) / 2.0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a.positions.push_back({(r - row_off) * spacing_m, (c - col_off) * spacing_m, 0.0});
    return a;
}

// Per-element link quantities: distances to both terminals and the direction
// cosines of the element-to-terminal directions against the surface normal.
struct LinkGeometry {
    std::vector<double> r_i; // element -> transmitter distance (m)
    std::vector<double> r_s; // element -> receiver distance (m)
    std::vector<double> u_i; // cos(psi) toward transmitter, in (0, 1]
    std::vector<double> u_s; // cos(psi) toward receiver, in (0, 1]

    std::size_t size() const { return r_i.size(); }
};

inline LinkGeometry link_geometry(const RisArray &ris, const TerminalPlacement &tx,
                                  const TerminalPlacement &rx) {
    LinkGeometry g;
    const std::size_t n = ris.size();
    g.r_i.resize(n);
    g.r_s.resize(n);
    g.u_i.resize(n);
    g.u_s.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vec3 di = tx.position - ris.positions[k];
        const Vec3 ds = rx.position - ris.positions[k];
        const double ri = norm(di);
        const double rs = norm(ds);
        if (ri == 0.0 || rs == 0.0)
            throw geometry_error("terminal coincides with element " + std::to_string(k));
        const double ui = dot(di, ris.normal) / ri;
        const double us = dot(ds, ris.normal) / rs;
        if (ui <= 0.0)
            throw geometry_error("transmitter is in or behind the surface plane as seen from element " +
                                 std::to_string(k));
        if (us <= 0.0)
            throw geometry_error("receiver is in or behind the surface plane as seen from element " +
                                 std::to_string(k));
        g.r_i[k] = ri;
        g.r_s[k] = rs;
        g.u_i[k] = ui;
        g.u_s[k] = us;
    }
    return g;
}

} // namespace rispath
