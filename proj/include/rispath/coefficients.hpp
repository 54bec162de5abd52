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
// Per-element reflection coefficients b_n. Magnitudes are not clamped — the
// engine's passive-power check (eps_p |b_n|^2 <= 1) decides what a passive
// surface may do; see link.hpp.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rispath/errors.hpp"

namespace rispath {

enum class Strategy {
    focusing,    // b_n cancels each path phase exactly (upper bound)
    beamforming, // b_n from array geometry and terminal directions only
    uniform,     // identical coefficient on every element
    custom       // caller-supplied values
};

inline const char *to_string(Strategy s) {
    switch (s) {
    case Strategy::focusing: return "focusing";
    case Strategy::beamforming: return "beamforming";
    case Strategy::uniform: return "uniform";
    case Strategy::custom: return "custom";
    }
    throw std::logic_error("unreachable strategy value");
}

inline Strategy parse_strategy(const std::string &name) {
    if (name == "focusing") return Strategy::focusing;
    if (name == "beamforming") return Strategy::beamforming;
    if (name == "uniform") return Strategy::uniform;
    if (name == "custom") return Strategy::custom;
    throw config_error("strategy", "unknown strategy \"" + name +
                                       "\" (expected focusing, beamforming, uniform, or custom)");
}

struct CoefficientSet {
    std::vector<std::complex<double>> values; // row-major, one per element
    Strategy strategy = Strategy::custom;

    std::size_t size() const { return values.size(); }
};

inline CoefficientSet uniform_coefficients(std::size_t n, std::complex<double> value = {1.0, 0.0}) {
    CoefficientSet c;
    c.strategy = Strategy::uniform;
    c.values.assign(n, value);
    return c;
}

inline CoefficientSet custom_coefficients(std::vector<std::complex<double>> values) {
    CoefficientSet c;
    c.strategy = Strategy::custom;
    c.values = std::move(values);
    return c;
}

inline double max_magnitude_sq(const CoefficientSet &c) {
    double m = 0.0;
    for (const auto &v : c.values)
        m = std::max(m, std::norm(v));
    return m;
}

} // namespace rispath
