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
// Sweep engine and table generators.
//
// A sweep holds both terminals at the same range r from the surface center,
// the transmitter broadside and the receiver at angle psi_s, and steps the
// square aperture one element row and column at a time (side = n lambda/2).
// Each row reports the absolute loss and the gain relative to a free-space
// channel of the same total length 2r, the study's 0 dB reference line.
//
// Rows are independent, so they may be computed on any number of threads;
// the output order is always (distance, angle, side, strategy) and every row
// is an internally sequential compensated sum, making the result identical
// bit for bit regardless of the thread count.
//
// The table generator sizes a square surface to match the equal-length
// free-space channel at preset incidence cases:
//   minimum  both terminals broadside, unit efficiency
//   typical  both terminals 60 degrees off broadside, efficiency 0.5

#pragma once

#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "rispath/constants.hpp"
#include "rispath/errors.hpp"
#include "rispath/farfield.hpp"
#include "rispath/geometry.hpp"
#include "rispath/link.hpp"
#include "rispath/pattern.hpp"
#include "rispath/strategies.hpp"

namespace rispath {

enum class SweepStrategy {
    focusing,    // exact per-element phase cancellation
    beamforming, // direction-only control from the surface center
    far          // closed-form far approximation (area form)
};

inline const char *to_string(SweepStrategy s) {
    switch (s) {
    case SweepStrategy::focusing: return "focusing";
    case SweepStrategy::beamforming: return "beamforming";
    case SweepStrategy::far: return "far";
    }
    throw std::logic_error("unreachable sweep strategy value");
}

inline SweepStrategy parse_sweep_strategy(const std::string &name) {
    if (name == "focusing") return SweepStrategy::focusing;
    if (name == "beamforming") return SweepStrategy::beamforming;
    if (name == "far") return SweepStrategy::far;
    throw config_error("sweep.strategies", "unknown strategy \"" + name +
                                               "\" (expected focusing, beamforming, or far)");
}

enum class Normalization {
    free_space_equal_length, // 0 dB line: free-space channel of length r_i + r_s
    absolute                 // no reference; consumers read loss_db directly
};

inline const char *to_string(Normalization n) {
    switch (n) {
    case Normalization::free_space_equal_length: return "free_space_equal_length";
    case Normalization::absolute: return "absolute";
    }
    throw std::logic_error("unreachable normalization value");
}

inline Normalization parse_normalization(const std::string &name) {
    if (name == "free_space_equal_length") return Normalization::free_space_equal_length;
    if (name == "absolute") return Normalization::absolute;
    throw config_error("sweep.normalization",
                       "unknown normalization \"" + name +
                           "\" (expected free_space_equal_length or absolute)");
}

// Convert an aperture side in wavelengths to a per-side element count at
// half-wavelength spacing. The side must sit on the element grid: 2 * side
// has to be a positive integer to within 1e-9.
inline int elements_for_side_lambda(double side_lambda) {
    const double n_exact = 2.0 * side_lambda;
    const double n_round = std::round(n_exact);
    if (!(n_round >= 1.0) || !(std::abs(n_exact - n_round) <= 1e-9))
        throw config_error("sweep.side_lambda",
                           "side " + std::to_string(side_lambda) +
                               " lambda is not a positive integer multiple of lambda/2");
    if (n_round > 1e9)
        throw config_error("sweep.side_lambda",
                           "side " + std::to_string(side_lambda) + " lambda is absurdly large");
    return static_cast<int>(n_round);
}

// Expand a {from, to, step} side range (in wavelengths) into element counts.
// All three must land on the half-wavelength grid.
inline std::vector<int> expand_side_range(double from_lambda, double to_lambda,
                                          double step_lambda) {
    const int n_from = elements_for_side_lambda(from_lambda);
    if (!(step_lambda > 0.0))
        throw config_error("sweep.side_lambda.step", "step must be positive");
    const double step_exact = 2.0 * step_lambda;
    const double step_round = std::round(step_exact);
    if (!(step_round >= 1.0) || !(std::abs(step_exact - step_round) <= 1e-9))
        throw config_error("sweep.side_lambda.step",
                           "step " + std::to_string(step_lambda) +
                               " lambda is not a positive integer multiple of lambda/2");
    const int n_step = static_cast<int>(step_round);
    if (!(to_lambda >= from_lambda))
        throw config_error("sweep.side_lambda.to", "range end lies before range start");
    const double n_to = 2.0 * to_lambda + 1e-9;
    std::vector<int> out;
    for (long long n = n_from; static_cast<double>(n) <= n_to; n += n_step)
        out.push_back(static_cast<int>(n));
    return out;
}

struct SweepSpec {
    double wavelength_m = 1.0;
    ElementPattern pattern = benchmark_pattern();
    double efficiency = 1.0;
    std::vector<double> distances_m;    // r_i = r_s, one sweep block per entry
    std::vector<double> angles_rad;     // receiver angle psi_s off broadside
    std::vector<int> elements_per_side; // n; side = n lambda/2
    std::vector<SweepStrategy> strategies;
    Normalization normalization = Normalization::free_space_equal_length;
    double azimuth_rad = 0.0;           // receiver azimuth plane
    int max_elements_per_side = 400;    // quadratic-blowup guard
};

struct SweepRow {
    double side_lambda = 0.0;
    double psi_s_deg = 0.0;
    double r_over_lambda = 0.0;
    SweepStrategy strategy = SweepStrategy::focusing;
    long long n_elements = 0; // total element count n^2
    double loss_db = 0.0;
    double normalized_db = 0.0; // free-space loss_db at length 2r minus loss_db
};

inline void validate_sweep_spec(const SweepSpec &spec) {
    if (!(spec.wavelength_m > 0.0) || !std::isfinite(spec.wavelength_m))
        throw config_error("wavelength_m", "must be positive and finite");
    if (!(spec.efficiency > 0.0) || !std::isfinite(spec.efficiency))
        throw config_error("efficiency", "must be positive and finite");
    if (spec.distances_m.empty())
        throw config_error("sweep.r", "at least one distance is required");
    for (double r : spec.distances_m)
        if (!(r > 0.0) || !std::isfinite(r))
            throw config_error("sweep.r", "distances must be positive and finite, got " +
                                              std::to_string(r));
    if (spec.angles_rad.empty())
        throw config_error("sweep.psi_s_deg", "at least one receiver angle is required");
    for (double a : spec.angles_rad)
        if (!(a >= 0.0 && a < 0.5 * pi))
            throw config_error("sweep.psi_s_deg", "angles must lie in [0, 90) degrees");
    if (!std::isfinite(spec.azimuth_rad))
        throw config_error("sweep.azimuth_deg", "azimuth must be finite");
    if (spec.elements_per_side.empty())
        throw config_error("sweep.side_lambda", "at least one side length is required");
    if (spec.max_elements_per_side < 1)
        throw config_error("sweep.max_elements_per_side", "cap must be at least 1");
    for (int n : spec.elements_per_side) {
        if (n < 1)
            throw config_error("sweep.side_lambda", "element count per side must be positive");
        if (n > spec.max_elements_per_side)
            throw resource_limit_error(
                "side of " + std::to_string(n) + " elements (" + std::to_string(0.5 * n) +
                " lambda) exceeds the cap of " + std::to_string(spec.max_elements_per_side) +
                " elements per side; raise max_elements_per_side to allow it");
    }
    if (spec.strategies.empty())
        throw config_error("sweep.strategies", "at least one strategy is required");
}

namespace detail {

inline SweepRow compute_sweep_row(const SweepSpec &spec, double r_m, double angle_rad,
                                  int n_side, SweepStrategy strategy) {
    SweepRow row;
    row.side_lambda = 0.5 * n_side;
    row.psi_s_deg = angle_rad * rad_to_deg;
    row.r_over_lambda = r_m / spec.wavelength_m;
    row.strategy = strategy;
    row.n_elements = static_cast<long long>(n_side) * static_cast<long long>(n_side);

    const double side_m = n_side * (0.5 * spec.wavelength_m);
    if (strategy == SweepStrategy::far) {
        const double inv = far_path_loss_area(side_m * side_m, r_m, r_m, 1.0,
                                              std::cos(angle_rad), spec.pattern.q,
                                              spec.efficiency);
        row.loss_db = -10.0 * std::log10(inv);
    } else {
        Scenario sc;
        sc.wavelength_m = spec.wavelength_m;
        sc.efficiency = spec.efficiency;
        sc.pattern = spec.pattern;
        sc.ris = build_square_grid(n_side, n_side, 0.5 * spec.wavelength_m);
        sc.tx = terminal_from_position({0.0, 0.0, r_m});
        sc.rx = terminal_from_polar(r_m, angle_rad, spec.azimuth_rad);
        const LinkGeometry geom = link_geometry(sc.ris, sc.tx, sc.rx);
        const CoefficientSet coeffs =
            strategy == SweepStrategy::focusing
                ? focusing_coefficients(geom, sc.wavelength_m)
                : beamforming_coefficients(sc.ris, sc.tx, sc.rx, sc.wavelength_m);
        row.loss_db = path_loss(sc, geom, coeffs).loss_db;
    }
    row.normalized_db = free_space_loss_db(r_m + r_m, spec.wavelength_m) - row.loss_db;
    return row;
}

} // namespace detail

// One row per (distance, angle, side, strategy), in that order. The rows are
// independent; `threads` only changes how they are scheduled, never any value.
inline std::vector<SweepRow> run_sweep(const SweepSpec &spec, int threads = 1) {
    validate_sweep_spec(spec);

    struct Job {
        double r_m;
        double angle_rad;
        int n_side;
        SweepStrategy strategy;
    };
    std::vector<Job> jobs;
    jobs.reserve(spec.distances_m.size() * spec.angles_rad.size() *
                 spec.elements_per_side.size() * spec.strategies.size());
    for (double r : spec.distances_m)
        for (double a : spec.angles_rad)
            for (int n : spec.elements_per_side)
                for (SweepStrategy s : spec.strategies)
                    jobs.push_back({r, a, n, s});

    std::vector<SweepRow> rows(jobs.size());
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), jobs.size());

    if (workers <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k)
            rows[k] = detail::compute_sweep_row(spec, jobs[k].r_m, jobs[k].angle_rad,
                                                jobs[k].n_side, jobs[k].strategy);
        return rows;
    }

    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&](std::size_t worker_id) {
        try {
            for (std::size_t k = worker_id; k < jobs.size(); k += workers)
                rows[k] = detail::compute_sweep_row(spec, jobs[k].r_m, jobs[k].angle_rad,
                                                    jobs[k].n_side, jobs[k].strategy);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back(work, t);
    for (std::thread &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return rows;
}

// ---------------------------------------------------------------------------
// Surface sizing tables
// ---------------------------------------------------------------------------

enum class TableCase {
    minimum, // broadside incidence and scattering, unit efficiency
    typical  // both terminals 60 degrees off broadside, efficiency 0.5
};

inline const char *to_string(TableCase c) {
    switch (c) {
    case TableCase::minimum: return "minimum";
    case TableCase::typical: return "typical";
    }
    throw std::logic_error("unreachable table case value");
}

inline TableCase parse_table_case(const std::string &name) {
    if (name == "minimum") return TableCase::minimum;
    if (name == "typical") return TableCase::typical;
    throw config_error("case", "unknown table case \"" + name +
                                   "\" (expected minimum or typical)");
}

struct TableCasePreset {
    double u_i;
    double u_s;
    double efficiency;
};

inline TableCasePreset table_case_preset(TableCase c) {
    switch (c) {
    case TableCase::minimum: return {1.0, 1.0, 1.0};
    case TableCase::typical: return {0.5, 0.5, 0.5};
    }
    throw std::logic_error("unreachable table case value");
}

struct TableRow {
    TableCase table_case = TableCase::minimum;
    double frequency_hz = 0.0;
    double focal_length_m = 0.0;
    double wavelength_m = 0.0;
    double side_m = 0.0;              // unrounded
    double side_lambda = 0.0;         // unrounded
    double side_m_rounded = 0.0;      // presentation value, 0.1 m steps
    double side_lambda_rounded = 0.0; // presentation value, 0.1 lambda steps
    bool degenerate = false;          // focal length 0
};

inline const std::vector<double> &default_table_frequencies_hz() {
    static const std::vector<double> v{0.8e9, 1.9e9, 2.4e9, 5.8e9, 28.0e9, 60.0e9};
    return v;
}

inline const std::vector<double> &default_table_focal_lengths_m() {
    static const std::vector<double> v{100.0, 1000.0};
    return v;
}

inline double round_to_tenth(double x) { return std::round(10.0 * x) / 10.0; }

// Rows ordered frequency-major, then focal length.
inline std::vector<TableRow> make_table_rows(
    TableCase table_case,
    const std::vector<double> &focal_lengths_m = default_table_focal_lengths_m(),
    const std::vector<double> &frequencies_hz = default_table_frequencies_hz()) {
    const TableCasePreset preset = table_case_preset(table_case);
    std::vector<TableRow> rows;
    rows.reserve(frequencies_hz.size() * focal_lengths_m.size());
    for (double f : frequencies_hz) {
        if (!(f > 0.0))
            throw model_domain_error("frequency must be positive, got " + std::to_string(f));
        const double lambda = speed_of_light_m_s / f;
        for (double fe : focal_lengths_m) {
            const RequiredArea req =
                required_area(fe, lambda, preset.u_i, preset.u_s, preset.efficiency);
            TableRow row;
            row.table_case = table_case;
            row.frequency_hz = f;
            row.focal_length_m = fe;
            row.wavelength_m = lambda;
            row.side_m = req.side_m;
            row.side_lambda = req.side_lambda;
            row.side_m_rounded = round_to_tenth(req.side_m);
            row.side_lambda_rounded = round_to_tenth(req.side_lambda);
            row.degenerate = req.degenerate;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace rispath
