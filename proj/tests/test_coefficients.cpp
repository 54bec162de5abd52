// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The rispath Authors
//
// Coefficient sets and the focusing / beamforming control strategies.

#include "test_support.hpp"

using namespace rispath;
using test_support::rel_diff;

TEST_CASE("strategy names round-trip", "[coefficients]")
{
    for (Strategy s : {Strategy::focusing, Strategy::beamforming, Strategy::uniform,
                       Strategy::custom})
        CHECK(parse_strategy(to_string(s)) == s);
    CHECK_THROWS_AS(parse_strategy("warp"), config_error);
}

TEST_CASE("uniform and custom coefficient sets", "[coefficients]")
{
    const CoefficientSet u = uniform_coefficients(3);
    REQUIRE(u.size() == 3);
    CHECK(u.strategy == Strategy::uniform);
    for (const auto &v : u.values)
        CHECK(v == std::complex<double>(1.0, 0.0));

    const CoefficientSet c = custom_coefficients({{0.5, 0.0}, {0.0, -1.0}});
    CHECK(c.strategy == Strategy::custom);
    CHECK(max_magnitude_sq(c) == 1.0);
    CHECK(max_magnitude_sq(uniform_coefficients(2, {1.5, 0.0})) == 2.25);
}

TEST_CASE("focusing coefficients", "[coefficients]")
{
    SECTION("conjugate the path phase")
    {
        std::mt19937_64 rng(53);
        const Scenario sc = test_support::random_scenario(rng, 4);
        const LinkGeometry geom = link_geometry(sc.ris, sc.tx, sc.rx);
        const CoefficientSet c = focusing_coefficients(geom, sc.wavelength_m);
        REQUIRE(c.size() == geom.size());
        CHECK(c.strategy == Strategy::focusing);
        for (std::size_t k = 0; k < c.size(); ++k) {
            CHECK(std::abs(std::abs(c.values[k]) - 1.0) < 1e-12);
            const std::complex<double> relit =
                c.values[k] * std::polar(1.0, path_phase(geom, k, sc.wavelength_m));
            // b_n e^{j phi_n} is real positive up to rounding of the many
            // accumulated turns.
            CHECK(std::abs(relit.imag()) < 1e-9);
            CHECK(relit.real() > 0.0);
        }
    }

    SECTION("mirror-symmetric elements get identical coefficients")
    {
        const RisArray a = build_square_grid(1, 2, 0.5);
        const LinkGeometry g = link_geometry(a, terminal_from_position({0.0, 0.0, 10.0}),
                                             terminal_from_position({0.0, 0.0, 4.0}));
        const CoefficientSet c = focusing_coefficients(g, 0.7);
        CHECK(c.values[0] == c.values[1]);
    }
}

TEST_CASE("beamforming coefficients", "[coefficients]")
{
    SECTION("an element at the origin always gets b = 1")
    {
        Scenario sc;
        sc.wavelength_m = 0.3;
        sc.ris = build_square_grid(1, 1, 0.15);
        sc.tx = terminal_from_polar(10.0, 0.5);
        sc.rx = terminal_from_polar(7.0, 0.9, 2.0);
        const CoefficientSet c = beamforming_coefficients(sc);
        CHECK(c.values[0] == std::complex<double>(1.0, 0.0));
        CHECK(c.strategy == Strategy::beamforming);
    }

    SECTION("monostatic broadside needs no phase gradient at all")
    {
        const RisArray a = build_square_grid(3, 3, 0.5);
        const TerminalPlacement t = terminal_from_position({0.0, 0.0, 50.0});
        const CoefficientSet c = beamforming_coefficients(a, t, t, 1.0);
        for (const auto &v : c.values)
            CHECK(v == std::complex<double>(1.0, 0.0));
    }

    SECTION("unit modulus")
    {
        std::mt19937_64 rng(59);
        const Scenario sc = test_support::random_scenario(rng, 5);
        for (const auto &v : beamforming_coefficients(sc).values)
            CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
    }

    SECTION("approaches focusing in the far limit")
    {
        // Fixed 10x10 array, terminals receding at constant angles. The
        // strategies differ by the neglected wavefront curvature, which
        // falls off with distance.
        Scenario sc;
        sc.wavelength_m = 1.0;
        sc.ris = build_square_grid(10, 10, 0.5);
        const double side = 5.0;

        auto gap_db = [&](double ratio) {
            sc.tx = terminal_from_position({0.0, 0.0, ratio * side});
            sc.rx = terminal_from_polar(ratio * side, 40.0 * deg_to_rad);
            const LinkGeometry geom = link_geometry(sc.ris, sc.tx, sc.rx);
            const double f =
                path_loss(sc, geom, focusing_coefficients(geom, sc.wavelength_m)).loss_db;
            const double b = path_loss(sc, geom, beamforming_coefficients(sc)).loss_db;
            return std::abs(f - b);
        };

        const double g10 = gap_db(10.0);
        const double g100 = gap_db(100.0);
        const double g1000 = gap_db(1000.0);
        CHECK(g100 < g10);
        CHECK(g1000 < g100);
        CHECK(g1000 < 0.01);
    }

    SECTION("close to focusing when the surface is small relative to range")
    {
        // At r = 1e4 lambda a 30-lambda surface is deep inside the far
        // zone; direction-only control is indistinguishable from focusing.
        Scenario sc;
        sc.wavelength_m = 1.0;
        sc.ris = build_square_grid(60, 60, 0.5);
        sc.tx = terminal_from_position({0.0, 0.0, 1e4});
        sc.rx = terminal_from_polar(1e4, 30.0 * deg_to_rad);
        const LinkGeometry geom = link_geometry(sc.ris, sc.tx, sc.rx);
        const double f = path_loss(sc, geom, focusing_coefficients(geom, sc.wavelength_m)).loss_db;
        const double b = path_loss(sc, geom, beamforming_coefficients(sc)).loss_db;
        CHECK(std::abs(f - b) < 0.5);
    }
}

TEST_CASE("make_coefficients dispatch", "[coefficients]")
{
    std::mt19937_64 rng(61);
    const Scenario sc = test_support::random_scenario(rng, 3);
    CHECK(make_coefficients(sc, Strategy::focusing).strategy == Strategy::focusing);
    CHECK(make_coefficients(sc, Strategy::beamforming).strategy == Strategy::beamforming);
    const CoefficientSet u = make_coefficients(sc, Strategy::uniform);
    CHECK(u.size() == sc.ris.size());
    CHECK_THROWS_AS(make_coefficients(sc, Strategy::custom), config_error);
}
