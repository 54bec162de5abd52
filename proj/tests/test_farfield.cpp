// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The rispath Authors
//
// Far-case closed forms, plate benchmarks and the surface sizing rule.

#include "test_support.hpp"

using namespace rispath;
using test_support::rel_diff;

namespace {

FarScenario basic_far(double n_elements = 400.0)
{
    FarScenario fs;
    fs.r_i_m = 100.0;
    fs.r_s_m = 50.0;
    fs.wavelength_m = 0.1;
    fs.n_elements = n_elements;
    return fs;
}

} // namespace

TEST_CASE("far scenario validation", "[farfield]")
{
    FarScenario fs = basic_far();
    CHECK_NOTHROW(validate_far_scenario(fs));
    CHECK(far_element_count(fs) == 400.0);
    // Area derives from the half-wavelength cell: N (lambda/2)^2.
    CHECK(rel_diff(far_area(fs), 400.0 * 0.05 * 0.05) < 1e-15);

    SECTION("consistent N and A are accepted, inconsistent rejected")
    {
        fs.area_m2 = 400.0 * 0.05 * 0.05;
        CHECK_NOTHROW(validate_far_scenario(fs));
        fs.area_m2 = 1.1;
        CHECK_THROWS_AS(validate_far_scenario(fs), model_domain_error);
    }

    SECTION("size must come from somewhere")
    {
        FarScenario none = basic_far();
        none.n_elements.reset();
        CHECK_THROWS_AS(far_element_count(none), model_domain_error);
        none.area_m2 = 1.0;
        CHECK(rel_diff(far_element_count(none), 400.0) < 1e-15);
    }

    SECTION("direction cosines and ranges")
    {
        fs.u_s = 0.0;
        CHECK_THROWS_AS(validate_far_scenario(fs), model_domain_error);
        fs.u_s = 1.5;
        CHECK_THROWS_AS(validate_far_scenario(fs), model_domain_error);
        fs = basic_far();
        fs.r_i_m = 0.0;
        CHECK_THROWS_AS(validate_far_scenario(fs), model_domain_error);
    }
}

TEST_CASE("far_path_loss_general", "[farfield]")
{
    const FarScenario fs = basic_far();

    CHECK(far_path_loss_general(fs, 0.0) == 0.0);
    CHECK(far_path_loss_general(fs, 400.0 * 400.0) == far_path_loss_focused(fs));
    CHECK_THROWS_AS(far_path_loss_general(fs, -1.0), std::invalid_argument);

    // Plate law: doubling r_i exactly quarter the inverse loss.
    FarScenario twice = fs;
    twice.r_i_m *= 2.0;
    CHECK(far_path_loss_general(fs, 100.0) / far_path_loss_general(twice, 100.0) == 4.0);
    CHECK(10.0 * std::log10(far_path_loss_general(fs, 100.0) /
                            far_path_loss_general(twice, 100.0)) == 10.0 * std::log10(4.0));
}

TEST_CASE("far_path_loss_focused", "[farfield]")
{
    SECTION("N^2 law: doubling the element count gains exactly 6.0206 dB")
    {
        FarScenario fs = basic_far(137.0);
        const double one = far_path_loss_focused(fs);
        fs.n_elements = 274.0;
        const double two = far_path_loss_focused(fs);
        CHECK(two / one == 4.0);
        CHECK(10.0 * std::log10(two / one) == 10.0 * std::log10(4.0));
    }

    SECTION("specifying the size by area gives the identical result")
    {
        const FarScenario by_n = basic_far(400.0);
        FarScenario by_a = by_n;
        by_a.n_elements.reset();
        by_a.area_m2 = 400.0 * (0.05 * 0.05);
        CHECK(rel_diff(far_path_loss_focused(by_a), far_path_loss_focused(by_n)) < 1e-12);
    }

    SECTION("agrees with the aperture form up to the broadside-gain convention")
    {
        // With u = 1, eps = 1 and A = N (lambda/2)^2 the two forms differ by
        // exactly (gamma/pi)^2 = 0.99899 -- about 0.1%, or 0.0044 dB.
        const FarScenario fs = basic_far(400.0);
        const double focused = far_path_loss_focused(fs);
        const double area = far_path_loss_area(far_area(fs), fs.r_i_m, fs.r_s_m, 1.0, 1.0);
        const double g = benchmark_pattern().gamma;
        CHECK(rel_diff(focused / area, (g / pi) * (g / pi)) < 1e-12);
        CHECK(std::abs(focused / area - 1.0) < 2e-3);
    }
}

TEST_CASE("far_path_loss_area and plate benchmarks", "[farfield]")
{
    SECTION("broadside anchor: A = 1 m^2 at r_i = r_s = 100 m")
    {
        const double inv = far_path_loss_area(1.0, 100.0, 100.0, 1.0, 1.0);
        CHECK(rel_diff(inv, 6.332573977646111e-11) < 1e-13);
        CHECK(std::abs(-10.0 * std::log10(inv) - 102.0) < 0.02);
    }

    SECTION("monostatic broadside equals the flat plate exactly")
    {
        // pow(1, 2q) evaluates to exactly 1, so the expressions coincide
        // bitwise, not merely approximately.
        CHECK(far_path_loss_area(2.7, 83.0, 83.0, 1.0, 1.0) == plate_path_loss(2.7, 83.0, 83.0));
    }

    SECTION("the area form never references a wavelength")
    {
        // Electrically identical layouts at different wavelengths: all inputs
        // scale by lambda, the result is bit-identical when the scale factor
        // is a power of two (exact in floating point).
        const double a1 = far_path_loss_area(16.0, 200.0, 100.0, 1.0, 0.7);
        const double a2 = far_path_loss_area(16.0 * 4.0, 200.0 * 2.0, 100.0 * 2.0, 1.0, 0.7);
        CHECK(a1 == a2);
    }

    SECTION("swapping the distances changes nothing")
    {
        CHECK(far_path_loss_area(3.0, 120.0, 40.0, 0.9, 0.6) ==
              far_path_loss_area(3.0, 40.0, 120.0, 0.9, 0.6));
    }

    SECTION("domain")
    {
        CHECK_THROWS_AS(far_path_loss_area(1.0, 100.0, 50.0, 0.0, 1.0), divergence_error);
        CHECK_THROWS_AS(far_path_loss_area(1.0, 100.0, 50.0, 1.0, -0.2), divergence_error);
        CHECK_THROWS_AS(far_path_loss_area(0.0, 100.0, 50.0, 1.0, 1.0), model_domain_error);
    }
}

TEST_CASE("plate radar cross section", "[farfield]")
{
    // A = lambda^2 gives sigma = 4 pi lambda^2.
    const double lam = 0.1;
    CHECK(rel_diff(plate_rcs(lam * lam, lam) / (lam * lam), four_pi) < 1e-13);
    CHECK(rel_diff(plate_rcs(1.0, 0.1), 1256.6370614359173) < 1e-13);

    // Radar range equation: 1/L = sigma lambda^2 / ((4 pi)^3 r_i^2 r_s^2)
    // must reproduce the plate path loss identically.
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const double area = 0.1 + 10.0 * unit(rng);
        const double lam2 = 0.01 + unit(rng);
        const double ri = 10.0 + 500.0 * unit(rng);
        const double rs = 10.0 + 500.0 * unit(rng);
        const double sigma = plate_rcs(area, lam2);
        const double radar = sigma * lam2 * lam2 /
                             (four_pi * four_pi * four_pi * ri * ri * rs * rs);
        CHECK(rel_diff(radar, plate_path_loss(area, ri, rs)) < 1e-14);
    }
}

TEST_CASE("effective focal length", "[farfield]")
{
    CHECK(effective_focal_length(200.0, 200.0) == 100.0);
    CHECK(std::abs(effective_focal_length(1e6, 100.0) - 99.99) < 0.001);
    CHECK_THROWS_AS(effective_focal_length(0.0, 100.0), model_domain_error);

    // Harmonic combination: between half the smaller distance and the
    // smaller distance.
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> d(1.0, 1e4);
    for (int k = 0; k < 50; ++k) {
        const double ri = d(rng), rs = d(rng);
        const double fe = effective_focal_length(ri, rs);
        const double lo = std::min(ri, rs);
        CHECK(fe >= 0.5 * lo - 1e-9);
        CHECK(fe <= lo);
        CHECK(effective_focal_length(rs, ri) == fe);
    }
}

TEST_CASE("specular ratio", "[farfield]")
{
    SECTION("break-even at A = f_e lambda, broadside, lossless")
    {
        FarScenario fs;
        fs.r_i_m = 120.0;
        fs.r_s_m = 60.0;
        fs.wavelength_m = 0.25;
        fs.area_m2 = effective_focal_length(fs.r_i_m, fs.r_s_m) * fs.wavelength_m;
        CHECK(specular_ratio(fs) == 1.0);
    }

    SECTION("composition: ratio = far_path_loss_area * free_space_loss(r_i + r_s)")
    {
        std::mt19937_64 rng(73);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < 30; ++k) {
            FarScenario fs;
            fs.r_i_m = 10.0 + 1e3 * unit(rng);
            fs.r_s_m = 10.0 + 1e3 * unit(rng);
            fs.wavelength_m = 0.05 + unit(rng);
            fs.u_i = 0.2 + 0.8 * unit(rng);
            fs.u_s = 0.2 + 0.8 * unit(rng);
            fs.efficiency = 0.2 + 0.8 * unit(rng);
            fs.area_m2 = 0.5 + 10.0 * unit(rng);
            const double via_loss =
                far_path_loss_area(*fs.area_m2, fs.r_i_m, fs.r_s_m, fs.u_i, fs.u_s, fs.q,
                                   fs.efficiency) *
                free_space_loss(fs.r_i_m + fs.r_s_m, fs.wavelength_m);
            CHECK(rel_diff(specular_ratio(fs), via_loss) < 1e-12);
        }
    }
}

TEST_CASE("required area", "[farfield]")
{
    SECTION("published sizing anchors")
    {
        // 0.8 GHz, f_e = 100 m, ideal conditions: a 6.1 m square.
        const double lam08 = speed_of_light_m_s / 0.8e9;
        CHECK(std::abs(required_area(100.0, lam08).side_m - 6.1) < 0.05);

        // 28 GHz, f_e = 1 km, typical conditions (u = 0.5, eps = 0.5).
        const double lam28 = speed_of_light_m_s / 28.0e9;
        CHECK(std::abs(required_area(1000.0, lam28, 0.5, 0.5, 0.5).side_m - 4.7) < 0.05);

        // 60 GHz, f_e = 0.1 km, ideal: 141.4 wavelengths on a side.
        const double lam60 = speed_of_light_m_s / 60.0e9;
        CHECK(std::abs(required_area(100.0, lam60).side_lambda - 141.4) < 0.1);
    }

    SECTION("the sized surface exactly restores the specular budget")
    {
        std::mt19937_64 rng(79);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < 30; ++k) {
            FarScenario fs;
            fs.r_i_m = 20.0 + 500.0 * unit(rng);
            fs.r_s_m = 20.0 + 500.0 * unit(rng);
            fs.wavelength_m = 0.05 + 0.5 * unit(rng);
            fs.u_i = 0.3 + 0.7 * unit(rng);
            fs.u_s = 0.3 + 0.7 * unit(rng);
            fs.efficiency = 0.3 + 0.7 * unit(rng);
            const double fe = effective_focal_length(fs.r_i_m, fs.r_s_m);
            fs.area_m2 = required_area(fe, fs.wavelength_m, fs.u_i, fs.u_s, fs.efficiency)
                             .area_m2;
            CHECK(std::abs(specular_ratio(fs) - 1.0) < 1e-12);
        }
    }

    SECTION("solving the ratio for A independently gives the same area")
    {
        // ratio scales as A^2, so the break-even area is A0 / sqrt(ratio(A0))
        // for any starting guess A0 -- computed here without looking inside
        // required_area.
        FarScenario fs;
        fs.r_i_m = 300.0;
        fs.r_s_m = 90.0;
        fs.wavelength_m = 0.125;
        fs.u_i = 0.8;
        fs.u_s = 0.55;
        fs.efficiency = 0.6;
        fs.area_m2 = 1.0;
        const double solved = 1.0 / std::sqrt(specular_ratio(fs));
        const double sized = required_area(effective_focal_length(fs.r_i_m, fs.r_s_m),
                                           fs.wavelength_m, fs.u_i, fs.u_s, fs.efficiency)
                                 .area_m2;
        CHECK(rel_diff(solved, sized) < 1e-12);
    }

    SECTION("typical conditions grow the side by a fixed factor")
    {
        const RequiredArea ideal = required_area(250.0, 0.2);
        const RequiredArea typical = required_area(250.0, 0.2, 0.5, 0.5, 0.5);
        CHECK(rel_diff(typical.area_m2 / ideal.area_m2, 2.0994333672461345) < 1e-12);
        CHECK(rel_diff(typical.side_m / ideal.side_m, 1.4489421545548789) < 1e-12);
    }

    SECTION("electrical size scales as lambda^{-1/2}")
    {
        // Doubling the frequency halves the wavelength exactly; the side in
        // wavelengths must grow by sqrt(2).
        const double lam = speed_of_light_m_s / 5.8e9;
        const RequiredArea a = required_area(400.0, lam, 0.7, 0.9, 0.8);
        const RequiredArea b = required_area(400.0, lam / 2.0, 0.7, 0.9, 0.8);
        CHECK(rel_diff(b.side_lambda / a.side_lambda, std::sqrt(2.0)) < 1e-12);
    }

    SECTION("degenerate and invalid inputs")
    {
        const RequiredArea zero = required_area(0.0, 0.1);
        CHECK(zero.degenerate);
        CHECK(zero.area_m2 == 0.0);
        CHECK(zero.side_m == 0.0);

        CHECK_THROWS_AS(required_area(100.0, 0.1, 0.0, 1.0), divergence_error);
        CHECK_THROWS_AS(required_area(100.0, 0.1, 1.0, 0.0), divergence_error);
        CHECK_THROWS_AS(required_area(100.0, 0.1, 1.5, 1.0), model_domain_error);
        CHECK_THROWS_AS(required_area(100.0, 0.1, 1.0, 1.0, 1.5), model_domain_error);
        CHECK_THROWS_AS(required_area(-5.0, 0.1), model_domain_error);
        CHECK_THROWS_AS(required_area(100.0, 0.0), model_domain_error);
    }
}

TEST_CASE("far forms converge to the exact engine", "[farfield]")
{
    // 20x20 surface, both terminals at 1000 lambda: the focused far form and
    // the exact per-element sum agree to well under half a dB.
    Scenario sc;
    sc.wavelength_m = 0.5;
    sc.ris = build_square_grid(20, 20, 0.25);
    sc.tx = terminal_from_position({0.0, 0.0, 500.0});
    sc.rx = terminal_from_polar(500.0, 25.0 * deg_to_rad);
    const double exact_db = path_loss(sc, focusing_coefficients(sc)).loss_db;

    FarScenario fs;
    fs.r_i_m = 500.0;
    fs.r_s_m = 500.0;
    fs.u_i = 1.0;
    fs.u_s = std::cos(25.0 * deg_to_rad);
    fs.wavelength_m = sc.wavelength_m;
    fs.n_elements = 400.0;
    const double far_db = -10.0 * std::log10(far_path_loss_focused(fs));
    CHECK(std::abs(exact_db - far_db) < 0.5);
}
