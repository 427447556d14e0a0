#include <doctest.h>

#include <cmath>
#include <random>

#include "hepm/parabola.hpp"

using namespace hepm;
using doctest::Approx;

TEST_CASE("membership examples") {
    const double C = 0.6;
    CHECK(contains(region(Family::E, C), {0.0, 0.0}));
    for (Family f : {Family::B, Family::D, Family::E, Family::V}) CHECK(contains(region(f, C), {0.0, 0.5}));
    CHECK(contains(region(Family::B, C), {0.59, 0.05}));
    CHECK_FALSE(contains(region(Family::E, C), {0.59, 0.05}));
    CHECK(contains(region(Family::A, C), {0.0, 0.5}));
    CHECK_FALSE(contains(region(Family::A, C), {0.5, 0.5}));
    CHECK_FALSE(contains(region(Family::B, C), {0.0, -0.1}));
    CHECK(contains(region(Family::E1, C), {0.0, 0.5}));
    for (int i = 1; i <= 9; ++i) {
        const double c = 0.1 * i;
        CHECK(contains(region(Family::E, c), {0.0, c * c / (2 - c * c)}));
    }
}

TEST_CASE("cutoffs and translations") {
    const double C = 0.6;
    const RegionSpec seg = lineal_cut(region(Family::E, C), 0.5);
    CHECK(contains(seg, {0.0, 0.49}));
    CHECK_FALSE(contains(seg, {0.0, 0.51}));
    const RegionSpec band = band_segment(C, 0.5);
    CHECK(band.family == Family::BandSegment);
    CHECK(contains(band, {0.5, 0.2}));
    CHECK_FALSE(contains(band, {0.0, 0.6}));
    const RegionSpec h = horocyclic_cut(region(Family::D, C), 5.0);
    CHECK(contains(h, bph_to_bck({0.0, 4.9})));
    CHECK_FALSE(contains(h, bph_to_bck({0.0, 5.1})));
    const double w = 0.3;
    const RegionSpec up = translated_up(region(Family::B, C), w);
    CHECK(y_extent(up).lo == Approx(std::tanh(w)).epsilon(1e-15));
    CHECK_FALSE(contains(up, {0.0, std::tanh(w) - 1e-3}));
    CHECK(contains(up, {0.0, std::tanh(w) + 1e-3}));
    // translating moves the vertex of D to (0, tanh w)
    const RegionSpec dup = translated_up(region(Family::D, C), w);
    CHECK(contains(dup, {0.0, std::tanh(w) + 1e-6}));
    CHECK_FALSE(contains(dup, {0.0, std::tanh(w) - 1e-6}));
    const BckPoint moved = translate_axis({0.0, 0.0}, w);
    CHECK(moved.y == Approx(std::tanh(w)));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(region(Family::E, 0.0)), RegionSpecError);
    CHECK_THROWS_AS(validate(region(Family::E, 1.0)), RegionSpecError);
    CHECK_THROWS_AS(validate(lineal_cut(region(Family::E, 0.5), 1.0)), RegionSpecError);
    CHECK_THROWS_AS(validate(horocyclic_cut(region(Family::E, 0.5), 1.0)), RegionSpecError);
    CHECK_NOTHROW(validate(region(Family::E1, 0.0)));
    CHECK(family_from_name("E1") == Family::E1);
    CHECK_FALSE(family_from_name("Q").has_value());
    CHECK(family_name(Family::D) == "D");
}

TEST_CASE("cross sections") {
    const double C = 0.6;
    const auto s = cross_section(region(Family::B, C), 0.0);
    REQUIRE(s.size() == 1);
    CHECK(s[0].lo == Approx(-C));
    CHECK(s[0].hi == Approx(C));
    const auto e = cross_section(region(Family::E, C), 0.5);
    REQUIRE(e.size() == 1);
    // x^2 / C^2 = 2y - 2y^2
    CHECK(e[0].hi == Approx(C * std::sqrt(0.5)).epsilon(1e-14));
    CHECK(cross_section(region(Family::E, C), -0.1).empty());
    const auto diff = subtract(cross_section(region(Family::B, C), 0.5), e);
    CHECK(diff.size() == 2);
}

TEST_CASE("synthetic elements") {
    const SyntheticElements s = synthetic_elements(0.6);
    CHECK(s.focal_distance == Approx(std::log(1.25)).epsilon(1e-14));
    CHECK(s.focal_distance == Approx(0.2231436).epsilon(1e-7));
    CHECK(s.focal_distance_ln == Approx(s.focal_distance).epsilon(1e-13));
    CHECK(s.band_radius == Approx(0.6931472).epsilon(1e-7));
    CHECK(std::cosh(s.band_radius) == Approx(std::exp(s.focal_distance)).epsilon(1e-13));
    CHECK(approx_equal_up_to_scale(s.supporting_horocycle, ConicForm(1, 0, 0, 2, -1, 0)));
    CHECK(s.focus.y == Approx(0.36 / 1.64));
    CHECK(synthetic_elements(1.0 - 1e-9).focal_distance > 9.0);
    // directrix horocycle passes through the asymptotic point and the band vertices (+-C, 0)
    for (const Homogeneous& p : {Homogeneous{0, 1, 1}, Homogeneous{0.6, 0, 1}, Homogeneous{-0.6, 0, 1}})
        CHECK(std::abs(s.directrix_horocycle.eval(p)) <= 1e-14);
    CHECK_THROWS_AS(synthetic_elements(0.0), DomainError);
}

TEST_CASE("parabola and horocycle points") {
    const double C = 0.6;
    const BckPoint p0 = parabola_point(C, 0.0), h0 = horocycle_point(C, 0.0);
    CHECK(p0.x == 0.0);
    CHECK(p0.y == 0.0);
    CHECK(h0.y == Approx(-C * C / (2 - C * C)));
    const BckPoint p1 = parabola_point(C, 1.0);
    CHECK(p1.x == Approx(0.4186047).epsilon(1e-7));
    CHECK(p1.y == Approx(0.5813953).epsilon(1e-7));
    for (double t : {-7.0, -1.0, 0.3, 1.0, 50.0}) {
        const BckPoint p = parabola_point(C, t), h = horocycle_point(C, t);
        CHECK(std::abs(h_parabola_form(C).eval(to_homogeneous(p))) <= 1e-14);
        CHECK(std::abs(synthetic_elements(C).directrix_horocycle.eval(to_homogeneous(h))) <= 1e-14);
        CHECK(std::abs(p.x + t * (p.y - 1)) <= 1e-14);
        CHECK(std::abs(h.x + t * (h.y - 1)) <= 1e-14);
    }
    CHECK(parabola_point(C, 1e9).y == Approx(1.0));
    CHECK(horocycle_point(C, -1e9).y == Approx(1.0));
}

TEST_CASE("Killing identity") {
    const KillingResult k = killing_residual(0.6, 1.0);
    CHECK(k.residual <= 1e-12);
    CHECK(k.closed_arcosh == Approx(std::acosh(1.2304 / 0.96)).epsilon(1e-14));
    CHECK(k.closed_arcosh == Approx(0.7339692).epsilon(1e-7));
    CHECK(k.dist_hp == Approx(k.closed_arcosh).epsilon(1e-12));
    CHECK(k.closed_artanh == Approx(k.closed_arcosh).epsilon(1e-12));
    const KillingResult z = killing_residual(0.6, 0.0);
    CHECK(z.dist_pf == Approx(synthetic_elements(0.6).focal_distance).epsilon(1e-13));
    for (int i = 1; i <= 9; ++i)
        for (int j = 0; j <= 40; ++j) CHECK(killing_residual(0.1 * i, -10.0 + 0.5 * j).residual <= 1e-12);
}

TEST_CASE("notable distances") {
    const NotableDistances n = notable_distances(0.6);
    CHECK(n.half_ln3 == Approx(0.5493061).epsilon(1e-7));
    CHECK(n.half_ln3 == Approx(n.half_ln3_artanh).epsilon(1e-13));
    CHECK(n.anti_axial == Approx(0.4528807).epsilon(1e-7));
    CHECK(n.anti_axial == Approx(n.anti_axial_arsinh).epsilon(1e-13));
    CHECK(n.ln_silver == Approx(n.ln_silver_arsinh).epsilon(1e-13));
    CHECK(n.half_ln2 == Approx(n.half_ln2_artanh).epsilon(1e-13));
    CHECK(n.facing_horocyclic_arc == Approx(2.0).epsilon(1e-14));
    CHECK(n.classical_parameter == Approx(std::atanh(0.36)));
}

TEST_CASE("half-plane transcription and nesting") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 1; i <= 9; ++i) {
        const double C = 0.1 * i;
        const BphPoint f = bck_to_bph(synthetic_elements(C).focus);
        CHECK(f.y == Approx(1.0 / std::sqrt(1 - C * C)).epsilon(1e-12));
        int disagree = 0, broken = 0;
        for (int k = 0; k < 2000; ++k) {
            const BckPoint p{u(rng), u(rng)};
            if (p.x * p.x + p.y * p.y > 0.998) continue;
            const bool inB = contains(region(Family::B, C), p), inD = contains(region(Family::D, C), p);
            const bool inE = contains(region(Family::E, C), p), inV = contains(region(Family::V, C), p);
            if ((inV && !inE) || (inE && !inD) || (inD && !inB)) ++broken;
            for (Family fam : {Family::E, Family::B, Family::D, Family::V, Family::A, Family::E1}) {
                const RegionSpec r = region(fam, C);
                if (boundary_margin(r, p) < 1e-9 || boundary_margin_bph(r, bck_to_bph(p)) < 1e-9) continue;
                if (contains(r, p) != contains_bph(r, bck_to_bph(p))) ++disagree;
            }
        }
        CHECK(broken == 0);
        CHECK(disagree == 0);
    }
}
