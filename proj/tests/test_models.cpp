#include <doctest.h>

#include <cmath>
#include <random>

#include "hepm/models.hpp"

using namespace hepm;
using doctest::Approx;

TEST_CASE("distance examples") {
    CHECK(bck_distance({0, 0}, {0, 0}) == 0.0);
    CHECK(bck_distance({0, 0}, {0.5, 0}) == Approx(std::atanh(0.5)).epsilon(1e-15));
    CHECK(bck_distance({0, 0}, {0.5, 0}) == Approx(0.5493061).epsilon(1e-7));
    CHECK(bck_distance({0.3, 0.4}, {-0.3, 0.4}) == Approx(2.0 * bck_distance({0, 0.4}, {0.3, 0.4})).epsilon(1e-13));
    CHECK_THROWS_AS(bck_distance({1.0, 0.0}, {0, 0}), DomainError);
    CHECK_THROWS_AS(bck_distance({0.8, 0.7}, {0, 0}), DomainError);
}

TEST_CASE("distance of nearby points keeps relative accuracy") {
    const double d = bck_distance({0.1, 0.2}, {0.1, 0.2 + 1e-9});
    // metric coefficient along y at (0.1, 0.2): sqrt(1 - x^2) / (1 - x^2 - y^2)
    CHECK(d == Approx(1e-9 * std::sqrt(0.99) / 0.95).epsilon(1e-6));
}

TEST_CASE("chart conversion examples") {
    BphPoint o = bck_to_bph({0, 0});
    CHECK(o.x == 0.0);
    CHECK(o.y == Approx(1.0));
    const double C = 0.6;
    BphPoint f = bck_to_bph({0, C * C / (2 - C * C)});
    CHECK(f.x == Approx(0.0));
    CHECK(f.y == Approx(1.25).epsilon(1e-14));
    BphPoint q = bck_to_bph({0.3, 0.4});
    CHECK(q.x == Approx(0.5).epsilon(1e-15));
    CHECK(q.y == Approx(std::sqrt(0.75) / 0.6).epsilon(1e-15));
    CHECK(q.y == Approx(1.4433757).epsilon(1e-7));
    BckPoint back = bph_to_bck(q);
    CHECK(back.x == Approx(0.3).epsilon(1e-14));
    CHECK(back.y == Approx(0.4).epsilon(1e-14));
    BckPoint top = bph_to_bck({0.0, 1e8});
    CHECK(top.y == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(bph_to_bck({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(bph_to_bck({0.0, -1.0}), DomainError);
}

TEST_CASE("half-plane distance examples") {
    CHECK(bph_distance({0.3, 2.0}, {0.3, 2.0}) == 0.0);
    CHECK(bph_distance({0, 1}, {0, std::exp(1.0)}) == Approx(1.0).epsilon(1e-14));
    const double eta = 0.7;
    CHECK(bph_distance({0, 1}, {0, std::sqrt(1 + eta) / std::sqrt(1 - eta)}) == Approx(std::atanh(eta)).epsilon(1e-14));
    CHECK_THROWS_AS(bph_distance({0, 0}, {0, 1}), DomainError);
}

TEST_CASE("densities and line elements") {
    CHECK(hyp_area_density({0, 0}) == 1.0);
    CHECK(hyp_area_density({0.6, 0}) == Approx(1.953125).epsilon(1e-14));
    CHECK(hyp_area_density({0, 0.8}) == Approx(1.0 / std::pow(0.36, 1.5)).epsilon(1e-14));
    CHECK(hyp_area_density({0, 0.8}) == Approx(4.6296296).epsilon(1e-7));
    CHECK_THROWS_AS(hyp_area_density({1, 0}), DomainError);
    CHECK(hyp_arclength_integrand({0, 0}, {1, 0}) == 1.0);
    for (double t : {0.1, 0.5, 0.9}) {
        CHECK(hyp_arclength_integrand({0, t}, {0, 1}) == Approx(1.0 / (1 - t * t)).epsilon(1e-14));
        const double C = 0.6;
        // hypercycle x = C sqrt(1 - t^2), velocity d/dt
        const BckPoint p{C * std::sqrt(1 - t * t), t};
        const Vec2 v{-C * t / std::sqrt(1 - t * t), 1.0};
        CHECK(hyp_arclength_integrand(p, v) == Approx(1.0 / (std::sqrt(1 - C * C) * (1 - t * t))).epsilon(1e-13));
    }
    CHECK(bph_area_density({5.0, 1.0}) == 1.0);
    CHECK(bph_area_density({0.0, 2.0}) == 0.25);
    CHECK(bph_arclength_integrand({0.0, 2.0}, {3.0, 4.0}) == Approx(2.5));
    CHECK_THROWS_AS(bph_area_density({0.0, 0.0}), DomainError);
}

TEST_CASE("interior guard") {
    CHECK(is_interior({0.0, 0.0}));
    CHECK(is_interior({0.0, 1.0 - 1e-13}));
    CHECK_FALSE(is_interior({0.0, 1.0}));
    CHECK(one_minus_norm2(0.6, 0.8) == Approx(0.0).epsilon(1e-15));
    CHECK(arcosh1p(0.0) == 0.0);
    CHECK(arcosh1p(1e-20) == Approx(std::sqrt(2e-20)).epsilon(1e-10));
    CHECK(arcosh1p(1.0) == Approx(std::acosh(2.0)).epsilon(1e-15));
}

TEST_CASE("homogeneous coordinates") {
    const Homogeneous h = canonical_point({0.0, -2.0, -4.0});
    CHECK(h[0] == 0.0);
    CHECK(h[1] == Approx(0.5));
    CHECK(h[2] == Approx(1.0));
    CHECK_FALSE(to_affine({0.0, 1.0, 0.0}).has_value());
    const auto p = to_affine({0.5, 1.0, 2.0});
    REQUIRE(p.has_value());
    CHECK(p->x == Approx(0.25));
    CHECK(p->y == Approx(0.5));
    CHECK_THROWS_AS(canonical_point({0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("properties on random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto draw = [&](double r2) {
        for (;;) {
            BckPoint p{u(rng), u(rng)};
            if (p.x * p.x + p.y * p.y <= r2) return p;
        }
    };
    for (int i = 0; i < 2000; ++i) {
        const BckPoint p = draw(0.99), q = draw(0.99), r = draw(0.99);
        const BckPoint back = bph_to_bck(bck_to_bph(p));
        CHECK(std::abs(back.x - p.x) <= 1e-12);
        CHECK(std::abs(back.y - p.y) <= 1e-12);
        const double d = bck_distance(p, q);
        CHECK(d >= 0.0);
        CHECK(std::abs(d - bck_distance(q, p)) <= 1e-13);
        CHECK(std::abs(d - bph_distance(bck_to_bph(p), bck_to_bph(q))) <= 1e-10);
        CHECK(bck_distance(p, r) <= d + bck_distance(q, r) + 1e-12);
    }
}
