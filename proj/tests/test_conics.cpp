#include <doctest.h>

#include <cmath>
#include <random>

#include "hepm/conics.hpp"
#include "hepm/parabola.hpp"

using namespace hepm;
using doctest::Approx;

namespace {

bool same_point(const Homogeneous& a, const Homogeneous& b, double tol) {
    const Homogeneous ca = canonical_point(a), cb = canonical_point(b);
    for (int i = 0; i < 3; ++i)
        if (std::abs(ca[i] - cb[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("dual conic examples") {
    const ConicForm abs = absolute_form();
    CHECK(approx_equal_up_to_scale(ConicForm::from_matrix(dual_conic(abs).matrix()), abs, 1e-15));
    const double C = 0.5;
    const ConicForm d = dual_conic(h_parabola_form(C));
    CHECK(d.kind() == ConicKind::Dual);
    CHECK(approx_equal_up_to_scale(d, ConicForm(C * C, 0, 0, 0, -1, -2, ConicKind::Dual), 1e-14));
    CHECK(approx_equal_up_to_scale(d, h_parabola_dual(C), 1e-14));
    CHECK_THROWS_AS(dual_conic(ConicForm::diagonal(1, 1, 0)), SingularConicError);
}

TEST_CASE("canonical scale") {
    const ConicForm c = ConicForm(-2, 0, 0, -4, 1, 0).canonical();
    CHECK(c(0, 0) == Approx(0.5));
    CHECK(c(1, 1) == Approx(1.0));
    CHECK(c(1, 2) == Approx(-0.25));
    CHECK(c(2, 1) == c(1, 2));
    CHECK(conic_rank(ConicForm::diagonal(1, 1, -1)) == 3);
    CHECK(conic_rank(ConicForm::diagonal(1, -1, 0)) == 2);
    CHECK(conic_rank(ConicForm::diagonal(1, 0, 0)) == 1);
}

TEST_CASE("pencil of the dual absolute and the dual parabola") {
    const double C = 0.6;
    const auto members = pencil_singular_members(dual_absolute(), dual_conic(h_parabola_form(C)));
    REQUIRE(members.size() == 2);
    CHECK(members[0].lambda / members[0].mu == Approx(0.36).epsilon(1e-12));
    CHECK(members[1].lambda / members[1].mu == Approx(1.0).epsilon(1e-12));
    for (const auto& m : members) {
        CHECK(m.degenerate);
        CHECK(m.rank == 2);
    }
    // the C^2 member splits into (0,1) and (0, C^2/(2-C^2)); the other is imaginary
    const SplitResult s = split_degenerate_dual(members[0].form);
    REQUIRE_FALSE(s.imaginary);
    const bool order = same_point(s.first, {0, 1, 1}, 1e-12);
    CHECK(same_point(order ? s.first : s.second, {0, 1, 1}, 1e-12));
    CHECK(same_point(order ? s.second : s.first, {0, 0.36, 1.64}, 1e-12));
    CHECK(split_degenerate_dual(members[1].form).imaginary);
    CHECK_THROWS_AS(pencil_singular_members(dual_absolute(), dual_absolute().scaled(3.0)), DomainError);
}

TEST_CASE("splitting") {
    const SplitResult s = split_degenerate_dual(ConicForm(0, 0, 0, 0, 1, 0, ConicKind::Dual));
    REQUIRE_FALSE(s.imaginary);
    CHECK(((same_point(s.first, {0, 1, 0}, 1e-14) && same_point(s.second, {0, 0, 1}, 1e-14)) ||
           (same_point(s.first, {0, 0, 1}, 1e-14) && same_point(s.second, {0, 1, 0}, 1e-14))));
    CHECK_THROWS_AS(split_degenerate_dual(dual_absolute()), RankError);
    CHECK(split_degenerate_dual(ConicForm::diagonal(1, 1, 0, ConicKind::Dual)).imaginary);
}

TEST_CASE("focus pipeline") {
    const HepFoci f = foci_of_h_elliptic_parabola(0.6);
    CHECK(f.proper_focus.x == Approx(0.0).epsilon(1e-12));
    CHECK(f.proper_focus.y == Approx(0.2195122).epsilon(1e-7));
    CHECK(same_point(f.asymptotic_focus, {0, 1, 1}, 1e-10));
    CHECK(f.residual <= 1e-10);
    const HepFoci g = foci_of_h_elliptic_parabola(0.801986429939);
    CHECK(g.proper_focus.y == Approx(0.4740373).epsilon(1e-7));
    const HepFoci small = foci_of_h_elliptic_parabola(1e-3);
    CHECK(std::abs(small.proper_focus.y) <= 1e-6);
    for (int i = 1; i <= 9; ++i) {
        const double C = 0.1 * i;
        const HepFoci h = foci_of_h_elliptic_parabola(C);
        CHECK(std::abs(h.proper_focus.y - C * C / (2 - C * C)) <= 1e-10);
        CHECK(std::abs(h.proper_focus.x) <= 1e-10);
    }
}

TEST_CASE("euclidean analog") {
    const EuclideanFoci f = euclidean_parabola_foci(2.0);
    CHECK(same_point(f.ideal_focus, {0, 1, 0}, 1e-12));
    CHECK(f.proper_focus.x == Approx(0.0));
    CHECK(f.proper_focus.y == Approx(1.0).epsilon(1e-12));
    CHECK(euclidean_parabola_foci(1.0).proper_focus.y == Approx(0.5).epsilon(1e-12));
    for (double p : {0.5, 1.0, 2.0, 4.0}) CHECK(euclidean_parabola_foci(p).proper_focus.y == Approx(p / 2).epsilon(1e-12));
    // members: the one singular member besides the Euclidean dual absolute itself
    bool found_absolute = false;
    for (const auto& m : f.members)
        if (m.rank == 2 && approx_equal_up_to_scale(ConicForm::from_matrix(m.form.matrix()),
                                                    ConicForm::from_matrix(euclidean_dual_absolute().matrix()), 1e-12))
            found_absolute = true;
    CHECK(found_absolute);
    CHECK_THROWS_AS(euclidean_parabola_foci(0.0), DomainError);
}

TEST_CASE("pole and polar") {
    const ConicForm abs = absolute_form();
    const double C = 0.6;
    CHECK(same_point(polar_line({C, 0, 1}, abs), {C, 0, -1}, 1e-15));
    CHECK(same_point(pole({C, 0, -1}, abs), {C, 0, 1}, 1e-15));
    // polar of the ideal point (0,-1) w.r.t. the supporting horocycle is y = 1/3
    const ConicForm hor(1, 0, 0, 2, -1, 0);
    CHECK(same_point(polar_line({0, -1, 1}, hor), {0, 3, -1}, 1e-14));
    CHECK_THROWS_AS(polar_line({1, 0, 0}, ConicForm::diagonal(1, 0, 0)), SingularConicError);
}

TEST_CASE("random involutions") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    while (tested < 100) {
        const ConicForm f(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
        if (std::abs(f.det()) < 1e-2) continue;
        ++tested;
        CHECK(approx_equal_up_to_scale(ConicForm::from_matrix(dual_conic(dual_conic(f)).matrix()), f, 1e-10));
        const Homogeneous p{u(rng), u(rng), u(rng)};
        CHECK(same_point(pole(polar_line(p, f), f), p, 1e-12));
    }
}

TEST_CASE("cubic roots") {
    const auto r = real_polynomial_roots(1, -6, 11, -6);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Approx(1.0));
    CHECK(r[1] == Approx(2.0));
    CHECK(r[2] == Approx(3.0));
    CHECK(real_polynomial_roots(1, 0, 1, 0).size() == 1);
    CHECK(real_polynomial_roots(1, -2, 1, 0).size() == 2);
}
