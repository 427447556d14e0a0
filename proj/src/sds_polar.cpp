#include "hepm/sds_polar.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hepm/closed_forms.hpp"
#include "hepm/errors.hpp"

namespace hepm {

namespace {

void require_unit(double C, const char* what) {
    if (!(C > 0.0 && C < 1.0))
        throw DomainError(std::string(what) + ": C must lie in (0,1), got " + std::to_string(C));
}

double co(double C) { return std::sqrt((1.0 - C) * (1.0 + C)); }

// sqrt(1 - C^2 (1 + eta)/2)
double qv(double C, double eta) { return std::sqrt(1.0 - 0.5 * C * C * (1.0 + eta)); }

const Mat3 kFlip{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};

ConicForm flip_conjugate(const ConicForm& c) {
    Mat3 m = c.matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] *= kFlip[i][i] * kFlip[j][j];
    return ConicForm::from_matrix(m, ConicKind::Primal);
}

}  // namespace

ConicForm copolar_boundary_of_E(double C) {
    require_unit(C, "copolar_boundary_of_E");
    return flip_conjugate(dual_conic(h_parabola_form(C)));
}

CopolarBandBoundary copolar_boundary_of_B(double C) {
    require_unit(C, "copolar_boundary_of_B");
    CopolarBandBoundary b;
    b.hypercycle_dual = flip_conjugate(dual_conic(ConicForm::diagonal(1.0 / (C * C), 1.0, -1.0)));
    const ConicForm abs = absolute_form();
    b.left_vertex_polar = polar_line({-C, 0.0, 1.0}, abs);
    b.right_vertex_polar = polar_line({C, 0.0, 1.0}, abs);
    b.base_pole = pole({0.0, 1.0, 0.0}, dual_absolute());
    return b;
}

double arcoth_checked(double x) {
    if (!(std::abs(x) > 1.0)) throw DomainError("arcoth argument must satisfy |x| > 1");
    return artanh_checked(1.0 / x);
}

double sds_area_W(double C, double eta) {
    require_unit(C, "sds_area_W");
    if (!(eta > 0.0 && eta < 1.0)) throw DomainError("sds_area_W: eta must lie in (0,1)");
    const double s = co(C);
    // (1 - s)/s without cancellation at small C
    return C * C / (s * (1.0 + s)) * artanh_checked(eta);
}

double sds_area_E_tilde(double C, double eta) {
    require_unit(C, "sds_area_E_tilde");
    if (!(eta < 1.0) || !std::isfinite(eta)) throw DomainError("sds_area_E_tilde: eta must be below 1");
    const double s = co(C), q = qv(C, eta);
    const double gap = C * C * (1.0 - eta);  // difference of numerator and denominator below
    // artanh(s/q): q^2 - s^2 = C^2 (1 - eta)/2
    const double first = artanh_sqrt_ratio(s * s, q * q, 0.5 * gap);
    const double num = 2.0 - C * C + 2.0 * q;
    const double den = 2.0 - C * C * eta + 2.0 * q;
    // artanh(num/den) = ln((den + num)/(den - num))/2 with den - num = gap, exact near eta = 1
    const double second = 0.5 * std::log((num + den) / gap);
    return first / s - second;
}

double addition_lhs(double C, double eta) {
    require_unit(C, "addition_lhs");
    const double q = qv(C, eta);
    return artanh_checked((2.0 - C * C + 2.0 * q) / (2.0 - C * C * eta + 2.0 * q));
}

double addition_rhs(double C, double eta) {
    require_unit(C, "addition_rhs");
    if (!(std::abs(eta) < 1.0)) throw DomainError("the split form needs eta in (-1,1)");
    return artanh_checked(qv(C, eta)) + artanh_checked(eta);
}

double sds_area_E_tilde_split(double C, double eta) {
    require_unit(C, "sds_area_E_tilde_split");
    if (!(std::abs(eta) < 1.0)) throw DomainError("the split form needs eta in (-1,1)");
    const double s = co(C), q = qv(C, eta);
    const double first = artanh_sqrt_ratio(s * s, q * q, 0.5 * C * C * (1.0 - eta));
    return first / s - addition_rhs(C, eta);
}

double sds_area_Z(double C) {
    require_unit(C, "sds_area_Z");
    // [-arcoth x] from -inf to -1/C
    return -arcoth_checked(-1.0 / C);
}

double band_minus_parabola_copolar_area(double C, double eta) {
    return 2.0 * (sds_area_W(C, eta) + sds_area_Z(C) - sds_area_E_tilde(C, eta));
}

double polar_ln_form(double C, double eta) {
    require_unit(C, "polar_ln_form");
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("polar_ln_form: eta must lie in (0,1]");
    const double s = co(C), q = qv(C, eta);
    const double lead = std::log(C * std::sqrt(0.5 * (1.0 + eta)) / (q + s)) / s;
    // artanh q with q = sqrt(1 - C^2 (1+eta)/2): ln((1 + q)/(C sqrt((1+eta)/2)))
    const double aq = std::log((1.0 + q) / (C * std::sqrt(0.5 * (1.0 + eta))));
    return 2.0 * (lead + aq + artanh_checked(C));
}

double circumference_diff_via_polar(double C) { return polar_ln_form(C, 1.0); }

DiskDuality disk_duality_closed(double C) {
    require_unit(C, "disk_duality_closed");
    DiskDuality d;
    d.R = artanh_checked(C);
    d.hyp_area = disk_area(d.R);
    d.sds_boundary_len = 2.0 * std::numbers::pi * std::cosh(d.R);
    d.hyp_circumference = disk_circumference(d.R);
    d.sds_copolar_area = 2.0 * std::numbers::pi * C / co(C);
    d.area_length_residual = std::abs(d.hyp_area - (-2.0 * std::numbers::pi + d.sds_boundary_len));
    d.circumference_area_residual = std::abs(d.hyp_circumference - d.sds_copolar_area);
    return d;
}

}  // namespace hepm
