#include "hepm/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hepm/errors.hpp"

namespace hepm {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;
constexpr double kArtanhMargin = 1e-14;
constexpr double kLnSwitch = 1.0 - 1e-6;
// past this the complement is known exactly and the log form is better conditioned
constexpr double kComplementSwitch = 0.5;

void require_unit(double C, const char* what) {
    if (!(C > 0.0 && C < 1.0))
        throw DomainError(std::string(what) + ": C must lie in (0,1), got " + std::to_string(C));
}

void require_eta(double eta, const char* what) {
    if (!(eta > 0.0 && eta < 1.0))
        throw DomainError(std::string(what) + ": eta must lie in (0,1), got " + std::to_string(eta));
}

// sqrt(1 - C^2) without the cancellation near C = 1
double co(double C) { return std::sqrt((1.0 - C) * (1.0 + C)); }

double k_factor(double C) { return 2.0 * C / co(C); }

// artanh sqrt(1 - C^2) = ln((1 + s)/C)
double artanh_co(double C) { return std::log((1.0 + co(C)) / C); }

}  // namespace

double artanh_checked(double z) {
    if (!(std::abs(z) < 1.0 - kArtanhMargin))
        throw DomainError("artanh argument outside (-1,1): " + std::to_string(z));
    if (std::abs(z) > kLnSwitch) return 0.5 * std::log((1.0 + z) / (1.0 - z));
    return std::atanh(z);
}

double artanh_sqrt_ratio(double a, double A, double A_minus_a) {
    if (!(a >= 0.0 && A > 0.0 && A_minus_a > 0.0))
        throw DomainError("artanh of sqrt ratio: need 0 <= a < A");
    const double z2 = a / A;
    if (z2 > kComplementSwitch) {
        // ln((sqrt A + sqrt a)/sqrt(A - a))
        return std::log((std::sqrt(A) + std::sqrt(a)) / std::sqrt(A_minus_a));
    }
    return artanh_checked(std::sqrt(z2));
}

double focal_distance(double C) {
    require_unit(C, "focal_distance");
    const double z = C * C / (2.0 - C * C);
    if (z > kComplementSwitch) return -std::log(co(C));
    return artanh_checked(z);
}

double area_band_segment(double C, double eta) {
    require_unit(C, "area_band_segment");
    require_eta(eta, "area_band_segment");
    return k_factor(C) * artanh_checked(eta);
}

double area_parabola_segment(double C, double eta) {
    require_unit(C, "area_parabola_segment");
    require_eta(eta, "area_parabola_segment");
    const double s2 = (1.0 - C) * (1.0 + C);
    const double A = 1.0 + eta - 2.0 * C * C * eta;
    const double first = artanh_sqrt_ratio(2.0 * eta * s2, A, 1.0 - eta);
    return k_factor(C) * first - 2.0 * std::atan(C * std::sqrt(2.0 * eta) / std::sqrt(A));
}

double area_horodisk_segment(double eta) {
    require_eta(eta, "area_horodisk_segment");
    const double w = std::sqrt(2.0 * eta / (1.0 - eta));
    return 2.0 * w - 2.0 * std::atan(w);
}

double area_asymptotic_triangle(double C) {
    require_unit(C, "area_asymptotic_triangle");
    return 2.0 * std::asin(C);
}

double area_asymptotic_triangle_defect(double C) {
    require_unit(C, "area_asymptotic_triangle_defect");
    // angles 0 at the asymptotic vertex and pi/2 - arcsin C at the two base vertices
    return kPi - 2.0 * (kPi / 2.0 - std::asin(C));
}

double area_diff_B_minus_E(double C) {
    require_unit(C, "area_diff_B_minus_E");
    return k_factor(C) * (focal_distance(C) - kLn2) + 2.0 * std::asin(C);
}

double area_diff_B_minus_E_limit_form(double C) {
    require_unit(C, "area_diff_B_minus_E_limit_form");
    const double s = co(C);
    return k_factor(C) * std::log(1.0 / (2.0 * s)) + 2.0 * std::atan(C / s);
}

double area_diff_B_minus_E_segment(double C, double eta) {
    return area_band_segment(C, eta) - area_parabola_segment(C, eta);
}

double band_recombination(double C) {
    require_unit(C, "band_recombination");
    const double focal_eta = C * C / (2.0 - C * C);
    return area_band_segment(C, focal_eta) - area_band_segment(C, 0.6) + area_asymptotic_triangle(C);
}

double area_diff_D_minus_E(double C) {
    require_unit(C, "area_diff_D_minus_E");
    return k_factor(C) * (1.0 - kLn2);
}

double area_diff_D_minus_E_recombined(double C) {
    require_unit(C, "area_diff_D_minus_E_recombined");
    const double y = C * C / (2.0 - C * C);
    return area_diff_B_minus_E_limit_form(C) - area_band_segment(C, y) + area_horodisk_segment(y);
}

double translation_equiv_constant() { return 1.0 - kLn2; }

double alpha(double C) {
    require_unit(C, "alpha");
    return focal_distance(C) + alpha_deviation(C);
}

double alpha_deviation(double C) {
    require_unit(C, "alpha_deviation");
    return -kLn2 + std::asin(C) / C * co(C);
}

double artanh_alpha(double C) { return artanh_checked(alpha(C)); }

double alpha_limit_at_zero() { return 1.0 - kLn2; }

double alpha_deviation_limit_at_one() { return -kLn2; }

RootResult alpha_root(double tol, double lo, double hi) {
    if (!(tol > 0.0)) throw ConfigError("alpha_root: tolerance must be positive");
    if (!(lo > 0.0 && hi < 1.0 && lo < hi)) throw ConfigError("alpha_root: bracket must satisfy 0 < lo < hi < 1");
    double flo = alpha_deviation(lo);
    const double fhi = alpha_deviation(hi);
    if (flo * fhi > 0.0) throw ConfigError("alpha_root: bracket does not contain a sign change");
    RootResult res;
    while (res.iterations < 200 && 0.5 * (hi - lo) > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = alpha_deviation(mid);
        ++res.iterations;
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    res.root = 0.5 * (lo + hi);
    res.error_bound = 0.5 * (hi - lo);
    return res;
}

double len_band_segment_boundary(double C, double eta) {
    require_unit(C, "len_band_segment_boundary");
    require_eta(eta, "len_band_segment_boundary");
    return 2.0 * artanh_checked(eta) / co(C) + 2.0 * artanh_checked(C);
}

double len_parabola_segment_boundary(double C, double eta) {
    require_unit(C, "len_parabola_segment_boundary");
    require_eta(eta, "len_parabola_segment_boundary");
    const double C2 = C * C;
    const double s2 = (1.0 - C) * (1.0 + C);
    const double A = C2 + 2.0 * eta - 3.0 * C2 * eta;
    const double t1 = artanh_sqrt_ratio(2.0 * eta * s2, A, C2 * (1.0 - eta));
    const double t2 = artanh_sqrt_ratio(2.0 * eta * s2 * s2, A, C2 * (1.0 + eta - 2.0 * C2 * eta));
    return 2.0 * (t1 / co(C) - t2);
}

double len_horocycle_segment(double eta) {
    require_eta(eta, "len_horocycle_segment");
    return 2.0 * std::sqrt(2.0 * eta / (1.0 - eta));
}

double chord_arc_relation(double r) {
    if (!(r > 0.0)) throw DomainError("chord_arc_relation: r must be positive");
    return 2.0 * std::sinh(r);
}

double horocycle_chord_half(double eta) {
    require_eta(eta, "horocycle_chord_half");
    return artanh_sqrt_ratio(2.0 * eta, 1.0 + eta, 1.0 - eta);
}

double len_M(double C, double eta) {
    require_unit(C, "len_M");
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("len_M: eta must lie in (0,1]");
    const double r = std::sqrt(2.0 * eta);
    const double gap = (1.0 - eta) / (std::sqrt(eta + 1.0) + r);  // sqrt(eta+1) - sqrt(2 eta)
    const double den = gap + (1.0 - C) * (1.0 + C) * r;
    return 2.0 * artanh_checked(gap * C / den);
}

double len_diff_B_minus_E_segment(double C, double eta) {
    return len_band_segment_boundary(C, eta) - len_parabola_segment_boundary(C, eta);
}

double G(double C) {
    require_unit(C, "G");
    const double s = co(C);
    return 2.0 * std::log(C / (2.0 * s)) / s + 2.0 * artanh_co(C) + 2.0 * artanh_checked(C);
}

double Gprime(double C) {
    require_unit(C, "Gprime");
    const double s = co(C);
    return 2.0 * (std::log(C) - kLn2) / s + 2.0 * artanh_co(C) + 2.0 * C / s;
}

double Ghat(double C) {
    require_unit(C, "Ghat");
    const double s = co(C);
    return 2.0 * (std::log(2.0 / C) / s - artanh_co(C));
}

double beta(double C) {
    require_unit(C, "beta");
    const double s = co(C);
    return std::log(C / (2.0 * s)) + s * (artanh_co(C) + artanh_checked(C));
}

double beta_hat_D(double C) {
    require_unit(C, "beta_hat_D");
    return std::log(C) - kLn2 + co(C) * artanh_co(C) + C;
}

double beta_hat_V(double C) {
    require_unit(C, "beta_hat_V");
    return std::log(2.0 / C) - co(C) * artanh_co(C);
}

double beta_deviation_limit_at_one() { return -kLn2; }
double beta_hat_D_limit_at_one() { return 1.0 - kLn2; }
double beta_hat_V_limit_at_one() { return kLn2; }

double disk_area(double R) {
    if (!(R > 0.0)) throw DomainError("disk_area: R must be positive");
    const double h = std::sinh(0.5 * R);
    return 4.0 * kPi * h * h;  // 2 pi (cosh R - 1)
}

double disk_circumference(double R) {
    if (!(R > 0.0)) throw DomainError("disk_circumference: R must be positive");
    return 2.0 * kPi * std::sinh(R);
}

double bph_area_diff_D_minus_V(double C) {
    require_unit(C, "bph_area_diff_D_minus_V");
    return k_factor(C);
}

double bph_area_diff_E_minus_V(double C) {
    require_unit(C, "bph_area_diff_E_minus_V");
    return k_factor(C) * kLn2;
}

double bph_area_D_horocyclic(double C, double theta) {
    require_unit(C, "bph_area_D_horocyclic");
    if (!(theta >= 1.0)) throw DomainError("horocyclic cutoff must be >= 1");
    return k_factor(C) * std::log(theta);
}

double bph_area_E_horocyclic(double C, double theta) {
    require_unit(C, "bph_area_E_horocyclic");
    if (!(theta >= 1.0)) throw DomainError("horocyclic cutoff must be >= 1");
    const double w = std::sqrt((theta - 1.0) * (theta + 1.0));
    return k_factor(C) * (-w / theta + std::log(theta + w));
}

double bph_area_V_horocyclic(double C, double theta) {
    require_unit(C, "bph_area_V_horocyclic");
    if (!(theta >= 1.0)) throw DomainError("horocyclic cutoff must be >= 1");
    return k_factor(C) * (std::log(theta) - 1.0 + 1.0 / theta);
}

double bph_area_diff_D_minus_E_horocyclic(double C, double theta) {
    require_unit(C, "bph_area_diff_D_minus_E_horocyclic");
    if (!(theta >= 1.0)) throw DomainError("horocyclic cutoff must be >= 1");
    const double u = std::sqrt((1.0 - 1.0 / theta) * (1.0 + 1.0 / theta));
    return k_factor(C) * (u - std::log1p(u));
}

double bph_area_diff_D_minus_V_horocyclic(double C, double theta) {
    require_unit(C, "bph_area_diff_D_minus_V_horocyclic");
    if (!(theta >= 1.0)) throw DomainError("horocyclic cutoff must be >= 1");
    return k_factor(C) * (1.0 - 1.0 / theta);
}

double bph_len_diff_D_minus_E_horocyclic(double C, double theta) {
    require_unit(C, "bph_len_diff_D_minus_E_horocyclic");
    if (!(theta > 1.0)) throw DomainError("horocyclic cutoff must be > 1");
    const double C2 = C * C;
    const double s = co(C);
    const double w2 = (theta - 1.0) * (theta + 1.0);
    const double q2 = C2 + w2;
    const double lead = (C + std::log(C * theta / (std::sqrt(q2) + std::sqrt(w2)))) / s;
    return 2.0 * (lead + artanh_sqrt_ratio(s * s * w2, q2, C2 * theta * theta));
}

}  // namespace hepm
