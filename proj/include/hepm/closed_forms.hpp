#pragma once

namespace hepm {

// artanh with the |z| < 1 - 1e-14 guard
double artanh_checked(double z);
// artanh(sqrt(a/A)) for 0 <= a < A; A - a is passed separately so the log form stays exact near 1
double artanh_sqrt_ratio(double a, double A, double A_minus_a);

double focal_distance(double C);  // artanh(C^2/(2-C^2))

double area_band_segment(double C, double eta);
double area_parabola_segment(double C, double eta);
double area_horodisk_segment(double eta);
double area_asymptotic_triangle(double C);
double area_asymptotic_triangle_defect(double C);

double area_diff_B_minus_E(double C);
double area_diff_B_minus_E_limit_form(double C);  // (2C/s) ln(1/(2s)) + 2 arctan(C/s)
double area_diff_B_minus_E_segment(double C, double eta);
double band_recombination(double C);  // band(focal) - band(3/5) + triangle

double area_diff_D_minus_E(double C);
double area_diff_D_minus_E_recombined(double C);  // B\E - band(y*) + horodisk(y*)
double translation_equiv_constant();

double alpha(double C);
double alpha_deviation(double C);  // alpha - focal distance
double artanh_alpha(double C);     // the literal "artanh alpha" reading
double alpha_limit_at_zero();
double alpha_deviation_limit_at_one();

struct RootResult {
    double root = 0.0;
    double error_bound = 0.0;
    int iterations = 0;
};

RootResult alpha_root(double tol = 1e-10, double lo = 0.5, double hi = 0.95);

double len_band_segment_boundary(double C, double eta);
double len_parabola_segment_boundary(double C, double eta);
double len_horocycle_segment(double eta);
double chord_arc_relation(double r);       // 2 sinh r
double horocycle_chord_half(double eta);   // artanh sqrt(2 eta/(1+eta))
double len_M(double C, double eta);
double len_diff_B_minus_E_segment(double C, double eta);

double G(double C);
double Gprime(double C);
double Ghat(double C);

double beta(double C);
double beta_hat_D(double C);
double beta_hat_V(double C);
double beta_deviation_limit_at_one();
double beta_hat_D_limit_at_one();
double beta_hat_V_limit_at_one();

double disk_area(double R);
double disk_circumference(double R);

double bph_area_diff_D_minus_V(double C);
double bph_area_diff_E_minus_V(double C);
double bph_area_D_horocyclic(double C, double theta);
double bph_area_E_horocyclic(double C, double theta);
double bph_area_V_horocyclic(double C, double theta);
double bph_area_diff_D_minus_E_horocyclic(double C, double theta);
double bph_area_diff_D_minus_V_horocyclic(double C, double theta);
double bph_len_diff_D_minus_E_horocyclic(double C, double theta);

}  // namespace hepm
