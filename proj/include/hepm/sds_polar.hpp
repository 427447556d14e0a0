#pragma once

#include "hepm/conics.hpp"

namespace hepm {

// Co-polar boundary of E: C^2 x^2 + 2y - 2 = 0.
ConicForm copolar_boundary_of_E(double C);

struct CopolarBandBoundary {
    ConicForm hypercycle_dual;    // C^2 x^2 + y^2 - 1
    Homogeneous left_vertex_polar{};   // polar of (-C, 0): -Cx - 1 = 0
    Homogeneous right_vertex_polar{};  // polar of (C, 0): Cx - 1 = 0
    Homogeneous base_pole{};           // pole of y = 0, ideal point [0, 1, 0]
};

CopolarBandBoundary copolar_boundary_of_B(double C);

// arcoth x = artanh(1/x), |x| > 1
double arcoth_checked(double x);

double sds_area_W(double C, double eta);
double sds_area_E_tilde(double C, double eta);        // eta < 1
double sds_area_E_tilde_split(double C, double eta);  // eta in (-1, 1)
double sds_area_Z(double C);
double addition_lhs(double C, double eta);
double addition_rhs(double C, double eta);

// 2(W + Z - E) on one side pair, and its log transcription
double band_minus_parabola_copolar_area(double C, double eta);
double polar_ln_form(double C, double eta);  // eta in (0, 1]
double circumference_diff_via_polar(double C);

struct DiskDuality {
    double R = 0.0;
    double hyp_area = 0.0;
    double sds_boundary_len = 0.0;  // 2 pi cosh R
    double hyp_circumference = 0.0;
    double sds_copolar_area = 0.0;  // 2 pi sinh R
    double area_length_residual = 0.0;      // |area - (-2 pi + len)|
    double circumference_area_residual = 0.0;      // |circumference - area_SdS|
};

DiskDuality disk_duality_closed(double C);

}  // namespace hepm
