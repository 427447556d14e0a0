#pragma once

#include <array>
#include <optional>

#include "hepm/errors.hpp"

namespace hepm {

// Beltrami-Cayley-Klein disk chart.
struct BckPoint {
    double x = 0.0;
    double y = 0.0;
};

// Beltrami-Poincare half-plane chart.
struct BphPoint {
    double x = 0.0;
    double y = 1.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Projective point [x1, x2, x3] with x = x1/x3, y = x2/x3.
using Homogeneous = std::array<double, 3>;

inline constexpr double kInteriorMargin = 1e-14;

// 1 - x^2 - y^2, factored around the larger coordinate.
double one_minus_norm2(double x, double y);

bool is_interior(const BckPoint& p);
void require_interior(const BckPoint& p);

// arcosh(1 + u) for u >= 0
double arcosh1p(double u);

double bck_distance(const BckPoint& p, const BckPoint& q);
double bph_distance(const BphPoint& p, const BphPoint& q);

BphPoint bck_to_bph(const BckPoint& p);
BckPoint bph_to_bck(const BphPoint& p);

double hyp_area_density(const BckPoint& p);
double hyp_arclength_integrand(const BckPoint& p, const Vec2& v);
double bph_area_density(const BphPoint& p);
double bph_arclength_integrand(const BphPoint& p, const Vec2& v);

Homogeneous to_homogeneous(const BckPoint& p);
// nullopt for points on the ideal line
std::optional<BckPoint> to_affine(const Homogeneous& h, double tol = 1e-14);
Homogeneous canonical_point(const Homogeneous& h);

}  // namespace hepm
