#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hepm/models.hpp"
#include "hepm/parabola.hpp"
#include "hepm/sds_geometry.hpp"

namespace hepm {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 60;  // bounds the number of adaptive subintervals
    std::vector<double> cutoff_schedule{1 - 1e-1, 1 - 1e-2, 1 - 1e-3, 1 - 1e-4, 1 - 1e-5, 1 - 1e-6};

    std::size_t subinterval_limit() const;
};

void validate(const QuadratureConfig& cfg);

struct OracleResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod on [a, b]; either end may be infinite.
OracleResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg = {});

enum class InnerMode { Bracket, Numeric };

// Hyperbolic area of a cut region (or of the finite A family), outer integral over y.
OracleResult quad_area_hyp(const RegionSpec& r, const QuadratureConfig& cfg = {},
                           InnerMode mode = InnerMode::Bracket);
// Area of a \ b, sections subtracted line by line; y_hi caps the outer range.
OracleResult quad_area_hyp_difference(const RegionSpec& a, const RegionSpec& b, double y_hi,
                                      const QuadratureConfig& cfg = {}, InnerMode mode = InnerMode::Bracket);
OracleResult quad_area_hyp_disk(double C, const QuadratureConfig& cfg = {});

// curve(t) returns the point and its velocity
using Curve = std::function<std::pair<BckPoint, Vec2>(double)>;
OracleResult quad_len_hyp(const Curve& curve, double t0, double t1, const QuadratureConfig& cfg = {});

Curve hypercycle_arc(double C);   // x = C sqrt(1 - y^2), parameter y
Curve parabola_arc(double C);     // x^2/C^2 + 2y^2 - 2y = 0, rational parameter; C = 1 gives the horocycle
Curve horizontal_segment(double y);
Curve circle_arc(double radius);  // parameter is the angle

double parabola_arc_parameter(double C, double y);  // parameter value reaching height y

OracleResult quad_len_band_boundary(double C, double eta, const QuadratureConfig& cfg = {});
OracleResult quad_len_parabola_boundary(double C, double eta, const QuadratureConfig& cfg = {});
OracleResult quad_len_M(double C, double eta, const QuadratureConfig& cfg = {});
OracleResult quad_len_hyp_circle(double C, const QuadratureConfig& cfg = {});

// Half-plane area of the region below the horocyclic cutoff y = theta, sections found by bisection.
OracleResult quad_area_bph_strip(const RegionSpec& r, double theta, const QuadratureConfig& cfg = {});

enum class Order { DxThenDy, DyThenDx };

OracleResult quad_area_sds(const SdsRegion& r, const QuadratureConfig& cfg = {}, Order order = Order::DxThenDy,
                           InnerMode mode = InnerMode::Bracket);
OracleResult quad_len_sds_circle(double C, const QuadratureConfig& cfg = {});

// integral of (u^2 + v^2 - 1)^(-3/2) du over [lo, hi] through the closed antiderivative
double exterior_bracket(double lo, double hi, double v);

struct TrendResult {
    std::vector<double> values;
    double last = 0.0;
    double final_increment = 0.0;
    double decay_ratio = 0.0;  // last increment over the one before
    bool monotone = true;
    double extrapolated = 0.0;  // geometric tail added to the last value
};

TrendResult limit_trend(const std::function<double(double)>& f, const std::vector<double>& schedule);

}  // namespace hepm
