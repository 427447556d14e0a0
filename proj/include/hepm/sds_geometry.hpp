#pragma once

#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include "hepm/models.hpp"

namespace hepm {

// Exterior of the absolute with the induced (sign flipped) metric.
double sds_area_density(const BckPoint& p);
// speed of a spacelike velocity v at p
double sds_arclength_integrand(const BckPoint& p, const Vec2& v);
bool is_exterior(const BckPoint& p);

enum class SdsTag { W, ETilde, Z, DiskCopolar, BandMinusParabola };
enum class Side { Minus, Plus };  // x <= 0 and its mirror image

struct SdsRegion {
    SdsTag tag = SdsTag::Z;
    double C = 0.5;
    double eta = 0.5;  // ignored by Z and DiskCopolar
    Side side = Side::Minus;
};

void validate(const SdsRegion& r);
std::string sds_tag_name(SdsTag t);
std::optional<SdsTag> sds_tag_from_name(std::string_view s);

bool sds_contains(const SdsRegion& r, const BckPoint& p);

// Closed interval with possibly infinite ends.
struct Span {
    double lo = 0.0;
    double hi = 0.0;
};

Span sds_y_range(const SdsRegion& r);
Span sds_x_range(const SdsRegion& r);
std::vector<Span> sds_x_section(const SdsRegion& r, double y);
std::vector<Span> sds_y_section(const SdsRegion& r, double x);

// Breakpoints of the section formulas inside the ranges.
std::vector<double> sds_y_breaks(const SdsRegion& r);
std::vector<double> sds_x_breaks(const SdsRegion& r);

}  // namespace hepm
