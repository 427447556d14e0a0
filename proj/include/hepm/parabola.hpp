#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hepm/conics.hpp"
#include "hepm/models.hpp"

namespace hepm {

enum class Family { E, B, D, V, A, E1, BandSegment };
enum class CutoffKind { Lineal, Horocyclic };

struct Cutoff {
    CutoffKind kind = CutoffKind::Lineal;
    double value = 0.5;  // eta for lineal, theta for horocyclic
};

struct RegionSpec {
    Family family = Family::E;
    double C = 0.5;  // unused by E1
    std::optional<Cutoff> cutoff;
    std::optional<double> translation;  // upward along the y-axis
};

RegionSpec region(Family f, double C);
RegionSpec lineal_cut(RegionSpec r, double eta);
RegionSpec horocyclic_cut(RegionSpec r, double theta);
RegionSpec translated_up(RegionSpec r, double omega);
RegionSpec band_segment(double C, double eta);

void validate(const RegionSpec& r);
std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view s);

inline constexpr double kMembershipTolerance = 1e-12;

// Homogeneous constraints on [x, y, 1]: quadric(p) <= 0 and line.p >= 0.
struct RegionForms {
    std::vector<ConicForm> quadrics;
    std::vector<Homogeneous> half_planes;
};

// Boost along the y-axis, moving the origin to (0, tanh omega).
Mat3 axis_translation(double omega);
BckPoint translate_axis(const BckPoint& p, double omega);

RegionForms region_forms(const RegionSpec& r);
bool contains(const RegionSpec& r, const BckPoint& p);
double boundary_margin(const RegionSpec& r, const BckPoint& p);

// Membership through the half-plane transcription of the family.
bool contains_bph(const RegionSpec& r, const BphPoint& p);
double boundary_margin_bph(const RegionSpec& r, const BphPoint& p);

// Horizontal section {x : (x, y) in region}; owners name the constraint fixing each end
// (-1 for the absolute).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    int lo_owner = -1;
    int hi_owner = -1;
};

std::vector<Interval> cross_section(const RegionForms& forms, double y);
std::vector<Interval> cross_section(const RegionSpec& r, double y);
std::vector<Interval> subtract(const std::vector<Interval>& a, const std::vector<Interval>& b);

struct YRange {
    double lo = 0.0;
    double hi = 1.0;
};

YRange y_extent(const RegionSpec& r);

struct SyntheticElements {
    BckPoint vertex;
    Homogeneous axis{};  // line x = 0
    BckPoint focus;
    Homogeneous asymptotic_point{};
    ConicForm supporting_horocycle;
    ConicForm directrix_horocycle;
    Homogeneous directrix_line{};  // polar of the focus, (3C^2 - 2) y = C^2
    double focal_distance = 0.0;
    double focal_distance_ln = 0.0;
    double band_radius = 0.0;
};

SyntheticElements synthetic_elements(double C);

BckPoint parabola_point(double C, double t);
BckPoint horocycle_point(double C, double t);

struct KillingResult {
    double residual = 0.0;
    double dist_hp = 0.0;
    double dist_pf = 0.0;
    double closed_arcosh = 0.0;
    double closed_artanh = 0.0;
};

KillingResult killing_residual(double C, double t);

struct NotableDistances {
    double half_ln3 = 0.0, half_ln3_artanh = 0.0;
    double ln_silver = 0.0, ln_silver_artanh = 0.0, ln_silver_arsinh = 0.0;
    double half_ln2 = 0.0, half_ln2_artanh = 0.0;
    double anti_axial = 0.0, anti_axial_arsinh = 0.0;
    double focal = 0.0, focal_ln = 0.0;
    double classical_parameter = 0.0;
    double band_radius = 0.0, band_radius_ln = 0.0;
    double facing_horocyclic_arc = 0.0;  // 2 sinh(ln(1 + sqrt 2))
};

NotableDistances notable_distances(double C);

}  // namespace hepm
