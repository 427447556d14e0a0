#include "hepm/parabola.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hepm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_C(double C) {
    if (!(C > 1e-12 && C < 1.0 - 1e-12)) throw DomainError("C must lie in (0,1)");
}

Family base_family(Family f) { return f == Family::BandSegment ? Family::B : f; }

ConicForm conjugate(const ConicForm& m, const Mat3& t) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) s += t[k][i] * m(k, l) * t[l][j];
            out[i][j] = s;
        }
    return ConicForm::from_matrix(out, m.kind());
}

Homogeneous pull_back(const Homogeneous& l, const Mat3& t) {
    Homogeneous out{};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[j] += l[k] * t[k][j];
    return out;
}

double dot(const Homogeneous& a, const Homogeneous& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// {x : a x^2 + b x + c <= 0} for a constraint with the given owner
std::vector<Interval> quadric_set(double a, double b, double c, int owner) {
    if (a == 0.0) {
        if (b == 0.0) return c <= 0.0 ? std::vector<Interval>{{-kInf, kInf, -1, -1}} : std::vector<Interval>{};
        const double x = -c / b;
        if (b > 0.0) return {{-kInf, x, -1, owner}};
        return {{x, kInf, owner, -1}};
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        if (a > 0.0) return {};
        return {{-kInf, kInf, -1, -1}};
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1 = q / a, r2 = q != 0.0 ? c / q : r1;
    if (r1 > r2) std::swap(r1, r2);
    if (a > 0.0) return {{r1, r2, owner, owner}};
    return {{-kInf, r1, -1, owner}, {r2, kInf, owner, -1}};
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out;
    for (const auto& u : a)
        for (const auto& v : b) {
            Interval w;
            if (u.lo >= v.lo) {
                w.lo = u.lo;
                w.lo_owner = u.lo_owner;
            } else {
                w.lo = v.lo;
                w.lo_owner = v.lo_owner;
            }
            if (u.hi <= v.hi) {
                w.hi = u.hi;
                w.hi_owner = u.hi_owner;
            } else {
                w.hi = v.hi;
                w.hi_owner = v.hi_owner;
            }
            if (w.lo < w.hi) out.push_back(w);
        }
    std::sort(out.begin(), out.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
    return out;
}

struct BphValues {
    std::vector<double> le;  // each must be <= 0
};

BphValues bph_values(const RegionSpec& r, const BphPoint& q) {
    double x = q.x, y = q.y;
    if (r.translation) {
        const double s = std::exp(-*r.translation);
        x *= s;
        y *= s;
    }
    BphValues v;
    const double C = r.C;
    const double k2 = (1.0 - C) * (1.0 + C) / (C * C);
    switch (base_family(r.family)) {
        case Family::E:
            v.le = {k2 * x * x - y * y + 1.0};
            break;
        case Family::B:
            v.le = {k2 * x * x - y * y, 1.0 - x * x - y * y};
            break;
        case Family::D:
            v.le = {k2 * x * x - y * y, 1.0 - y};
            break;
        case Family::V:
            v.le = {1.0 + std::sqrt(k2) * std::abs(x) - y};
            break;
        case Family::A:
            v.le = {std::abs(x) - C, 1.0 - x * x - y * y};
            break;
        case Family::E1:
            v.le = {1.0 - y};
            break;
        case Family::BandSegment:
            break;
    }
    if (r.cutoff) {
        if (r.cutoff->kind == CutoffKind::Horocyclic) {
            v.le.push_back(q.y - r.cutoff->value);
        } else {
            const double r2 = q.x * q.x + q.y * q.y;
            v.le.push_back((r2 - 1.0) / (r2 + 1.0) - r.cutoff->value);
        }
    }
    return v;
}

}  // namespace

RegionSpec region(Family f, double C) {
    RegionSpec r;
    r.family = f;
    r.C = C;
    return r;
}

RegionSpec lineal_cut(RegionSpec r, double eta) {
    r.cutoff = Cutoff{CutoffKind::Lineal, eta};
    return r;
}

RegionSpec horocyclic_cut(RegionSpec r, double theta) {
    r.cutoff = Cutoff{CutoffKind::Horocyclic, theta};
    return r;
}

RegionSpec translated_up(RegionSpec r, double omega) {
    r.translation = omega;
    return r;
}

RegionSpec band_segment(double C, double eta) { return lineal_cut(region(Family::BandSegment, C), eta); }

void validate(const RegionSpec& r) {
    if (r.family != Family::E1 && !(r.C > 1e-12 && r.C < 1.0 - 1e-12))
        throw RegionSpecError("C must lie in (0,1)");
    if (r.cutoff) {
        const double v = r.cutoff->value;
        if (r.cutoff->kind == CutoffKind::Lineal && !(v > 0.0 && v < 1.0))
            throw RegionSpecError("lineal cutoff must lie in (0,1)");
        if (r.cutoff->kind == CutoffKind::Horocyclic && !(v > 1.0 && std::isfinite(v)))
            throw RegionSpecError("horocyclic cutoff must exceed 1");
    }
    if (r.family == Family::BandSegment && (!r.cutoff || r.cutoff->kind != CutoffKind::Lineal))
        throw RegionSpecError("band segment needs a lineal cutoff");
    if (r.translation && !std::isfinite(*r.translation)) throw RegionSpecError("translation must be finite");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::V: return "V";
        case Family::A: return "A";
        case Family::E1: return "E1";
        case Family::BandSegment: return "BandSegment";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view s) {
    for (Family f : {Family::E, Family::B, Family::D, Family::V, Family::A, Family::E1, Family::BandSegment})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

Mat3 axis_translation(double omega) {
    const double c = std::cosh(omega), s = std::sinh(omega);
    return {{{1.0, 0.0, 0.0}, {0.0, c, s}, {0.0, s, c}}};
}

BckPoint translate_axis(const BckPoint& p, double omega) {
    const Mat3 t = axis_translation(omega);
    const double y = t[1][1] * p.y + t[1][2];
    const double w = t[2][1] * p.y + t[2][2];
    return {p.x / w, y / w};
}

RegionForms region_forms(const RegionSpec& r) {
    validate(r);
    RegionForms f;
    const double C = r.C;
    const ConicForm horodisk(1.0, 0.0, 0.0, 2.0, -1.0, 0.0);
    switch (base_family(r.family)) {
        case Family::E:
            f.quadrics.push_back(ConicForm(1.0 / (C * C), 0.0, 0.0, 2.0, -1.0, 0.0));
            break;
        case Family::B:
            f.quadrics.push_back(ConicForm::diagonal(1.0 / (C * C), 1.0, -1.0));
            f.half_planes.push_back({0.0, 1.0, 0.0});
            break;
        case Family::D:
            f.quadrics.push_back(ConicForm::diagonal(1.0 / (C * C), 1.0, -1.0));
            f.quadrics.push_back(horodisk);
            f.half_planes.push_back({0.0, 1.0, 0.0});
            break;
        case Family::V: {
            const double s = std::sqrt((1.0 - C) * (1.0 + C));
            for (double sg : {1.0, -1.0})
                f.quadrics.push_back(ConicForm(1.0, sg * C * s, -sg * C * s, 2.0 * C * C, -C * C, 0.0));
            break;
        }
        case Family::A:
            f.half_planes.push_back({-1.0, -C, C});
            f.half_planes.push_back({1.0, -C, C});
            f.half_planes.push_back({0.0, 1.0, 0.0});
            break;
        case Family::E1:
            f.quadrics.push_back(horodisk);
            break;
        case Family::BandSegment:
            break;
    }
    if (r.translation && *r.translation != 0.0) {
        const Mat3 t = axis_translation(-*r.translation);
        for (auto& q : f.quadrics) q = conjugate(q, t);
        for (auto& l : f.half_planes) l = pull_back(l, t);
    }
    if (r.cutoff) {
        const double v = r.cutoff->value;
        if (r.cutoff->kind == CutoffKind::Lineal) {
            f.half_planes.push_back({0.0, -1.0, v});
        } else {
            const double t2 = v * v;
            f.quadrics.push_back(ConicForm(-1.0, 0.0, 0.0, -1.0 - t2, t2, 1.0 - t2));
        }
    }
    return f;
}

bool contains(const RegionSpec& r, const BckPoint& p) {
    require_interior(p);
    const RegionForms f = region_forms(r);
    const Homogeneous h = to_homogeneous(p);
    for (const auto& q : f.quadrics)
        if (q.eval(h) > kMembershipTolerance) return false;
    for (const auto& l : f.half_planes)
        if (dot(l, h) < -kMembershipTolerance) return false;
    return true;
}

double boundary_margin(const RegionSpec& r, const BckPoint& p) {
    const RegionForms f = region_forms(r);
    const Homogeneous h = to_homogeneous(p);
    double m = kInf;
    for (const auto& q : f.quadrics) m = std::min(m, std::abs(q.eval(h)));
    for (const auto& l : f.half_planes) m = std::min(m, std::abs(dot(l, h)));
    return m;
}

bool contains_bph(const RegionSpec& r, const BphPoint& p) {
    validate(r);
    if (!(p.y > 0.0)) throw DomainError("half-plane point needs y > 0");
    for (double v : bph_values(r, p).le)
        if (v > kMembershipTolerance) return false;
    return true;
}

double boundary_margin_bph(const RegionSpec& r, const BphPoint& p) {
    validate(r);
    double m = kInf;
    for (double v : bph_values(r, p).le) m = std::min(m, std::abs(v));
    return m;
}

std::vector<Interval> cross_section(const RegionForms& forms, double y) {
    const double half = std::sqrt(std::max(0.0, (1.0 - y) * (1.0 + y)));
    std::vector<Interval> set{{-half, half, -1, -1}};
    int owner = 0;
    for (const auto& q : forms.quadrics) {
        const double a = q(0, 0);
        const double b = 2.0 * (q(0, 1) * y + q(0, 2));
        const double c = q(1, 1) * y * y + 2.0 * q(1, 2) * y + q(2, 2);
        set = intersect(set, quadric_set(a, b, c, owner++));
        if (set.empty()) return set;
    }
    for (const auto& l : forms.half_planes) {
        // l0 x + (l1 y + l2) >= 0
        set = intersect(set, quadric_set(0.0, -l[0], -(l[1] * y + l[2]), owner++));
        if (set.empty()) return set;
    }
    return set;
}

std::vector<Interval> cross_section(const RegionSpec& r, double y) { return cross_section(region_forms(r), y); }

std::vector<Interval> subtract(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out = a;
    for (const auto& cut : b) {
        std::vector<Interval> next;
        for (const auto& u : out) {
            if (cut.hi <= u.lo || cut.lo >= u.hi) {
                next.push_back(u);
                continue;
            }
            if (cut.lo > u.lo) next.push_back({u.lo, cut.lo, u.lo_owner, 1000 + cut.lo_owner});
            if (cut.hi < u.hi) next.push_back({cut.hi, u.hi, 1000 + cut.hi_owner, u.hi_owner});
        }
        out = std::move(next);
    }
    return out;
}

YRange y_extent(const RegionSpec& r) {
    validate(r);
    YRange out;
    out.lo = r.translation ? std::tanh(*r.translation) : 0.0;
    if (!r.cutoff) return out;
    if (r.cutoff->kind == CutoffKind::Lineal) {
        out.hi = r.cutoff->value;
        return out;
    }
    const RegionForms f = region_forms(r);
    double lo = out.lo, hi = 1.0 - 1e-15;
    if (!cross_section(f, hi).empty()) return out;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cross_section(f, mid).empty() ? hi : lo) = mid;
    }
    out.hi = lo;
    return out;
}

SyntheticElements synthetic_elements(double C) {
    require_C(C);
    SyntheticElements s;
    const double c2 = C * C;
    s.vertex = {0.0, 0.0};
    s.axis = {1.0, 0.0, 0.0};
    s.focus = {0.0, c2 / (2.0 - c2)};
    s.asymptotic_point = {0.0, 1.0, 1.0};
    s.supporting_horocycle = ConicForm(1.0, 0.0, 0.0, 2.0, -1.0, 0.0);
    // x^2 + (y - 1)((2 - C^2) y + C^2)
    s.directrix_horocycle = ConicForm(1.0, 0.0, 0.0, 2.0 - c2, c2 - 1.0, -c2);
    s.directrix_line = polar_line(to_homogeneous(s.focus), h_parabola_form(C));
    s.focal_distance = std::atanh(c2 / (2.0 - c2));
    s.focal_distance_ln = -0.5 * std::log1p(-c2);
    s.band_radius = std::atanh(C);
    return s;
}

BckPoint parabola_point(double C, double t) {
    require_C(C);
    const double c2 = C * C;
    if (!std::isfinite(t)) return {0.0, 1.0};
    const double den = 2.0 * c2 + t * t;
    return {2.0 * t * c2 / den, t * t / den};
}

BckPoint horocycle_point(double C, double t) {
    require_C(C);
    const double c2 = C * C;
    if (!std::isfinite(t)) return {0.0, 1.0};
    const double den = 2.0 - c2 + t * t;
    return {2.0 * t / den, (t * t - c2) / den};
}

KillingResult killing_residual(double C, double t) {
    const SyntheticElements s = synthetic_elements(C);
    const BckPoint p = parabola_point(C, t), h = horocycle_point(C, t);
    KillingResult k;
    k.dist_hp = bck_distance(h, p);
    k.dist_pf = bck_distance(p, s.focus);
    k.residual = std::abs(k.dist_hp - k.dist_pf);
    const double c2 = C * C, s2 = (1.0 - C) * (1.0 + C), t2 = t * t;
    const double num = c2 * (2.0 - c2) + s2 * t2;
    const double den = 2.0 * C * std::sqrt(s2 * (c2 + s2 * t2));
    // num^2 - den^2 = (C^4 + (1 - C^2) t^2)^2
    const double gap = c2 * c2 + s2 * t2;
    k.closed_arcosh = arcosh1p(gap * gap / (den * (num + den)));
    k.closed_artanh = std::atanh((c2 * c2 + s2 * t2) / (c2 * (2.0 - c2) + s2 * t2));
    return k;
}

NotableDistances notable_distances(double C) {
    require_C(C);
    NotableDistances n;
    n.half_ln3 = 0.5 * std::log(3.0);
    n.half_ln3_artanh = std::atanh(0.5);
    n.ln_silver = std::log1p(std::sqrt(2.0));
    n.ln_silver_artanh = std::atanh(std::sqrt(2.0) / 2.0);
    n.ln_silver_arsinh = std::asinh(1.0);
    n.half_ln2 = 0.5 * std::log(2.0);
    n.half_ln2_artanh = std::atanh(1.0 / 3.0);
    const double c2 = C * C;
    n.anti_axial = std::atanh(std::sqrt(2.0) * C / 2.0);
    n.anti_axial_arsinh = std::asinh(std::sqrt(c2 / (2.0 - c2)));
    n.focal = std::atanh(c2 / (2.0 - c2));
    n.focal_ln = -0.5 * std::log1p(-c2);
    n.classical_parameter = std::atanh(c2);
    n.band_radius = std::atanh(C);
    n.band_radius_ln = 0.5 * (std::log1p(C) - std::log1p(-C));
    n.facing_horocyclic_arc = 2.0 * std::sinh(n.ln_silver);
    return n;
}

}  // namespace hepm
