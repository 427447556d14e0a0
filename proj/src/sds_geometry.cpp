#include "hepm/sds_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hepm/errors.hpp"

namespace hepm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm2_minus_one(double x, double y) { return -one_minus_norm2(x, y); }

// section formulas for the x <= 0 piece
std::vector<Span> x_section_minus(const SdsRegion& r, double y) {
    const double C = r.C, eta = r.eta;
    switch (r.tag) {
        case SdsTag::W:
            if (y < 0.0 || y > eta) return {};
            return {{-kInf, -std::sqrt((1.0 - y) * (1.0 + y)) / C}};
        case SdsTag::ETilde:
            if (y > eta) return {};
            return {{-kInf, -std::sqrt(2.0 * (1.0 - y)) / C}};
        case SdsTag::Z:
            if (y > 0.0) return {};
            return {{-kInf, -1.0 / C}};
        case SdsTag::BandMinusParabola: {
            if (y > eta) return {};
            const double hi = y < 0.0 ? -1.0 / C : -std::sqrt((1.0 - y) * (1.0 + y)) / C;
            return {{-std::sqrt(2.0 * (1.0 - y)) / C, hi}};
        }
        case SdsTag::DiskCopolar: {
            const double R = 1.0 / C;
            if (std::abs(y) >= R) return {{-kInf, kInf}};
            const double w = std::sqrt((R - y) * (R + y));
            return {{-kInf, -w}, {w, kInf}};
        }
    }
    return {};
}

std::vector<Span> y_section_minus(const SdsRegion& r, double x) {
    const double C = r.C, eta = r.eta;
    const double u = C * C * x * x;
    switch (r.tag) {
        case SdsTag::W:
            if (x > -std::sqrt((1.0 - eta) * (1.0 + eta)) / C) return {};
            if (u >= 1.0) return {{0.0, eta}};
            return {{std::sqrt(1.0 - u), eta}};
        case SdsTag::ETilde:
            if (x > -std::sqrt(2.0 * (1.0 - eta)) / C) return {};
            return {{1.0 - 0.5 * u, eta}};
        case SdsTag::Z:
            if (x > -1.0 / C) return {};
            return {{-kInf, 0.0}};
        case SdsTag::BandMinusParabola: {
            if (x > -std::sqrt((1.0 - eta) * (1.0 + eta)) / C) return {};
            const double hi = std::min(eta, 1.0 - 0.5 * u);
            if (u >= 1.0) return {{-kInf, hi}};
            return {{std::sqrt(1.0 - u), hi}};
        }
        case SdsTag::DiskCopolar: {
            const double R = 1.0 / C;
            if (std::abs(x) >= R) return {{-kInf, kInf}};
            const double w = std::sqrt((R - x) * (R + x));
            return {{-kInf, -w}, {w, kInf}};
        }
    }
    return {};
}

std::vector<Span> mirror(std::vector<Span> v) {
    for (auto& s : v) s = {-s.hi, -s.lo};
    std::reverse(v.begin(), v.end());
    return v;
}

bool mirrored(const SdsRegion& r) { return r.side == Side::Plus && r.tag != SdsTag::DiskCopolar; }

}  // namespace

bool is_exterior(const BckPoint& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && norm2_minus_one(p.x, p.y) >= kInteriorMargin;
}

double sds_area_density(const BckPoint& p) {
    if (!is_exterior(p))
        throw DomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                          ") is not outside the absolute");
    const double g = norm2_minus_one(p.x, p.y);
    return 1.0 / (g * std::sqrt(g));
}

double sds_arclength_integrand(const BckPoint& p, const Vec2& v) {
    if (!is_exterior(p)) throw DomainError("arc length integrand needs an exterior point");
    const double g = norm2_minus_one(p.x, p.y);
    const double pv = p.x * v.x + p.y * v.y;
    const double q = g * (v.x * v.x + v.y * v.y) - pv * pv;
    if (q < 0.0) throw DomainError("velocity is not spacelike");
    return std::sqrt(q) / g;
}

void validate(const SdsRegion& r) {
    if (!(r.C > 0.0 && r.C < 1.0)) throw RegionSpecError("C must lie in (0,1)");
    switch (r.tag) {
        case SdsTag::W:
        case SdsTag::BandMinusParabola:
            if (!(r.eta > 0.0 && r.eta < 1.0)) throw RegionSpecError("eta must lie in (0,1)");
            break;
        case SdsTag::ETilde:
            if (!(r.eta < 1.0) || !std::isfinite(r.eta)) throw RegionSpecError("eta must be below 1");
            break;
        default:
            break;
    }
}

std::string sds_tag_name(SdsTag t) {
    switch (t) {
        case SdsTag::W: return "W";
        case SdsTag::ETilde: return "Etilde";
        case SdsTag::Z: return "Z";
        case SdsTag::DiskCopolar: return "disk_copolar";
        case SdsTag::BandMinusParabola: return "band_minus_parabola";
    }
    return "?";
}

std::optional<SdsTag> sds_tag_from_name(std::string_view s) {
    for (SdsTag t : {SdsTag::W, SdsTag::ETilde, SdsTag::Z, SdsTag::DiskCopolar, SdsTag::BandMinusParabola})
        if (sds_tag_name(t) == s) return t;
    return std::nullopt;
}

bool sds_contains(const SdsRegion& r, const BckPoint& p) {
    validate(r);
    const double x = mirrored(r) ? -p.x : p.x;
    for (const Span& s : x_section_minus(r, p.y))
        if (x >= s.lo && x <= s.hi) return true;
    return false;
}

Span sds_y_range(const SdsRegion& r) {
    validate(r);
    switch (r.tag) {
        case SdsTag::W: return {0.0, r.eta};
        case SdsTag::ETilde:
        case SdsTag::BandMinusParabola: return {-kInf, r.eta};
        case SdsTag::Z: return {-kInf, 0.0};
        case SdsTag::DiskCopolar: return {-kInf, kInf};
    }
    return {};
}

Span sds_x_range(const SdsRegion& r) {
    validate(r);
    const double C = r.C, eta = r.eta;
    Span s;
    switch (r.tag) {
        case SdsTag::W:
        case SdsTag::BandMinusParabola: s = {-kInf, -std::sqrt((1.0 - eta) * (1.0 + eta)) / C}; break;
        case SdsTag::ETilde: s = {-kInf, -std::sqrt(2.0 * (1.0 - eta)) / C}; break;
        case SdsTag::Z: s = {-kInf, -1.0 / C}; break;
        case SdsTag::DiskCopolar: return {-kInf, kInf};
    }
    if (mirrored(r)) return {-s.hi, -s.lo};
    return s;
}

std::vector<Span> sds_x_section(const SdsRegion& r, double y) {
    validate(r);
    auto v = x_section_minus(r, y);
    return mirrored(r) ? mirror(std::move(v)) : v;
}

std::vector<Span> sds_y_section(const SdsRegion& r, double x) {
    validate(r);
    return y_section_minus(r, mirrored(r) ? -x : x);
}

std::vector<double> sds_y_breaks(const SdsRegion& r) {
    validate(r);
    if (r.tag == SdsTag::BandMinusParabola) return {0.0};
    if (r.tag == SdsTag::DiskCopolar) return {-1.0 / r.C, 1.0 / r.C};
    return {};
}

std::vector<double> sds_x_breaks(const SdsRegion& r) {
    validate(r);
    std::vector<double> b;
    switch (r.tag) {
        case SdsTag::W: b = {-1.0 / r.C}; break;
        case SdsTag::BandMinusParabola: b = {-1.0 / r.C, -std::sqrt(2.0 * (1.0 - r.eta)) / r.C}; break;
        case SdsTag::DiskCopolar: return {-1.0 / r.C, 1.0 / r.C};
        default: break;
    }
    if (mirrored(r))
        for (double& v : b) v = -v;
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace hepm
