#include "hepm/models.hpp"

#include <cmath>
#include <string>

namespace hepm {

double one_minus_norm2(double x, double y) {
    if (std::abs(y) >= std::abs(x)) return (1.0 - y) * (1.0 + y) - x * x;
    return (1.0 - x) * (1.0 + x) - y * y;
}

bool is_interior(const BckPoint& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && one_minus_norm2(p.x, p.y) >= kInteriorMargin;
}

void require_interior(const BckPoint& p) {
    if (!is_interior(p))
        throw DomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                          ") is not inside the absolute");
}

double arcosh1p(double u) {
    if (u < 0.0) u = 0.0;
    return std::log1p(u + std::sqrt(u * (2.0 + u)));
}

double bck_distance(const BckPoint& p, const BckPoint& q) {
    require_interior(p);
    require_interior(q);
    const double a = one_minus_norm2(p.x, p.y);
    const double b = one_minus_norm2(q.x, q.y);
    const double dx = p.x - q.x, dy = p.y - q.y;
    const double cross = p.x * q.y - p.y * q.x;
    // (1 - p.q)^2 - (1-|p|^2)(1-|q|^2) = |p-q|^2 - (p x q)^2
    const double num = dx * dx + dy * dy - cross * cross;
    const double d = std::sqrt(a) * std::sqrt(b);
    const double n = 1.0 - (p.x * q.x + p.y * q.y);
    return arcosh1p(num / (d * (n + d)));
}

static void require_upper(const BphPoint& p) {
    if (!(p.y > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y))
        throw DomainError("half-plane point needs y > 0");
}

double bph_distance(const BphPoint& p, const BphPoint& q) {
    require_upper(p);
    require_upper(q);
    const double dx = p.x - q.x, dy = p.y - q.y;
    return arcosh1p((dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

BphPoint bck_to_bph(const BckPoint& p) {
    require_interior(p);
    const double w = 1.0 - p.y;
    return {p.x / w, std::sqrt(one_minus_norm2(p.x, p.y)) / w};
}

BckPoint bph_to_bck(const BphPoint& p) {
    require_upper(p);
    const double r2 = p.x * p.x + p.y * p.y;
    return {2.0 * p.x / (r2 + 1.0), (r2 - 1.0) / (r2 + 1.0)};
}

double hyp_area_density(const BckPoint& p) {
    require_interior(p);
    return std::pow(one_minus_norm2(p.x, p.y), -1.5);
}

double hyp_arclength_integrand(const BckPoint& p, const Vec2& v) {
    require_interior(p);
    const double a = one_minus_norm2(p.x, p.y);
    const double dot = p.x * v.x + p.y * v.y;
    return std::sqrt(a * (v.x * v.x + v.y * v.y) + dot * dot) / a;
}

double bph_area_density(const BphPoint& p) {
    require_upper(p);
    return 1.0 / (p.y * p.y);
}

double bph_arclength_integrand(const BphPoint& p, const Vec2& v) {
    require_upper(p);
    return std::hypot(v.x, v.y) / p.y;
}

Homogeneous to_homogeneous(const BckPoint& p) { return {p.x, p.y, 1.0}; }

std::optional<BckPoint> to_affine(const Homogeneous& h, double tol) {
    const double m = std::max({std::abs(h[0]), std::abs(h[1]), std::abs(h[2])});
    if (m == 0.0) throw DomainError("zero homogeneous triple");
    if (std::abs(h[2]) <= tol * m) return std::nullopt;
    return BckPoint{h[0] / h[2], h[1] / h[2]};
}

Homogeneous canonical_point(const Homogeneous& h) {
    double m = 0.0;
    for (double v : h) m = std::max(m, std::abs(v));
    if (m == 0.0 || !std::isfinite(m)) throw DomainError("homogeneous triple must be finite and nonzero");
    Homogeneous out{h[0] / m, h[1] / m, h[2] / m};
    for (double v : out) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0)
                for (double& w : out) w = -w;
            break;
        }
    }
    return out;
}

}  // namespace hepm
