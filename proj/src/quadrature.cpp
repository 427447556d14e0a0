#include "hepm/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>

#include "hepm/errors.hpp"

namespace hepm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTopFloor = 1e-5;

std::once_flag gsl_handler_once;

struct Thunk {
    const std::function<double(double)>* f;
    bool failed = false;
};

double trampoline(double x, void* p) {
    auto* t = static_cast<Thunk*>(p);
    try {
        const double v = (*t->f)(x);
        if (!std::isfinite(v)) {
            t->failed = true;
            return 0.0;
        }
        return v;
    } catch (...) {
        t->failed = true;
        return 0.0;
    }
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

QuadratureConfig inner_config(const QuadratureConfig& cfg) {
    QuadratureConfig in = cfg;
    in.rel_tol = cfg.rel_tol * 0.1;
    in.abs_tol = cfg.abs_tol * 0.1;
    return in;
}

// running totals of a nested integration
struct Accumulator {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    bool converged = true;

    void add(const OracleResult& r) {
        value += r.value;
        error += r.error_estimate;
        subdivisions += r.subdivisions;
        converged = converged && r.converged;
    }
    OracleResult result() const { return {value, error, subdivisions, converged}; }
};

// integral over a finite piece through y = a + (b - a) m(t); m flattens the ends where sections
// open like square roots, and the top variant also absorbs an inverse square root at b
OracleResult integrate_piece(const std::function<double(double)>& f, double a, double b, bool singular_top,
                             const QuadratureConfig& cfg) {
    if (std::isinf(a) || std::isinf(b)) return integrate_1d(f, a, b, cfg);
    const double h = b - a;
    std::function<double(double)> g;
    if (singular_top) {
        g = [&](double t) {
            const double u = 1.0 - t * t;
            const double y = b - h * u * u;
            if (y >= b) return 0.0;
            return f(y) * h * 4.0 * t * u;
        };
    } else {
        g = [&](double t) {
            const double y = a + h * t * t * (3.0 - 2.0 * t);
            return f(y) * h * 6.0 * t * (1.0 - t);
        };
    }
    return integrate_1d(g, 0.0, 1.0, cfg);
}

using SectionFn = std::function<std::vector<Interval>(double)>;

std::vector<int> signature(const std::vector<Interval>& s) {
    std::vector<int> sig;
    for (const auto& i : s) {
        sig.push_back(i.lo_owner);
        sig.push_back(i.hi_owner);
    }
    return sig;
}

// y values where the set of constraints fixing the section ends changes
std::vector<double> section_breaks(const SectionFn& sec, double a, double b) {
    constexpr int kSamples = 256;
    std::vector<double> out;
    double prev_y = a + (b - a) * 0.5 / kSamples;
    auto prev = signature(sec(prev_y));
    for (int i = 1; i < kSamples; ++i) {
        const double y = a + (b - a) * (i + 0.5) / kSamples;
        auto cur = signature(sec(y));
        if (cur != prev) {
            double lo = prev_y, hi = y;
            for (int k = 0; k < 200 && hi - lo > 4e-16 * std::max(1.0, std::abs(hi)); ++k) {
                const double mid = 0.5 * (lo + hi);
                (signature(sec(mid)) == prev ? lo : hi) = mid;
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev = std::move(cur);
        prev_y = y;
    }
    return out;
}

// x/((1 - y^2) sqrt(1 - x^2 - y^2)), the inner antiderivative of the hyperbolic density
double hyp_bracket_term(double x, double y) {
    const double g = one_minus_norm2(x, y);
    if (!(g > 0.0)) throw DomainError("section endpoint on the absolute");
    return x / ((1.0 - y) * (1.0 + y) * std::sqrt(g));
}

double hyp_section_integral(const std::vector<Interval>& s, double y, InnerMode mode, const QuadratureConfig& cfg,
                            Accumulator* inner) {
    double v = 0.0;
    for (const auto& i : s) {
        if (mode == InnerMode::Bracket) {
            v += hyp_bracket_term(i.hi, y) - hyp_bracket_term(i.lo, y);
        } else {
            const auto r = integrate_1d([y](double x) { return hyp_area_density({x, y}); }, i.lo, i.hi, cfg);
            inner->subdivisions += r.subdivisions;
            inner->converged = inner->converged && r.converged;
            inner->error = std::max(inner->error, r.error_estimate);
            v += r.value;
        }
    }
    return v;
}

OracleResult area_from_sections(const SectionFn& sec, double a, double b, bool singular_top, InnerMode mode,
                                const QuadratureConfig& cfg) {
    if (!(b > a)) return {0.0, 0.0, 0, true};
    std::vector<double> cuts{a};
    for (double y : section_breaks(sec, a, b)) cuts.push_back(y);
    cuts.push_back(b);
    const QuadratureConfig in = inner_config(cfg);
    Accumulator total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Accumulator inner;
        auto f = [&](double y) { return hyp_section_integral(sec(y), y, mode, in, &inner); };
        const bool top = singular_top && i + 2 == cuts.size();
        total.add(integrate_piece(f, cuts[i], cuts[i + 1], top, cfg));
        total.error += inner.error * (cuts[i + 1] - cuts[i]);
        total.subdivisions += inner.subdivisions;
        total.converged = total.converged && inner.converged;
    }
    return total.result();
}

// the displayed antiderivative 1/(sqrt g (sqrt g - u)), u <= 0, vanishing at -infinity
double exterior_term(double u, double v) {
    if (std::isinf(u)) return 0.0;
    const double g = -one_minus_norm2(u, v);
    if (!(g > 0.0)) throw DomainError("section endpoint on the absolute");
    const double r = std::sqrt(g);
    return 1.0 / (r * (r - u));
}

OracleResult integrate_pieces(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breaks, const QuadratureConfig& cfg) {
    std::vector<double> cuts{a};
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    Accumulator acc;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) acc.add(integrate_piece(f, cuts[i], cuts[i + 1], false, cfg));
    return acc.result();
}

}  // namespace

std::size_t QuadratureConfig::subinterval_limit() const {
    return static_cast<std::size_t>(50 * std::max(max_depth, 10));
}

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) throw ConfigError("quadrature tolerances must be positive");
    if (cfg.max_depth < 10) throw ConfigError("max_depth must be at least 10");
    for (double e : cfg.cutoff_schedule)
        if (!(e > 0.0 && e < 1.0)) throw ConfigError("cutoff schedule values must lie in (0,1)");
}

OracleResult integrate_1d(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg) {
    std::call_once(gsl_handler_once, [] { gsl_set_error_handler_off(); });
    validate(cfg);
    if (a == b) return {0.0, 0.0, 0, true};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const std::size_t limit = cfg.subinterval_limit();
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> w(gsl_integration_workspace_alloc(limit));
    Thunk thunk{&f};
    gsl_function gf{&trampoline, &thunk};
    double result = 0.0, abserr = 0.0;
    int status;
    if (std::isinf(a) && std::isinf(b))
        status = gsl_integration_qagi(&gf, cfg.abs_tol, cfg.rel_tol, limit, w.get(), &result, &abserr);
    else if (std::isinf(a))
        status = gsl_integration_qagil(&gf, b, cfg.abs_tol, cfg.rel_tol, limit, w.get(), &result, &abserr);
    else if (std::isinf(b))
        status = gsl_integration_qagiu(&gf, a, cfg.abs_tol, cfg.rel_tol, limit, w.get(), &result, &abserr);
    else
        status = gsl_integration_qag(&gf, a, b, cfg.abs_tol, cfg.rel_tol, limit, GSL_INTEG_GAUSS15, w.get(),
                                     &result, &abserr);
    OracleResult r;
    r.value = sign * result;
    r.error_estimate = abserr;
    r.subdivisions = static_cast<int>(w->size);
    r.converged = status == GSL_SUCCESS && !thunk.failed && std::isfinite(result);
    return r;
}

OracleResult quad_area_hyp(const RegionSpec& r, const QuadratureConfig& cfg, InnerMode mode) {
    validate(r);
    validate(cfg);
    const bool finite = r.family == Family::A;
    if (!r.cutoff && !finite) throw RegionSpecError("area oracle needs a cutoff for this family");
    const RegionForms forms = region_forms(r);
    const YRange ext = y_extent(r);
    SectionFn sec = [&forms](double y) { return cross_section(forms, y); };
    return area_from_sections(sec, ext.lo, ext.hi, finite && !r.cutoff, mode, cfg);
}

OracleResult quad_area_hyp_difference(const RegionSpec& a, const RegionSpec& b, double y_hi,
                                      const QuadratureConfig& cfg, InnerMode mode) {
    validate(cfg);
    const RegionForms fa = region_forms(a), fb = region_forms(b);
    const YRange ext = y_extent(a);
    const double hi = std::min(ext.hi, y_hi);
    SectionFn sec = [&](double y) { return subtract(cross_section(fa, y), cross_section(fb, y)); };
    if (hi < 1.0 - kTopFloor) return area_from_sections(sec, ext.lo, hi, false, mode, cfg);
    // Near the asymptotic point both boundaries meet and their roots lose relative accuracy like
    // eps/(1 - y). The section integral of a difference stays bounded and smooth there, so stop at
    // the floor and close the last strip with a linear extrapolation.
    const double top = 1.0 - kTopFloor;
    OracleResult out = area_from_sections(sec, ext.lo, top, false, mode, cfg);
    Accumulator scratch;
    const QuadratureConfig in = inner_config(cfg);
    auto at = [&](double y) { return hyp_section_integral(sec(y), y, mode, in, &scratch); };
    const double f1 = at(top), f2 = at(1.0 - 2.0 * kTopFloor), f3 = at(1.0 - 3.0 * kTopFloor);
    out.value += kTopFloor * (f1 + 0.5 * (f1 - f2));
    out.error_estimate += kTopFloor * std::abs(f1 - 2.0 * f2 + f3);
    return out;
}

OracleResult quad_area_hyp_disk(double C, const QuadratureConfig& cfg) {
    if (!(C > 0.0 && C < 1.0)) throw DomainError("disk oracle needs C in (0,1)");
    const QuadratureConfig in = inner_config(cfg);
    Accumulator inner;
    auto radial = [&](double) {
        auto r = integrate_1d([](double rho) { return rho * hyp_area_density({rho, 0.0}); }, 0.0, C, in);
        inner.converged = inner.converged && r.converged;
        inner.error = std::max(inner.error, r.error_estimate);
        return r.value;
    };
    OracleResult out = integrate_1d(radial, 0.0, kTwoPi, cfg);
    out.error_estimate += inner.error * kTwoPi;
    out.converged = out.converged && inner.converged;
    return out;
}

OracleResult quad_len_hyp(const Curve& curve, double t0, double t1, const QuadratureConfig& cfg) {
    return integrate_1d(
        [&curve](double t) {
            const auto [p, v] = curve(t);
            return hyp_arclength_integrand(p, v);
        },
        t0, t1, cfg);
}

Curve hypercycle_arc(double C) {
    return [C](double y) {
        const double w = std::sqrt((1.0 - y) * (1.0 + y));
        return std::pair<BckPoint, Vec2>{{C * w, y}, {-C * y / w, 1.0}};
    };
}

Curve parabola_arc(double C) {
    return [C](double t) {
        const double c2 = C * C, d = 2.0 * c2 + t * t;
        return std::pair<BckPoint, Vec2>{{2.0 * c2 * t / d, t * t / d},
                                         {2.0 * c2 * (2.0 * c2 - t * t) / (d * d), 4.0 * c2 * t / (d * d)}};
    };
}

Curve horizontal_segment(double y) {
    return [y](double x) { return std::pair<BckPoint, Vec2>{{x, y}, {1.0, 0.0}}; };
}

Curve circle_arc(double radius) {
    return [radius](double t) {
        return std::pair<BckPoint, Vec2>{{radius * std::cos(t), radius * std::sin(t)},
                                         {-radius * std::sin(t), radius * std::cos(t)}};
    };
}

double parabola_arc_parameter(double C, double y) {
    if (!(y >= 0.0 && y < 1.0)) throw DomainError("parabola height must lie in [0,1)");
    return std::sqrt(2.0 * C * C * y / (1.0 - y));
}

OracleResult quad_len_band_boundary(double C, double eta, const QuadratureConfig& cfg) {
    Accumulator acc;
    OracleResult side = quad_len_hyp(hypercycle_arc(C), 0.0, eta, cfg);
    side.value *= 2.0;
    side.error_estimate *= 2.0;
    acc.add(side);
    acc.add(quad_len_hyp(horizontal_segment(0.0), -C, C, cfg));
    return acc.result();
}

OracleResult quad_len_parabola_boundary(double C, double eta, const QuadratureConfig& cfg) {
    OracleResult side = quad_len_hyp(parabola_arc(C), 0.0, parabola_arc_parameter(C, eta), cfg);
    side.value *= 2.0;
    side.error_estimate *= 2.0;
    return side;
}

OracleResult quad_len_M(double C, double eta, const QuadratureConfig& cfg) {
    const double x_par = C * std::sqrt(2.0 * eta * (1.0 - eta));
    const double x_band = C * std::sqrt((1.0 - eta) * (1.0 + eta));
    OracleResult side = quad_len_hyp(horizontal_segment(eta), x_par, x_band, cfg);
    side.value *= 2.0;
    side.error_estimate *= 2.0;
    return side;
}

OracleResult quad_len_hyp_circle(double C, const QuadratureConfig& cfg) {
    return quad_len_hyp(circle_arc(C), 0.0, kTwoPi, cfg);
}

OracleResult quad_area_bph_strip(const RegionSpec& r, double theta, const QuadratureConfig& cfg) {
    validate(r);
    validate(cfg);
    if (!(theta > 1.0)) throw RegionSpecError("strip cutoff must exceed 1");
    const Family f = r.family;
    // E1 is a horodisk about the point at infinity; its rows are unbounded
    if (f != Family::E && f != Family::D && f != Family::V)
        throw RegionSpecError("strip oracle handles E, D and V only");
    auto inside = [&r](double x, double y) { return contains_bph(r, {x, y}); };
    // lowest height on the axis
    double lo = 1e-9, hi = theta;
    if (!inside(0.0, hi)) return {0.0, 0.0, 0, true};
    for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (inside(0.0, mid) ? hi : lo) = mid;
    }
    const double y_min = hi;
    auto half_width = [&](double y) {
        if (!inside(0.0, y)) return 0.0;
        double a = 0.0, b = 1.0;
        while (inside(b, y)) {
            a = b;
            b *= 2.0;
            if (b > 1e150) throw RegionSpecError("region row is unbounded");
        }
        for (int i = 0; i < 200 && b - a > 1e-17 * b; ++i) {
            const double mid = 0.5 * (a + b);
            (inside(mid, y) ? a : b) = mid;
        }
        return 0.5 * (a + b);
    };
    return integrate_piece([&](double y) { return 2.0 * half_width(y) / (y * y); }, y_min, theta, false, cfg);
}

double exterior_bracket(double lo, double hi, double v) {
    if (hi <= 0.0) return exterior_term(hi, v) - exterior_term(lo, v);
    if (lo >= 0.0) return exterior_term(-lo, v) - exterior_term(-hi, v);
    return 2.0 * exterior_term(0.0, v) - exterior_term(lo, v) - exterior_term(-hi, v);
}

OracleResult quad_area_sds(const SdsRegion& r, const QuadratureConfig& cfg, Order order, InnerMode mode) {
    validate(r);
    validate(cfg);
    const QuadratureConfig in = inner_config(cfg);
    if (r.tag == SdsTag::DiskCopolar) {
        Accumulator inner;
        auto radial = [&](double) {
            auto res = integrate_1d([](double rho) { return rho * sds_area_density({rho, 0.0}); }, 1.0 / r.C, kInf,
                                    in);
            inner.converged = inner.converged && res.converged;
            inner.error = std::max(inner.error, res.error_estimate);
            return res.value;
        };
        OracleResult out = integrate_1d(radial, 0.0, kTwoPi, cfg);
        out.error_estimate += inner.error * kTwoPi;
        out.converged = out.converged && inner.converged;
        return out;
    }
    const bool dx_first = order == Order::DxThenDy;
    const Span range = dx_first ? sds_y_range(r) : sds_x_range(r);
    const std::vector<double> breaks = dx_first ? sds_y_breaks(r) : sds_x_breaks(r);
    Accumulator inner;
    auto outer = [&](double v) {
        const auto spans = dx_first ? sds_x_section(r, v) : sds_y_section(r, v);
        double s = 0.0;
        for (const Span& sp : spans) {
            if (mode == InnerMode::Bracket) {
                s += exterior_bracket(sp.lo, sp.hi, v);
            } else {
                auto dens = [v, dx_first](double u) {
                    return dx_first ? sds_area_density({u, v}) : sds_area_density({v, u});
                };
                auto res = integrate_1d(dens, sp.lo, sp.hi, in);
                inner.converged = inner.converged && res.converged;
                inner.error = std::max(inner.error, res.error_estimate);
                inner.subdivisions += res.subdivisions;
                s += res.value;
            }
        }
        return s;
    };
    OracleResult out = integrate_pieces(outer, range.lo, range.hi, breaks, cfg);
    out.error_estimate += inner.error * std::max(1.0, std::abs(out.value));
    out.converged = out.converged && inner.converged;
    out.subdivisions += inner.subdivisions;
    return out;
}

OracleResult quad_len_sds_circle(double C, const QuadratureConfig& cfg) {
    if (!(C > 0.0 && C < 1.0)) throw DomainError("circle oracle needs C in (0,1)");
    const Curve c = circle_arc(1.0 / C);
    return integrate_1d(
        [&c](double t) {
            const auto [p, v] = c(t);
            return sds_arclength_integrand(p, v);
        },
        0.0, kTwoPi, cfg);
}

TrendResult limit_trend(const std::function<double(double)>& f, const std::vector<double>& schedule) {
    TrendResult t;
    if (schedule.empty()) throw ConfigError("empty cutoff schedule");
    for (double e : schedule) t.values.push_back(f(e));
    t.last = t.values.back();
    t.extrapolated = t.last;
    const std::size_t n = t.values.size();
    int sign = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = t.values[i] - t.values[i - 1];
        const int s = (d > 0.0) - (d < 0.0);
        if (s != 0 && sign != 0 && s != sign) t.monotone = false;
        if (s != 0) sign = s;
    }
    if (n >= 2) t.final_increment = t.values[n - 1] - t.values[n - 2];
    if (n >= 3) {
        const double prev = t.values[n - 2] - t.values[n - 3];
        t.decay_ratio = prev != 0.0 ? t.final_increment / prev : 0.0;
        if (std::abs(t.decay_ratio) < 1.0)
            t.extrapolated = t.last + t.final_increment * t.decay_ratio / (1.0 - t.decay_ratio);
    }
    return t;
}

}  // namespace hepm
