#include "hepm/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "hepm/closed_forms.hpp"
#include "hepm/errors.hpp"
#include "hepm/parabola.hpp"
#include "hepm/sds_polar.hpp"

namespace hepm {

namespace {

const std::map<std::string, std::function<double(double)>>& per_C_quantities() {
    static const std::map<std::string, std::function<double(double)>> q{
        {"focal", focal_distance},
        {"alpha", alpha},
        {"alpha_deviation", alpha_deviation},
        {"beta", beta},
        {"beta_hat_D", beta_hat_D},
        {"beta_hat_V", beta_hat_V},
        {"G", G},
        {"Gprime", Gprime},
        {"Ghat", Ghat},
        {"area_diff_B_minus_E", area_diff_B_minus_E},
        {"area_diff_D_minus_E", area_diff_D_minus_E},
        {"area_triangle", area_asymptotic_triangle},
        {"circumference_diff_via_polar", circumference_diff_via_polar},
        {"sds_area_Z", sds_area_Z},
    };
    return q;
}

std::string num(double v) { return fmt::format("{:.12g}", v); }

// keeps "-0.000000" out of the SVG
double tidy(double v) { return std::abs(v) < 5e-7 ? 0.0 : v; }

// Chebyshev-spaced parameters on [a, b], clustered at both ends
std::vector<double> cheb(double a, double b, int n) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = a + (b - a) * 0.5 * (1.0 - std::cos(std::numbers::pi * i / (n - 1)));
    return t;
}

Polyline symmetric_outline(const std::string& layer, const std::function<std::pair<double, double>(double)>& sec,
                           double ylo, double yhi, int samples, std::optional<Vec2> apex) {
    const int side = std::max(8, samples / 2);
    Polyline p{layer, {}, false};
    std::vector<std::pair<double, std::pair<double, double>>> rows;
    for (double y : cheb(ylo, yhi, side)) rows.push_back({y, sec(y)});
    for (const auto& [y, s] : rows) p.points.push_back({s.second, y});
    if (apex) p.points.push_back(*apex);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) p.points.push_back({it->second.first, it->first});
    return p;
}

Polyline bck_region(const std::string& layer, double C, int samples) {
    const auto fam = family_from_name(layer);
    if (!fam || *fam == Family::BandSegment) throw ConfigError("unknown BCK layer: " + layer);
    const RegionSpec r = region(*fam, C);
    const RegionForms forms = region_forms(r);
    const YRange ext = y_extent(r);
    auto sec = [&](double y) {
        const auto s = cross_section(forms, y);
        if (s.empty()) return std::pair<double, double>{0.0, 0.0};
        return std::pair<double, double>{s.front().lo, s.back().hi};
    };
    Polyline p = symmetric_outline(layer, sec, ext.lo, 1.0 - 1e-12, samples, Vec2{0.0, 1.0});
    p.closed = true;
    return p;
}

Polyline bph_region(const std::string& layer, double C, const Viewport& vp, int samples) {
    const auto fam = family_from_name(layer);
    if (!fam || (*fam != Family::E && *fam != Family::D && *fam != Family::V && *fam != Family::E1))
        throw ConfigError("layer " + layer + " is not available in the half-plane chart");
    const RegionSpec r = region(*fam, C);
    auto inside = [&r](double x, double y) { return contains_bph(r, {x, y}); };
    const double top = vp.ymax;
    if (!inside(0.0, top)) return {layer, {}, false};
    double lo = 1e-9, hi = top;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (inside(0.0, mid) ? hi : lo) = mid;
    }
    auto sec = [&](double y) {
        double a = 0.0, b = 1.0;
        while (inside(b, y) && b < 1e6) {
            a = b;
            b *= 2.0;
        }
        for (int i = 0; i < 100 && b - a > 1e-15 * b; ++i) {
            const double mid = 0.5 * (a + b);
            (inside(mid, y) ? a : b) = mid;
        }
        return std::pair<double, double>{-a, a};
    };
    Polyline p = symmetric_outline(layer, sec, hi, top, samples, std::nullopt);
    // flat bottom, e.g. the horocycle piece of D
    if (p.points.front().x != p.points.back().x) p.points.push_back(p.points.front());
    return p;
}

Polyline dual_layer(const std::string& layer, double C, const Viewport& vp, int samples) {
    Polyline p{layer, {}, false};
    if (layer == "copolar_E") {
        const ConicForm f = copolar_boundary_of_E(C);  // a11 x^2 + 2 a23 y + a33 = 0
        for (double x : cheb(vp.xmin, vp.xmax, samples))
            p.points.push_back({x, -(f(0, 0) * x * x + f(2, 2)) / (2.0 * f(1, 2))});
        return p;
    }
    if (layer == "copolar_B") {
        const CopolarBandBoundary b = copolar_boundary_of_B(C);
        const double xl = -b.left_vertex_polar[2] / b.left_vertex_polar[0];
        const double xr = -b.right_vertex_polar[2] / b.right_vertex_polar[0];
        const double a = b.hypercycle_dual(0, 0), c = b.hypercycle_dual(2, 2);
        p.points.push_back({xl, vp.ymin});
        for (double t : cheb(std::numbers::pi, 0.0, std::max(8, samples - 2)))
            p.points.push_back({std::cos(t) * std::sqrt(-c / a), std::sin(t) * std::sqrt(-c / b.hypercycle_dual(1, 1))});
        p.points.push_back({xr, vp.ymin});
        return p;
    }
    throw ConfigError("layer " + layer + " is not available in the dual chart");
}

Polyline unit_circle(int samples) {
    Polyline p{"absolute", {}, true};
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        p.points.push_back({std::cos(t), std::sin(t)});
    }
    return p;
}

std::string stroke_for(const std::string& layer) {
    static const std::map<std::string, std::string> colors{
        {"absolute", "#808080"}, {"E", "#d62728"},         {"B", "#1f77b4"},         {"D", "#17becf"},
        {"V", "#000000"},        {"A", "#2ca02c"},         {"E1", "#e377c2"},        {"copolar_E", "#d62728"},
        {"copolar_B", "#1f77b4"}, {"horizon", "#808080"}};
    const auto it = colors.find(layer);
    return it == colors.end() ? "#000000" : it->second;
}

void validate(const FigureSpec& f) {
    if (!(f.C > 0.0 && f.C < 1.0)) throw ConfigError("figure C must lie in (0,1)");
    if (f.samples_per_curve < 16) throw ConfigError("samples per curve must be at least 16");
    const Viewport& v = f.viewport;
    if (!(v.xmax > v.xmin) || !(v.ymax > v.ymin)) throw ConfigError("empty viewport");
    if (f.layers.empty()) throw ConfigError("figure needs at least one layer");
    const auto allowed = chart_layers(f.chart);
    for (const auto& l : f.layers)
        if (std::find(allowed.begin(), allowed.end(), l) == allowed.end())
            throw ConfigError("layer " + l + " is not available in the " + chart_name(f.chart) + " chart");
}

}  // namespace

std::vector<std::string> table_quantities() {
    std::vector<std::string> out;
    for (const auto& [k, v] : per_C_quantities()) out.push_back(k);
    out.push_back("alpha_root");
    return out;
}

bool is_scalar_quantity(const std::string& q) { return q == "alpha_root"; }

double evaluate_quantity(const std::string& q, double C) {
    if (q == "alpha_root") return alpha_root().root;
    const auto& m = per_C_quantities();
    const auto it = m.find(q);
    if (it == m.end()) throw ConfigError("unknown quantity: " + q);
    return it->second(C);
}

std::string render_table(const SweepSpec& s) {
    if (s.quantities.empty()) throw ConfigError("empty quantity list");
    const auto& m = per_C_quantities();
    std::size_t scalars = 0;
    for (const auto& q : s.quantities) {
        if (is_scalar_quantity(q))
            ++scalars;
        else if (!m.count(q))
            throw ConfigError("unknown quantity: " + q);
    }
    std::string out;
    if (scalars > 0) {
        if (scalars != s.quantities.size()) throw ConfigError("scalar quantities cannot share a table with C sweeps");
        for (std::size_t i = 0; i < s.quantities.size(); ++i) out += (i ? "," : "") + s.quantities[i];
        out += "\n";
        for (std::size_t i = 0; i < s.quantities.size(); ++i)
            out += (i ? "," : "") + num(evaluate_quantity(s.quantities[i], 0.5));
        out += "\n";
        return out;
    }
    if (s.C_values.empty()) throw ConfigError("empty C grid");
    for (double C : s.C_values)
        if (!(C > 0.0 && C < 1.0)) throw ConfigError("C values must lie in (0,1)");
    std::vector<double> Cs = s.C_values;
    std::sort(Cs.begin(), Cs.end());
    out = "C";
    for (const auto& q : s.quantities) out += "," + q;
    out += "\n";
    for (double C : Cs) {
        out += num(C);
        for (const auto& q : s.quantities) out += "," + num(m.at(q)(C));
        out += "\n";
    }
    return out;
}

std::string chart_name(Chart c) {
    switch (c) {
        case Chart::Bck: return "bck";
        case Chart::Bph: return "bph";
        case Chart::Dual: return "dual";
    }
    return "?";
}

Chart chart_from_name(const std::string& s) {
    for (Chart c : {Chart::Bck, Chart::Bph, Chart::Dual})
        if (chart_name(c) == s) return c;
    throw ConfigError("unknown chart: " + s);
}

std::vector<std::string> chart_layers(Chart c) {
    switch (c) {
        case Chart::Bck: return {"E", "B", "D", "V", "A", "E1"};
        case Chart::Bph: return {"E", "D", "V", "E1"};
        case Chart::Dual: return {"copolar_E", "copolar_B"};
    }
    return {};
}

Viewport default_viewport(Chart c) {
    switch (c) {
        case Chart::Bck: return {-1.1, 1.1, -1.1, 1.1};
        case Chart::Bph: return {-4.0, 4.0, 0.0, 6.0};
        case Chart::Dual: return {-4.0, 4.0, -4.0, 2.0};
    }
    return {};
}

std::vector<Polyline> figure_polylines(const FigureSpec& f) {
    validate(f);
    std::vector<Polyline> out;
    const int n = f.samples_per_curve;
    if (f.chart == Chart::Bck || f.chart == Chart::Dual) out.push_back(unit_circle(n));
    if (f.chart == Chart::Bph)
        out.push_back({"horizon", {{f.viewport.xmin, 0.0}, {f.viewport.xmax, 0.0}}, false});
    for (const auto& l : f.layers) {
        switch (f.chart) {
            case Chart::Bck: out.push_back(bck_region(l, f.C, n)); break;
            case Chart::Bph: out.push_back(bph_region(l, f.C, f.viewport, n)); break;
            case Chart::Dual: out.push_back(dual_layer(l, f.C, f.viewport, n)); break;
        }
    }
    return out;
}

std::string render_figure(const FigureSpec& f) {
    const auto lines = figure_polylines(f);
    const Viewport& v = f.viewport;
    const double w = v.xmax - v.xmin, h = v.ymax - v.ymin;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"600\" height=\"{}\">\n",
        num(v.xmin), num(-v.ymax), num(w), num(h), num(std::round(600.0 * h / w)));
    out += fmt::format("<title>{} chart, C = {}</title>\n", chart_name(f.chart), num(f.C));
    out += "<g fill=\"none\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\">\n";
    for (const auto& p : lines) {
        out += fmt::format("<{} class=\"{}\" stroke=\"{}\" vector-effect=\"non-scaling-stroke\" points=\"",
                           p.closed ? "polygon" : "polyline", p.layer, stroke_for(p.layer));
        for (std::size_t i = 0; i < p.points.size(); ++i)
            out += fmt::format("{}{:.6f},{:.6f}", i ? " " : "", tidy(p.points[i].x), tidy(-p.points[i].y));
        out += "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw ConfigError("not a number: " + tok);
        }
        if (pos != tok.size()) throw ConfigError("not a number: " + tok);
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> parse_name_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

}  // namespace hepm
