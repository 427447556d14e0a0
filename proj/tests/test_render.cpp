#include <doctest.h>

#include <sstream>
#include <string>

#include "hepm/errors.hpp"
#include "hepm/parabola.hpp"
#include "hepm/render.hpp"
#include "hepm/suite.hpp"

using namespace hepm;
using doctest::Approx;

namespace {
std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}
}  // namespace

TEST_CASE("tables") {
    SweepSpec s{parse_number_list("0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9"), {"G", "Gprime"}};
    const std::string csv = render_table(s);
    CHECK(csv.find('\r') == std::string::npos);
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "C,G,Gprime");
    double prevG = -1, prevP = -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto v = parse_number_list(rows[i]);
        REQUIRE(v.size() == 3);
        CHECK(v[1] > prevG);
        CHECK(v[2] > prevP);
        prevG = v[1];
        prevP = v[2];
    }
    CHECK(rows[6] == "0.6,1.13144580593,0.687292566521");
    CHECK_THROWS_AS(render_table({{0.5}, {}}), ConfigError);
    CHECK_THROWS_AS(render_table({{0.5}, {"nope"}}), ConfigError);
    CHECK_THROWS_AS(render_table({{1.5}, {"G"}}), ConfigError);
    CHECK_THROWS_AS(render_table({{0.5}, {"G", "alpha_root"}}), ConfigError);
    const auto root = lines(render_table({{}, {"alpha_root"}}));
    REQUIRE(root.size() == 2);
    CHECK(root[0] == "alpha_root");
    CHECK(std::stod(root[1]) == Approx(0.801986).epsilon(5e-6));
    CHECK(render_table(s) == csv);
}

TEST_CASE("parsing") {
    CHECK(parse_number_list("0.5,,0.25").size() == 2);
    CHECK_THROWS_AS(parse_number_list("0.5,x"), ConfigError);
    CHECK_THROWS_AS(parse_number_list("0.5abc"), ConfigError);
    CHECK(parse_name_list("E,B").size() == 2);
    CHECK(chart_from_name("dual") == Chart::Dual);
    CHECK_THROWS_AS(chart_from_name("hyperboloid"), ConfigError);
}

TEST_CASE("bck figure") {
    FigureSpec f;
    f.layers = {"E", "B"};
    const auto pl = figure_polylines(f);
    REQUIRE(pl.size() == 3);
    CHECK(pl[0].layer == "absolute");
    CHECK(pl[0].points.size() == 512);
    // every sampled point of the E outline lies in B
    for (const auto& p : pl[1].points) CHECK(contains(region(Family::B, 0.6), {p.x, std::min(p.y, 1.0 - 1e-12)}));
    const std::string svg = render_figure(f);
    CHECK(svg.find("viewBox=\"-1.1 -1.1 2.2 2.2\"") != std::string::npos);
    CHECK(svg.find("class=\"E\"") != std::string::npos);
    CHECK(svg.find("class=\"B\"") != std::string::npos);
    CHECK(render_figure(f) == svg);
}

TEST_CASE("other charts") {
    FigureSpec h;
    h.chart = Chart::Bph;
    h.layers = {"E", "D", "V"};
    h.viewport = default_viewport(Chart::Bph);
    const auto pl = figure_polylines(h);
    REQUIRE(pl.size() == 4);
    // D: bottom edge on the horocycle y = 1
    double miny = 1e9;
    for (const auto& p : pl[2].points) miny = std::min(miny, p.y);
    CHECK(miny == Approx(1.0).epsilon(1e-9));
    FigureSpec d;
    d.chart = Chart::Dual;
    d.layers = {"copolar_E", "copolar_B"};
    d.viewport = default_viewport(Chart::Dual);
    const auto dl = figure_polylines(d);
    REQUIRE(dl.size() == 3);
    for (const auto& p : dl[1].points) CHECK(0.36 * p.x * p.x + 2 * p.y - 2 == Approx(0.0).epsilon(1e-12));
    CHECK(dl[2].points.front().x == Approx(-1 / 0.6));
    CHECK(dl[2].points.back().x == Approx(1 / 0.6));
}

TEST_CASE("figure validation") {
    FigureSpec f;
    f.layers = {"copolar_E"};
    CHECK_THROWS_AS(render_figure(f), ConfigError);
    f.layers = {"E"};
    f.samples_per_curve = 8;
    CHECK_THROWS_AS(render_figure(f), ConfigError);
    f.samples_per_curve = 64;
    f.viewport = {1, 0, -1, 1};
    CHECK_THROWS_AS(render_figure(f), ConfigError);
    f.viewport = {};
    f.layers = {};
    CHECK_THROWS_AS(render_figure(f), ConfigError);
    FigureSpec b;
    b.chart = Chart::Bph;
    b.layers = {"A"};
    CHECK_THROWS_AS(render_figure(b), ConfigError);
}

TEST_CASE("suite plumbing") {
    SuiteOptions o;
    o.filter = "sds";
    const auto r = run_suite(o);
    REQUIRE_FALSE(r.empty());
    for (const auto& c : r) CHECK(c.module == "sds-polar");
    const std::string report = format_report(r, false);
    CHECK(report.find("CHECK AC05 ") != std::string::npos);
    CHECK(report.find("CHECK AC09 ") != std::string::npos);
    CHECK(report.find("SUMMARY") != std::string::npos);
    o.filter = "nothing-matches";
    CHECK_THROWS_AS(run_suite(o), ConfigError);
    o.filter = "";
    o.grid = 1;
    CHECK_THROWS_AS(run_suite(o), ConfigError);
}
