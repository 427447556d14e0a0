#include <CLI11.hpp>
#include <json.hpp>

#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "hepm/closed_forms.hpp"
#include "hepm/errors.hpp"
#include "hepm/render.hpp"
#include "hepm/suite.hpp"

using namespace hepm;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

void apply_config(const std::string& path, SuiteOptions& o, std::string& out) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> known{"filter",   "grid",      "tol",          "rel_tol", "abs_tol",
                                             "max_depth", "self_test", "cutoff_schedule", "golden_dir", "out"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw ConfigError("unknown config key: " + k);
    try {
        if (j.contains("filter")) o.filter = j["filter"].get<std::string>();
        if (j.contains("grid")) o.grid = j["grid"].get<int>();
        if (j.contains("tol")) o.qcfg.rel_tol = j["tol"].get<double>();
        if (j.contains("rel_tol")) o.qcfg.rel_tol = j["rel_tol"].get<double>();
        if (j.contains("abs_tol")) o.qcfg.abs_tol = j["abs_tol"].get<double>();
        if (j.contains("max_depth")) o.qcfg.max_depth = j["max_depth"].get<int>();
        if (j.contains("self_test")) o.self_test = j["self_test"].get<bool>();
        if (j.contains("cutoff_schedule")) o.qcfg.cutoff_schedule = j["cutoff_schedule"].get<std::vector<double>>();
        if (j.contains("golden_dir")) o.golden_dir = j["golden_dir"].get<std::string>();
        if (j.contains("out")) out = j["out"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

std::vector<double> sweep_grid(int n) {
    std::vector<double> g;
    for (int i = 1; i <= n; ++i) g.push_back(double(i) / (n + 1));
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hepm: hyperbolic elliptic parabola metrology"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string config_path, filter, out_path, golden_dir;
    std::optional<int> grid;
    std::optional<double> tol;
    bool self_test = false, quiet = false;
    verify->add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    verify->add_option("--filter", filter, "run only modules whose name contains this");
    verify->add_option("--grid", grid, "number of interior C grid points");
    verify->add_option("--tol", tol, "oracle relative tolerance");
    verify->add_option("--out", out_path, "report path (stdout if absent)");
    verify->add_option("--golden", golden_dir, "directory holding the golden CSV and SVG");
    verify->add_flag("--self-test", self_test, "perturb one closed form by 1e-6");
    verify->add_flag("--quiet", quiet, "omit per-check detail lines");

    // table
    auto* table = app.add_subcommand("table", "tabulate closed forms over C");
    std::string t_C, t_quant, t_out;
    std::optional<int> t_grid;
    auto* t_copt = table->add_option("--C", t_C, "comma-separated C values");
    table->add_option("--grid", t_grid, "use C_i = i/(n+1)")->excludes(t_copt);
    table->add_option("--quantities", t_quant, "comma-separated quantity names")->required();
    table->add_option("--out", t_out, "CSV path (stdout if absent)");

    // figure
    auto* figure = app.add_subcommand("figure", "render region boundaries as SVG");
    std::string f_chart = "bck", f_layers, f_viewport, f_out;
    double f_C = 0.6;
    int f_samples = 512;
    figure->add_option("--chart", f_chart, "bck | bph | dual");
    figure->add_option("--layers", f_layers, "comma-separated layer names (default: all for the chart)");
    figure->add_option("--C", f_C, "parameter C");
    figure->add_option("--viewport", f_viewport, "xmin,xmax,ymin,ymax");
    figure->add_option("--samples", f_samples, "samples per curve");
    figure->add_option("--out", f_out, "SVG path (stdout if absent)");

    // root
    auto* root = app.add_subcommand("root", "locate C where alpha equals the focal distance");
    double r_tol = 1e-10;
    std::vector<double> r_bracket{0.5, 0.95};
    root->add_option("--tol", r_tol, "bisection tolerance");
    root->add_option("--bracket", r_bracket, "lo hi")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) {
            SuiteOptions o;
            std::string out;
            if (!config_path.empty()) apply_config(config_path, o, out);
            if (!filter.empty()) o.filter = filter;
            if (grid) o.grid = *grid;
            if (tol) o.qcfg.rel_tol = *tol;
            if (self_test) o.self_test = true;
            if (!golden_dir.empty()) o.golden_dir = golden_dir;
            if (!out_path.empty()) out = out_path;
            validate(o);
            const auto records = run_suite(o);
            emit(format_report(records, !quiet), out);
            if (!out.empty() && out != "-") std::fputs(format_report(records, false).c_str(), stdout);
            return all_passed(records) ? kExitPass : kExitFail;
        }
        if (*table) {
            SweepSpec s;
            s.quantities = parse_name_list(t_quant);
            if (t_grid) {
                if (*t_grid < 1) throw ConfigError("grid must be positive");
                s.C_values = sweep_grid(*t_grid);
            } else if (!t_C.empty()) {
                s.C_values = parse_number_list(t_C);
            } else {
                s.C_values = sweep_grid(9);
            }
            emit(render_table(s), t_out);
            return kExitPass;
        }
        if (*figure) {
            FigureSpec f;
            f.chart = chart_from_name(f_chart);
            f.layers = f_layers.empty() ? chart_layers(f.chart) : parse_name_list(f_layers);
            f.C = f_C;
            f.samples_per_curve = f_samples;
            f.viewport = default_viewport(f.chart);
            if (!f_viewport.empty()) {
                const auto v = parse_number_list(f_viewport);
                if (v.size() != 4) throw ConfigError("viewport needs four numbers");
                f.viewport = {v[0], v[1], v[2], v[3]};
            }
            emit(render_figure(f), f_out);
            return kExitPass;
        }
        if (*root) {
            const RootResult r = alpha_root(r_tol, r_bracket[0], r_bracket[1]);
            std::cout << fmt::format("root {:.12f} error_bound {:.3g} iterations {}\n", r.root, r.error_bound,
                                     r.iterations);
            return kExitPass;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RegionSpecError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
