#pragma once

#include <string>
#include <vector>

#include "hepm/quadrature.hpp"
#include "hepm/render.hpp"

namespace hepm {

struct SubCheck {
    std::string name;
    bool pass = true;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_err = 0.0;
    double tol = 0.0;
};

// One report line; closed_form/oracle/abs_err come from the worst sub-check.
struct CheckRecord {
    std::string id;
    std::string module;
    bool pass = true;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_err = 0.0;
    std::vector<SubCheck> details;
};

struct SuiteOptions {
    std::string filter;       // substring of the module name; empty runs everything
    int grid = 9;             // C_i = i/(grid+1)
    bool self_test = false;   // perturbs one closed form by 1e-6 relative
    QuadratureConfig qcfg;
    std::string golden_dir;   // empty skips the golden comparison
};

void validate(const SuiteOptions& o);

std::vector<std::string> module_names();
std::vector<CheckRecord> run_suite(const SuiteOptions& o);
bool all_passed(const std::vector<CheckRecord>& r);

// CHECK/DETAIL lines followed by one SUMMARY line
std::string format_report(const std::vector<CheckRecord>& r, bool details = true);

// the fixed outputs compared against the golden files
SweepSpec golden_table_spec();
FigureSpec golden_figure_spec();
inline constexpr const char* kGoldenTableName = "G_sweep.csv";
inline constexpr const char* kGoldenFigureName = "bck_C0.6.svg";

}  // namespace hepm
