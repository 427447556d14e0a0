#pragma once

#include <string>
#include <vector>

#include "hepm/models.hpp"

namespace hepm {

struct SweepSpec {
    std::vector<double> C_values;
    std::vector<std::string> quantities;
};

std::vector<std::string> table_quantities();
bool is_scalar_quantity(const std::string& q);
double evaluate_quantity(const std::string& q, double C);

// CSV: header row, 12 significant digits, LF endings.
std::string render_table(const SweepSpec& s);

enum class Chart { Bck, Bph, Dual };

struct Viewport {
    double xmin = -1.1, xmax = 1.1, ymin = -1.1, ymax = 1.1;
};

struct FigureSpec {
    Chart chart = Chart::Bck;
    std::vector<std::string> layers;
    double C = 0.6;
    Viewport viewport;
    int samples_per_curve = 512;
};

std::string chart_name(Chart c);
Chart chart_from_name(const std::string& s);
std::vector<std::string> chart_layers(Chart c);
Viewport default_viewport(Chart c);

struct Polyline {
    std::string layer;
    std::vector<Vec2> points;
    bool closed = false;
};

std::vector<Polyline> figure_polylines(const FigureSpec& f);
std::string render_figure(const FigureSpec& f);

std::vector<double> parse_number_list(const std::string& s);
std::vector<std::string> parse_name_list(const std::string& s);

}  // namespace hepm
