#pragma once

#include <string>
#include <vector>

namespace polariton::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    int width = 640;
    int height = 420;
};

/// Polylines on linear axes (log10 on y if requested) with ticks and a legend.
/// Non-finite points, and non-positive ones on a log axis, are skipped.
std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series);

void write_svg(const std::string& path, const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace polariton::cli
