#pragma once

#include <string>
#include <vector>

namespace waveshift {

/// One polyline of a plot. Series with many samples are thinned to at most
/// max_points before writing; the CSV next to the plot keeps the full data.
struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    int width = 860;
    int height = 520;
    int max_points = 2000;
};

/// Minimal static SVG 1.1 line plot: axes, tick labels, legend. Coordinates
/// are written with 9 significant digits, so repeated runs are byte-identical.
void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel,
                     const std::vector<PlotSeries>& series, const PlotOptions& opt = {});

}  // namespace waveshift
