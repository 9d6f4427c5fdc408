#include "waveshift/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "waveshift/errors.hpp"

namespace waveshift {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::vector<double> tick_positions(double lo, double hi, int target) {
    if (!(hi > lo)) return {lo};
    double raw = (hi - lo) / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    double t = std::ceil(lo / step) * step;
    for (; t <= hi + 0.5 * step; t += step) ticks.push_back(t);
    return ticks;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel,
                     const std::vector<PlotSeries>& series, const PlotOptions& opt) {
    if (series.empty()) throw ValidationError("write_line_plot: no series");

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty())
            throw ValidationError("write_line_plot: bad series '" + s.label + "'");
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double ml = 72, mr = 16, mt = 36, mb = 52;
    const double pw = opt.width - ml - mr, ph = opt.height - mt - mb;
    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto Y = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << " "
        << opt.height << "\">\n"
        << "<rect width=\"" << opt.width << "\" height=\"" << opt.height
        << "\" fill=\"white\"/>\n";

    out << "<text x=\"" << num(ml + pw / 2) << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";

    // axes box and ticks
    out << "<rect x=\"" << num(ml) << "\" y=\"" << num(mt) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : tick_positions(xmin, xmax, 6)) {
        double px = X(t);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(mt + ph) << "\" x2=\"" << num(px)
            << "\" y2=\"" << num(mt + ph + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(px) << "\" y=\"" << num(mt + ph + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(t) << "</text>\n";
    }
    for (double t : tick_positions(ymin, ymax, 6)) {
        double py = Y(t);
        out << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(py) << "\" x2=\"" << num(ml)
            << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(t)
            << "</text>\n";
    }
    out << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(opt.height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape(xlabel) << "</text>\n";
    out << "<text x=\"16\" y=\"" << num(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << num(mt + ph / 2) << ")\">" << escape(ylabel)
        << "</text>\n";

    // zero line if visible
    if (ymin < 0.0 && ymax > 0.0)
        out << "<line x1=\"" << num(ml) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(ml + pw)
            << "\" y2=\"" << num(Y(0)) << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";

    for (size_t s = 0; s < series.size(); ++s) {
        const auto& ser = series[s];
        size_t stride = std::max<size_t>(1, (ser.x.size() + opt.max_points - 1) / opt.max_points);
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % 8]
            << "\" stroke-width=\"1.2\" points=\"";
        for (size_t i = 0; i < ser.x.size(); i += stride)
            out << num(X(ser.x[i])) << "," << num(Y(ser.y[i])) << " ";
        size_t last = ser.x.size() - 1;
        if (last % stride != 0) out << num(X(ser.x[last])) << "," << num(Y(ser.y[last]));
        out << "\"/>\n";
    }

    // legend
    double ly = mt + 12;
    for (size_t s = 0; s < series.size(); ++s) {
        double lx = ml + pw - 150;
        out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
            << num(lx + 22) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << kPalette[s % 8]
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << num(lx + 28) << "\" y=\"" << num(ly)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(series[s].label)
            << "</text>\n";
        ly += 16;
    }

    out << "</svg>\n";
}

}  // namespace waveshift
