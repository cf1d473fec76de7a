#pragma once

// Minimal deterministic SVG line chart, just enough for the simulator's
// result plots. No external dependencies.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "armfatigue/errors.hpp"

namespace armfatigue::plot {

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

class LineChart {
public:
    LineChart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add(std::string label, std::string color, std::vector<double> x,
             std::vector<double> y) {
        series_.push_back({std::move(label), std::move(color), std::move(x), std::move(y)});
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + path + "' for writing");
        out << render();
        if (!out) throw IoError("I/O failure while writing '" + path + "'");
    }

private:
    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", v);
        return buf;
    }

    static double nice_step(double range, int target_ticks) {
        const double raw = range / target_ticks;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        const double norm = raw / mag;
        const double step = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
        return step * mag;
    }

    std::string render() const {
        constexpr double w = 960, h = 540;
        constexpr double ml = 74, mr = 24, mt = 48, mb = 56;
        const double pw = w - ml - mr, ph = h - mt - mb;

        double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
        bool first = true;
        for (const auto& s : series_) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (first) {
                    x_min = x_max = s.x[i];
                    y_min = y_max = s.y[i];
                    first = false;
                }
                x_min = std::min(x_min, s.x[i]);
                x_max = std::max(x_max, s.x[i]);
                y_min = std::min(y_min, s.y[i]);
                y_max = std::max(y_max, s.y[i]);
            }
        }
        if (x_max - x_min <= 0) { x_min -= 1; x_max += 1; }
        if (y_max - y_min <= 0) { y_min -= 1; y_max += 1; }
        const double y_pad = 0.05 * (y_max - y_min);
        y_min -= y_pad;
        y_max += y_pad;

        auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
        auto py = [&](double y) { return mt + ph - (y - y_min) / (y_max - y_min) * ph; };

        std::string svg;
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
               num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
        svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        svg += "<text x=\"" + num(w / 2) + "\" y=\"24\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"16\">" + title_ + "</text>\n";

        // axes, grid, ticks
        const double xs = nice_step(x_max - x_min, 8);
        const double ys = nice_step(y_max - y_min, 6);
        svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
        for (double x = std::ceil(x_min / xs) * xs; x <= x_max + 1e-9 * xs; x += xs) {
            svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(px(x)) +
                   "\" y2=\"" + num(mt + ph) + "\" stroke=\"#e4e4e4\"/>\n";
            svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(mt + ph + 16) +
                   "\" text-anchor=\"middle\">" + num(x) + "</text>\n";
        }
        for (double y = std::ceil(y_min / ys) * ys; y <= y_max + 1e-9 * ys; y += ys) {
            svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(ml + pw) +
                   "\" y2=\"" + num(py(y)) + "\" stroke=\"#e4e4e4\"/>\n";
            svg += "<text x=\"" + num(ml - 6) + "\" y=\"" + num(py(y) + 4) +
                   "\" text-anchor=\"end\">" + num(y) + "</text>\n";
        }
        svg += "</g>\n";
        svg += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" + num(pw) +
               "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#555\"/>\n";
        svg += "<text x=\"" + num(ml + pw / 2) + "\" y=\"" + num(h - 14) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
               x_label_ + "</text>\n";
        svg += "<text x=\"18\" y=\"" + num(mt + ph / 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
               "transform=\"rotate(-90 18 " + num(mt + ph / 2) + ")\">" + y_label_ + "</text>\n";

        // series, decimated to keep files small
        for (const auto& s : series_) {
            const std::size_t n = s.x.size();
            if (n == 0) continue;
            const std::size_t step = std::max<std::size_t>(1, n / 2400);
            std::string pts;
            for (std::size_t i = 0; i < n; i += step) {
                pts += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
            }
            if ((n - 1) % step != 0) pts += num(px(s.x[n - 1])) + "," + num(py(s.y[n - 1]));
            svg += "<polyline fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.4\" points=\"" + pts + "\"/>\n";
        }

        // legend
        double lx = ml + 10, ly = mt + 16;
        for (const auto& s : series_) {
            svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
                   num(lx + 22) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + s.color +
                   "\" stroke-width=\"2\"/>\n";
            svg += "<text x=\"" + num(lx + 28) + "\" y=\"" + num(ly) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">" + s.label +
                   "</text>\n";
            ly += 17;
        }

        svg += "</svg>\n";
        return svg;
    }

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

} // namespace armfatigue::plot
