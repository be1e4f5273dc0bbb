#include "qcr/svg.hpp"

#include "qcr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace qcr::plot {
namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 540;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 160;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#c0392b", "#2980b9", "#27ae60", "#111111",
                          "#8e44ad", "#e67e22", "#16a085"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

std::string render_svg(const io::Table& table, const std::vector<std::string>& columns) {
    if (columns.empty()) {
        throw std::invalid_argument("render_svg: no columns selected");
    }
    if (table.rows.empty()) {
        throw std::invalid_argument("render_svg: table has no rows");
    }
    std::vector<std::size_t> idx;
    idx.reserve(columns.size());
    for (const auto& name : columns) {
        idx.push_back(table.column_index(name));   // throws on unknown column
    }
    const std::size_t xcol = 0;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = std::numeric_limits<double>::infinity(), y_max = -y_min;
    for (const auto& row : table.rows) {
        x_min = std::min(x_min, row[xcol]);
        x_max = std::max(x_max, row[xcol]);
        for (std::size_t c : idx) {
            y_min = std::min(y_min, row[c]);
            y_max = std::max(y_max, row[c]);
        }
    }
    if (x_max <= x_min) {
        x_max = x_min + 1.0;
    }
    if (y_max <= y_min) {
        y_max = y_min + 1.0;
    }
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + plot_w * (x - x_min) / (x_max - x_min); };
    auto sy = [&](double y) { return kMarginTop + plot_h * (1.0 - (y - y_min) / (y_max - y_min)); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth)
           + "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 "
           + std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop + plot_h)
           + "\" x2=\"" + fmt(kMarginLeft + plot_w) + "\" y2=\"" + fmt(kMarginTop + plot_h)
           + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop)
           + "\" x2=\"" + fmt(kMarginLeft) + "\" y2=\"" + fmt(kMarginTop + plot_h)
           + "\" stroke=\"black\"/>\n";

    const int n_ticks = 6;
    for (int k = 0; k < n_ticks; ++k) {
        const double fx = x_min + (x_max - x_min) * k / (n_ticks - 1);
        const double px = sx(fx);
        svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kMarginTop + plot_h)
               + "\" x2=\"" + fmt(px) + "\" y2=\"" + fmt(kMarginTop + plot_h + 6) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kMarginTop + plot_h + 22)
               + "\" font-size=\"12\" text-anchor=\"middle\">" + tick_label(fx) + "</text>\n";
        const double fy = y_min + (y_max - y_min) * k / (n_ticks - 1);
        const double py = sy(fy);
        svg += "<line x1=\"" + fmt(kMarginLeft - 6) + "\" y1=\"" + fmt(py)
               + "\" x2=\"" + fmt(kMarginLeft) + "\" y2=\"" + fmt(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(kMarginLeft - 10) + "\" y=\"" + fmt(py + 4)
               + "\" font-size=\"12\" text-anchor=\"end\">" + tick_label(fy) + "</text>\n";
    }
    svg += "<text x=\"" + fmt(kMarginLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 10)
           + "\" font-size=\"13\" text-anchor=\"middle\">" + table.columns[xcol] + "</text>\n";

    for (std::size_t series = 0; series < idx.size(); ++series) {
        const char* color = kPalette[series % (sizeof kPalette / sizeof kPalette[0])];
        std::string points;
        for (const auto& row : table.rows) {
            points += fmt(sx(row[xcol]));
            points += ',';
            points += fmt(sy(row[idx[series]]));
            points += ' ';
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.2\" points=\"" + points + "\"/>\n";

        const double ly = kMarginTop + 16.0 * static_cast<double>(series) + 8.0;
        const double lx = kMarginLeft + plot_w + 12.0;
        svg += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 22)
               + "\" y2=\"" + fmt(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(lx + 28) + "\" y=\"" + fmt(ly + 4)
               + "\" font-size=\"12\">" + columns[series] + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void render_plot(const io::Table& table, const std::vector<std::string>& columns,
                 const std::string& path) {
    const std::string svg = render_svg(table, columns);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open for writing: " + path);
    }
    out << svg;
    if (!out) {
        throw io_error("write failed: " + path);
    }
}

} // namespace qcr::plot
