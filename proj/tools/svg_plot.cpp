#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace qeraser::plot {

namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 300.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 40.0;

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool x_axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Series& s : series) {
        for (const auto& [x, y] : s.points) {
            const double v = x_axis ? x : y;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!(lo < hi)) {
        lo -= 0.5;
        hi += 0.5;
    }
    if (!x_axis) {
        const double pad = 0.06 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
    return {lo, hi};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

void render_panel(std::ofstream& out, double y_offset, const std::string& title,
                  const std::vector<Series>& series) {
    const Range xr = data_range(series, true);
    const Range yr = data_range(series, false);
    const double x0 = kMarginLeft;
    const double x1 = kWidth - kMarginRight;
    const double y0 = y_offset + kPanelHeight - kMarginBottom;
    const double y1 = y_offset + kMarginTop;

    auto map_x = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
    auto map_y = [&](double y) { return y0 + (y - yr.lo) / (yr.hi - yr.lo) * (y1 - y0); };

    out << "<text x=\"" << kMarginLeft << "\" y=\"" << y_offset + 20.0
        << "\" font-size=\"14\" font-family=\"sans-serif\">" << title << "</text>\n";
    out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0
        << "\" height=\"" << y0 - y1 << "\" fill=\"none\" stroke=\"#444\"/>\n";

    const int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double fx = xr.lo + (xr.hi - xr.lo) * t / ticks;
        const double fy = yr.lo + (yr.hi - yr.lo) * t / ticks;
        const double px = map_x(fx);
        const double py = map_y(fy);
        out << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\""
            << y0 + 4 << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << y0 + 17
            << "\" font-size=\"10\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << fmt(fx) << "</text>\n";
        out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\""
            << py << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << x0 - 7 << "\" y=\"" << py + 3
            << "\" font-size=\"10\" text-anchor=\"end\" font-family=\"sans-serif\">"
            << fmt(fy) << "</text>\n";
    }
    if (yr.lo < 0.0 && yr.hi > 0.0) {
        const double py = map_y(0.0);
        out << "<line x1=\"" << x0 << "\" y1=\"" << py << "\" x2=\"" << x1 << "\" y2=\"" << py
            << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
    }

    double legend_x = x0 + 10.0;
    for (const Series& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : s.points) out << map_x(x) << "," << map_y(y) << " ";
        out << "\"/>\n";
        for (const auto& [x, y] : s.points) {
            out << "<circle cx=\"" << map_x(x) << "\" cy=\"" << map_y(y)
                << "\" r=\"2.2\" fill=\"" << s.color << "\"/>\n";
        }
        out << "<text x=\"" << legend_x << "\" y=\"" << y1 + 14 << "\" font-size=\"11\" fill=\""
            << s.color << "\" font-family=\"sans-serif\">" << s.label << "</text>\n";
        legend_x += 14.0 + 7.5 * static_cast<double>(s.label.size());
    }
}

}  // namespace

bool write_svg(const std::string& path,
               const std::string& top_title, const std::vector<Series>& top,
               const std::string& bottom_title, const std::vector<Series>& bottom) {
    std::ofstream out(path);
    if (!out) return false;
    const double height = 2.0 * kPanelHeight;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << height << "\" viewBox=\"0 0 " << kWidth << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    render_panel(out, 0.0, top_title, top);
    render_panel(out, kPanelHeight, bottom_title, bottom);
    out << "</svg>\n";
    return static_cast<bool>(out);
}

}  // namespace qeraser::plot
