#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qeraser::plot {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Minimal static renderer: two stacked panels with axes, tick labels,
// polylines and an inline legend.  Returns false when the file cannot be
// written.
bool write_svg(const std::string& path,
               const std::string& top_title, const std::vector<Series>& top,
               const std::string& bottom_title, const std::vector<Series>& bottom);

}  // namespace qeraser::plot
