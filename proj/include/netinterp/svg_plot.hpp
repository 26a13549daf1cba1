#pragma once

#include <string>
#include <utility>
#include <vector>

namespace netinterp {

// Minimal line-chart renderer for the CLI. CSV stays the canonical output;
// these plots are a convenience view of the same series.
struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<SvgSeries>& series,
                              int width = 720, int height = 440);

}  // namespace netinterp
