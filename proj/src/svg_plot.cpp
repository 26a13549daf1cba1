#include "netinterp/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace netinterp {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<SvgSeries>& series,
                              int width, int height) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmin < xmax)) {
        xmin -= 1;
        xmax += 1;
    }
    if (!(ymin < ymax)) {
        ymin -= 1;
        ymax += 1;
    }
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const int ml = 60, mr = 16, mt = 32, mb = 44;
    double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" << title
       << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"#444\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        double fx = xmin + (xmax - xmin) * i / 4.0;
        double fy = ymin + (ymax - ymin) * i / 4.0;
        os << "<line x1=\"" << px(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(fx) << "\" y2=\""
           << mt + ph + 4 << "\" stroke=\"#444\"/>\n";
        os << "<text x=\"" << px(fx) << "\" y=\"" << mt + ph + 18 << "\" text-anchor=\"middle\">" << fmt(fx)
           << "</text>\n";
        os << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml << "\" y2=\"" << py(fy)
           << "\" stroke=\"#444\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\">" << fmt(fy)
           << "</text>\n";
    }
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 8 << "\" text-anchor=\"middle\">" << x_label
       << "</text>\n";
    os << "<text x=\"14\" y=\"" << mt + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
       << mt + ph / 2 << ")\">" << y_label << "</text>\n";

    int color = 0;
    int legend_y = mt + 14;
    for (const auto& s : series) {
        const char* c = kPalette[color % 6];
        os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : s.points) os << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
        os << "\"/>\n";
        if (!s.name.empty()) {
            os << "<line x1=\"" << ml + pw - 130 << "\" y1=\"" << legend_y << "\" x2=\"" << ml + pw - 110
               << "\" y2=\"" << legend_y << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
            os << "<text x=\"" << ml + pw - 104 << "\" y=\"" << legend_y + 4 << "\">" << s.name
               << "</text>\n";
            legend_y += 16;
        }
        ++color;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace netinterp
