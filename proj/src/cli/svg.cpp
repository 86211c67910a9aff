#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ris/cli.hpp"

namespace ris::cli {

namespace {

constexpr double kW = 720.0;
constexpr double kH = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 200.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

bool is_stderr(const std::string& name) {
    return name.size() >= 7 && name.compare(name.size() - 7, 7, "_stderr") == 0;
}

}  // namespace

std::string to_svg(const Table& table) {
    std::vector<std::size_t> series;
    for (std::size_t c = 1; c < table.header.size(); ++c) {
        if (!is_stderr(table.header[c])) series.push_back(c);
    }
    auto yval = [&](double v) { return table.log_y ? (v > 0.0 ? std::log10(v) : std::nan("")) : v; };

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& row : table.rows) {
        x0 = std::min(x0, row[0]);
        x1 = std::max(x1, row[0]);
        for (std::size_t c : series) {
            const double y = yval(row[c]);
            if (std::isfinite(y)) {
                y0 = std::min(y0, y);
                y1 = std::max(y1, y);
            }
        }
    }
    if (!std::isfinite(x0) || x1 == x0) x1 = x0 + 1.0;
    if (!std::isfinite(y0)) y0 = 0.0, y1 = 1.0;
    if (y1 == y0) y1 = y0 + 1.0;
    if (table.log_y) y0 = std::floor(y0), y1 = std::ceil(y1);

    const double pw = kW - kLeft - kRight;
    const double ph = kH - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
        "font-size=\"11\">\n",
        kW, kH);
    s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", kLeft,
                     kTop, pw, ph);
    s += fmt::format("<text x=\"{}\" y=\"18\">{}</text>\n", kLeft, table.title);
    for (int i = 0; i <= 4; ++i) {
        const double x = x0 + (x1 - x0) * i / 4.0;
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.4g}</text>\n", px(x), kH - kBottom + 16,
                         x);
    }
    const int yticks = table.log_y ? static_cast<int>(std::min(8.0, y1 - y0)) : 4;
    for (int i = 0; i <= yticks; ++i) {
        const double y = y0 + (y1 - y0) * i / std::max(yticks, 1);
        const std::string label = table.log_y ? fmt::format("1e{:.0f}", y) : fmt::format("{:.4g}", y);
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n", kLeft - 4, py(y) + 4, label);
    }
    s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2, kH - 12,
                     table.header.empty() ? "" : table.header[0]);

    for (std::size_t k = 0; k < series.size(); ++k) {
        const std::size_t c = series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        std::string pts;
        for (const auto& row : table.rows) {
            const double y = yval(row[c]);
            if (!std::isfinite(y) || !std::isfinite(row[0])) continue;
            pts += fmt::format("{:.2f},{:.2f} ", px(row[0]), py(y));
        }
        s += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", color, pts);
        const double ly = kTop + 14.0 * static_cast<double>(k) + 8.0;
        s += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\"/>\n",
                         kW - kRight + 10, ly, kW - kRight + 30, ly, color);
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", kW - kRight + 34, ly + 4, table.header[c]);
    }
    s += "</svg>\n";
    return s;
}

}  // namespace ris::cli
