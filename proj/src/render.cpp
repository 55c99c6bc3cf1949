#include "bcp/render.hpp"

#include <algorithm>
#include <cstdio>

namespace bcp {

namespace {

const char* const kPalette[] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};
constexpr int kPaletteSize = 12;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const Packing& packing, bool force) {
    PackingReport report = evaluate(instance, packing);
    if (!report.feasible && !force)
        throw ValidationError("packing is infeasible; pass force to render it anyway");

    int last_cell = report.cell_loads.rbegin()->first;
    double max_load = 1.0;
    for (const auto& [cell, load] : report.cell_loads)
        max_load = std::max(max_load, static_cast<double>(load) / kUnit);

    const double cell_w = 48.0;
    const double unit_h = 240.0;
    const double margin_left = 42.0, margin_right = 16.0;
    const double margin_top = 24.0, margin_bottom = 36.0;
    const double plot_h = unit_h * max_load * 1.05;
    const double width = margin_left + cell_w * last_cell + margin_right;
    const double height = margin_top + plot_h + margin_bottom;
    const double base_y = margin_top + plot_h;  // load 0
    auto load_y = [&](double load) { return base_y - load * unit_h; };
    auto cell_x = [&](int cell) { return margin_left + (cell - 1) * cell_w; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // bars stacked in ascending chart id
    std::map<int, double> stack;  // cell -> load already drawn
    for (const auto& chart : instance.charts) {
        int start = packing.at(chart.id);
        const char* fill = kPalette[chart.id % kPaletteSize];
        for (int j = 0; j < chart.width(); ++j) {
            int cell = start + j;
            double h = static_cast<double>(chart.heights[j]) / kUnit;
            double y0 = stack[cell];
            svg += "<rect class=\"bar\" x=\"" + num(cell_x(cell) + 1) + "\" y=\"" +
                   num(load_y(y0 + h)) + "\" width=\"" + num(cell_w - 2) + "\" height=\"" +
                   num(h * unit_h) + "\" fill=\"" + fill + "\" stroke=\"#333333\" stroke-width=\"0.5\">" +
                   "<title>chart " + std::to_string(chart.id) + ", cell " + std::to_string(cell) +
                   "</title></rect>\n";
            stack[cell] = y0 + h;
        }
    }

    // cell gridlines and labels
    int label_step = last_cell > 30 ? 5 : 1;
    for (int c = 1; c <= last_cell + 1; ++c) {
        double x = cell_x(c);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(margin_top) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(base_y) + "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
        if (c <= last_cell && (c == 1 || c % label_step == 0))
            svg += "<text x=\"" + num(x + cell_w / 2) + "\" y=\"" + num(base_y + 16) +
                   "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">" +
                   std::to_string(c) + "</text>\n";
    }
    svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(base_y) + "\" x2=\"" +
           num(cell_x(last_cell + 1)) + "\" y2=\"" + num(base_y) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // capacity line at load 1
    svg += "<line class=\"capacity\" x1=\"" + num(margin_left) + "\" y1=\"" + num(load_y(1.0)) +
           "\" x2=\"" + num(cell_x(last_cell + 1)) + "\" y2=\"" + num(load_y(1.0)) +
           "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    svg += "<text x=\"" + num(margin_left - 6) + "\" y=\"" + num(load_y(1.0) + 4) +
           "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"end\">1.0</text>\n";

    svg += "</svg>\n";
    return svg;
}

}  // namespace bcp
