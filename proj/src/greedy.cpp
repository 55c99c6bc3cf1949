#include "bcp/greedy.hpp"

namespace bcp {

namespace {

bool fits(const std::vector<Height>& loads, const BarChart& chart, int start) {
    for (int j = 0; j < chart.width(); ++j) {
        int cell = start + j;
        Height current = cell < static_cast<int>(loads.size()) ? loads[cell] : 0;
        if (current + chart.heights[j] > kUnit) return false;
    }
    return true;
}

void place(std::vector<Height>& loads, const BarChart& chart, int start) {
    if (static_cast<int>(loads.size()) < start + chart.width())
        loads.resize(start + chart.width(), 0);
    for (int j = 0; j < chart.width(); ++j) loads[start + j] += chart.heights[j];
}

}  // namespace

Packing pack_g(const Instance& instance, const ChartOrder& order) {
    validate_order(instance, order);
    if (order.empty()) throw ValidationError("pack_g needs a non-empty order");

    std::vector<Height> loads(1, 0);  // cell 0 unused
    Packing packing;
    int prev_start = 1;
    for (int id : order) {
        const BarChart& chart = instance.charts[id];
        // the scan always terminates: one past the current maximum occupied
        // cell every bar meets an empty strip
        int s = prev_start;
        while (!fits(loads, chart, s)) ++s;
        place(loads, chart, s);
        packing.start_cell[id] = s;
        prev_start = s;
    }
    return packing;
}

Packing pack_g_right_to_left(const Instance& instance, const ChartOrder& order) {
    Instance rev = reversed_heights(instance);
    Packing packed = pack_g(rev, order);
    int frame = occupied_count(rev, packed);
    return left_justify(instance, mirror_packing(instance, packed, frame));
}

}  // namespace bcp
