#include "bcp/model.hpp"

#include <algorithm>

namespace bcp {

Height BarChart::max_height() const {
    Height best = 0;
    for (Height h : heights) best = std::max(best, h);
    return best;
}

bool BarChart::non_increasing() const {
    for (std::size_t i = 1; i < heights.size(); ++i)
        if (heights[i - 1] < heights[i]) return false;
    return true;
}

bool BarChart::non_decreasing() const {
    for (std::size_t i = 1; i < heights.size(); ++i)
        if (heights[i - 1] > heights[i]) return false;
    return true;
}

int Instance::max_width() const {
    int w = 0;
    for (const auto& c : charts) w = std::max(w, c.width());
    return w;
}

Height Instance::total_height() const {
    Height sum = 0;
    for (const auto& c : charts)
        for (Height h : c.heights) sum += h;
    return sum;
}

bool Instance::is_two_bar() const {
    for (const auto& c : charts)
        if (c.width() != 2) return false;
    return true;
}

std::vector<int> Instance::origin(int chart_id) const {
    if (origins.empty()) return {chart_id};
    return origins[chart_id];
}

int Packing::at(int chart_id) const {
    auto it = start_cell.find(chart_id);
    if (it == start_cell.end())
        throw ValidationError("packing has no start for chart " + std::to_string(chart_id));
    return it->second;
}

ChartOrder input_order(const Instance& instance) {
    ChartOrder order(instance.size());
    for (int i = 0; i < instance.size(); ++i) order[i] = i;
    return order;
}

Instance normalize(const Instance& raw) {
    if (raw.charts.empty()) throw ValidationError("instance needs at least one chart");
    if (raw.strip_height <= 0) throw ValidationError("strip height must be positive");

    Instance out;
    out.strip_height = raw.strip_height;
    for (int i = 0; i < raw.size(); ++i) {
        const BarChart& c = raw.charts[i];
        if (c.heights.empty())
            throw ValidationError("chart " + std::to_string(i) + ": needs at least one bar");
        BarChart norm;
        norm.id = i;
        for (Height h : c.heights) {
            if (h <= 0)
                throw ValidationError("chart " + std::to_string(i) + ": non-positive height " +
                                      format_height(h));
            if (h > raw.strip_height)
                throw ValidationError("chart " + std::to_string(i) + ": height " + format_height(h) +
                                      " exceeds strip height");
            norm.heights.push_back(
                div_round_half_up(static_cast<__int128>(h) * kUnit, raw.strip_height));
        }
        out.charts.push_back(std::move(norm));
        out.origins.push_back(raw.origin(i));
    }
    return out;
}

std::map<int, Height> cell_loads(const Instance& instance, const Packing& packing) {
    std::map<int, Height> loads;
    for (const auto& [id, start] : packing.start_cell) {
        if (id < 0 || id >= instance.size())
            throw ValidationError("packing refers to unknown chart " + std::to_string(id));
        if (start < 1) throw ValidationError("start cells are 1-based");
        const BarChart& c = instance.charts[id];
        for (int j = 0; j < c.width(); ++j) loads[start + j] += c.heights[j];
    }
    return loads;
}

int occupied_count(const Instance& instance, const Packing& packing) {
    return static_cast<int>(cell_loads(instance, packing).size());
}

PackingReport evaluate(const Instance& instance, const Packing& packing) {
    if (static_cast<int>(packing.start_cell.size()) != instance.size())
        throw ValidationError("packing must cover exactly the instance's charts");
    for (const auto& c : instance.charts)
        if (!packing.start_cell.count(c.id))
            throw ValidationError("packing misses chart " + std::to_string(c.id));

    PackingReport report;
    report.cell_loads = cell_loads(instance, packing);
    report.length = static_cast<int>(report.cell_loads.size());
    for (const auto& [cell, load] : report.cell_loads)
        if (load > kUnit) report.violations.emplace_back(cell, load);
    report.feasible = report.violations.empty();
    report.density = report.length == 0
                         ? 0.0
                         : static_cast<double>(instance.total_height()) /
                               (static_cast<double>(report.length) * kUnit);
    return report;
}

Packing left_justify(const Instance& instance, const Packing& packing) {
    for (const auto& [cell, load] : cell_loads(instance, packing))
        if (load > kUnit)
            throw ValidationError("left_justify requires a feasible packing (cell " +
                                  std::to_string(cell) + " overflows)");

    // Heights are strictly positive, so no chart spans an empty cell: a gap
    // cleanly separates charts and the whole right side can shift at once.
    Packing out = packing;
    for (;;) {
        auto loads = cell_loads(instance, out);
        if (loads.empty()) return out;
        int shift_from = 0;
        int shift_by = 0;
        int first = loads.begin()->first;
        if (first > 1) {
            shift_from = first;
            shift_by = first - 1;
        } else {
            int prev = first;
            for (auto it = std::next(loads.begin()); it != loads.end(); ++it) {
                if (it->first > prev + 1) {
                    shift_from = it->first;
                    shift_by = it->first - prev - 1;
                    break;
                }
                prev = it->first;
            }
            if (shift_from == 0) return out;
        }
        for (auto& [id, start] : out.start_cell)
            if (start >= shift_from) start -= shift_by;
    }
}

Instance reversed_heights(const Instance& instance) {
    Instance out = instance;
    for (auto& c : out.charts) std::reverse(c.heights.begin(), c.heights.end());
    return out;
}

Packing mirror_packing(const Instance& instance, const Packing& packed, int frame_length) {
    Packing out;
    for (const auto& [id, start] : packed.start_cell) {
        int w = instance.charts[id].width();
        out.start_cell[id] = frame_length - (start + w - 1) + 1;
    }
    return out;
}

void require_two_bar(const Instance& instance) {
    for (const auto& c : instance.charts)
        if (c.width() != 2)
            throw MismatchError("two-bar method on chart " + std::to_string(c.id) + " with " +
                                std::to_string(c.width()) + " bars");
}

void validate_order(const Instance& instance, const ChartOrder& order) {
    std::vector<char> seen(instance.size(), 0);
    for (int id : order) {
        if (id < 0 || id >= instance.size())
            throw ValidationError("order refers to unknown chart " + std::to_string(id));
        if (seen[id]) throw ValidationError("order lists chart " + std::to_string(id) + " twice");
        seen[id] = 1;
    }
}

}  // namespace bcp
