#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcp/fixed.hpp"

namespace bcp {

// A bar chart: unit-width bars with heights in (0, kUnit], drawn in order.
struct BarChart {
    int id = 0;
    std::vector<Height> heights;

    int width() const { return static_cast<int>(heights.size()); }
    Height max_height() const;
    bool non_increasing() const;
    bool non_decreasing() const;
    // two-bar accessors
    Height first_bar() const { return heights.front(); }
    Height second_bar() const { return heights.back(); }

    bool operator==(const BarChart&) const = default;
};

// Charts with the strip height normalized to kUnit. Chart ids equal their
// position. origins maps each chart to the original chart ids it stands
// for; it is the identity until charts get merged or reordered.
struct Instance {
    std::vector<BarChart> charts;
    Height strip_height = kUnit;  // the D the input was normalized by
    std::vector<std::vector<int>> origins;

    int size() const { return static_cast<int>(charts.size()); }
    int max_width() const;
    Height total_height() const;
    bool is_two_bar() const;
    std::vector<int> origin(int chart_id) const;
};

// Start cell of each chart's first bar, 1-based. May cover a subset of an
// instance while a packing is being assembled stage by stage.
struct Packing {
    std::map<int, int> start_cell;

    bool empty() const { return start_cell.empty(); }
    int at(int chart_id) const;
};

struct PackingReport {
    bool feasible = false;
    int length = 0;  // occupied cells, not the max index
    std::map<int, Height> cell_loads;
    double density = 0.0;
    std::vector<std::pair<int, Height>> violations;
};

using ChartOrder = std::vector<int>;

ChartOrder input_order(const Instance& instance);

// Divides every height by strip_height (half-up in fixed point) and keeps
// the original D around. Rejects heights outside (0, D] by chart id.
Instance normalize(const Instance& raw);

// Infeasibility is a verdict, not an error; the report carries the
// offending cells. Requires the packing to cover exactly the instance.
PackingReport evaluate(const Instance& instance, const Packing& packing);

// Removes gaps by shifting everything right of a gap leftward. Keeps
// feasibility and the occupied-cell count. Requires a feasible packing.
Packing left_justify(const Instance& instance, const Packing& packing);

// Loads of an arbitrary (possibly partial) packing; no coverage check.
std::map<int, Height> cell_loads(const Instance& instance, const Packing& packing);
int occupied_count(const Instance& instance, const Packing& packing);

// Same ids, each chart's height sequence reversed.
Instance reversed_heights(const Instance& instance);

// Maps a packing of the reversed instance back onto the original cells:
// a chart of width w at s within a frame of length L lands at L-(s+w-1)+1.
Packing mirror_packing(const Instance& instance, const Packing& packed, int frame_length);

void require_two_bar(const Instance& instance);
void validate_order(const Instance& instance, const ChartOrder& order);

}  // namespace bcp
