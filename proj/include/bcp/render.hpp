#pragma once

#include <string>

#include "bcp/model.hpp"

namespace bcp {

// Standalone SVG: one column per cell with gridlines, bars stacked in
// ascending chart id with a distinct fill per chart, and a dashed capacity
// line at load 1. Rejects infeasible packings unless force is set.
std::string render_svg(const Instance& instance, const Packing& packing, bool force = false);

}  // namespace bcp
