#pragma once

#include "bcp/model.hpp"

namespace bcp {

// Order-preserving greedy: the first chart goes to cell 1, every later
// chart to the leftmost feasible start not left of its predecessor's.
Packing pack_g(const Instance& instance, const ChartOrder& order);

// Mirror construction: reverse every chart, run pack_g, reflect the result,
// then left-justify for reporting.
Packing pack_g_right_to_left(const Instance& instance, const ChartOrder& order);

}  // namespace bcp
