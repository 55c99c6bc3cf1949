#pragma once

#include "bcp/model.hpp"

namespace bcp {

// Bin-packing wrap-around baseline: chart i becomes an item of height
// max(a_i, b_i), first-fit-decreasing packs the items into unit bins of
// width two cells, and the k-th bin (1-based) starts at cell 2k-1.
Packing pack_ffd_wrap(const Instance& instance);

}  // namespace bcp
