#pragma once

#include <string>

#include "bcp/model.hpp"

namespace bcp {

// max(ceil of the total height, count of bars above 1/2). Never exceeds
// the optimum; the area part is loose on instances dominated by tall bars.
int packing_lower_bound(const Instance& instance);

struct ExactResult {
    Packing packing;
    int length = 0;
    bool proven_optimal = false;
};

// Depth-first branch and bound over start cells 1..2n-1 (any packing can be
// left-justified into the 2n cells a plain concatenation needs). Charts are
// branched in descending lexicographic order, the incumbent comes from
// pack_ga on that order, and identical charts get non-decreasing starts
// unless symmetry breaking is disabled. On timeout the incumbent is
// returned with proven_optimal = false.
ExactResult solve_exact(const Instance& instance, double time_limit_sec,
                        bool symmetry_breaking = true);

struct BlpModel {
    int horizon = 0;  // 2n capacity rows
    int num_x = 0;
    int num_y = 0;
    int num_assign_rows = 0;
    int num_capacity_rows = 0;
    std::string lp;  // CPLEX-style LP text
};

// Binary program over x_i_j (chart i starts at cell j, j <= 2n-1) and y_j
// (cell j is used): minimize sum y_j subject to one start per chart and
// sum_i a_i x_i_j + sum_k b_k x_k_(j-1) <= y_j per cell. Coefficients are
// exact decimals; names are deterministic.
BlpModel build_blp(const Instance& instance);
std::string export_blp(const Instance& instance);

}  // namespace bcp
