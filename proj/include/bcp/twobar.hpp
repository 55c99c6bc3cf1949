#pragma once

#include <optional>

#include "bcp/model.hpp"

namespace bcp {

// All operations here require two-bar charts (first bar a, second bar b).

struct MergeResult {
    Instance merged;
    std::optional<int> leftover_small;  // merged-chart id with both bars <= 1/2
};

struct SplitSets {
    ChartOrder s1;  // a >= b, with the leftover forced to the tail
    ChartOrder s2;  // a < b
};

enum class LexKey { first_bar, max_bar };

// Greedy that may reorder: the first chart of the order goes to cells 1-2;
// afterwards the chart achieving the globally leftmost feasible start is
// placed, ties broken by the earliest position in the order. Placed charts
// never move.
Packing pack_ga(const Instance& instance, const ChartOrder& order);
Packing pack_ga_right_to_left(const Instance& instance, const ChartOrder& order);

// Single-accumulator scan: charts with a bar above 1/2 pass through; small
// charts are summed bar-wise until the sum gains a bar above 1/2. At most
// one small chart (the accumulator's remains) survives. Exactly conserves
// the total height and records constituents in origins.
MergeResult merge_small(const Instance& instance);

// Partition by bar comparison, leftover appended to s1 regardless of shape.
// Relative order is preserved within each set.
SplitSets split(const Instance& instance, std::optional<int> leftover);

// Translates the right packing as one rigid block onto the end of the left
// one by the largest feasible shift, then left-justifies. Either side may
// be empty.
Packing shift_join(const Instance& instance, const Packing& left, const Packing& right);

// Descending lexicographic order of height sequences, ties by ascending id.
// max_bar compares the tallest bar first and is exposed as an alternative
// key for measurement.
ChartOrder lex_order(const Instance& instance, LexKey key = LexKey::first_bar);

struct StagedPacking {
    MergeResult merge;
    SplitSets sets;
    Packing left, right, joined;
    Packing expanded;  // over the charts the instance originated from
};

// merge -> split -> pack_ga(s1) + pack_ga_right_to_left(s2) -> shift_join,
// then constituents inherit their merged chart's start cell.
StagedPacking algorithm_a_trace(const Instance& instance);
Packing algorithm_a(const Instance& instance);

// Same pipeline without the merge stage (and hence no leftover).
StagedPacking algorithm_a1_trace(const Instance& instance);
Packing algorithm_a1(const Instance& instance);

// Remaps a packing over a derived instance onto the original chart ids.
Packing expand_to_origins(const Instance& derived, const Packing& packing);

// Charts renumbered 0..n-1 following the order; origins are composed so
// packings of the reordered instance expand back to the original ids.
Instance reorder(const Instance& instance, const ChartOrder& order);

}  // namespace bcp
