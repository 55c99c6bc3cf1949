#include "bcp/twobar.hpp"

#include <algorithm>
#include <limits>

namespace bcp {

namespace {

void require_two_bar_subset(const Instance& instance, const ChartOrder& order) {
    for (int id : order)
        if (instance.charts[id].width() != 2)
            throw MismatchError("two-bar method on chart " + std::to_string(id) + " with " +
                                std::to_string(instance.charts[id].width()) + " bars");
}

}  // namespace

Packing pack_ga(const Instance& instance, const ChartOrder& order) {
    validate_order(instance, order);
    if (order.empty()) throw ValidationError("pack_ga needs a non-empty order");
    require_two_bar_subset(instance, order);

    const int m = static_cast<int>(order.size());
    std::vector<Height> loads(2 * m + 2, 0);
    Packing packing;

    auto fits = [&](int id, int s) {
        const auto& h = instance.charts[id].heights;
        return loads[s] + h[0] <= kUnit && loads[s + 1] + h[1] <= kUnit;
    };
    auto place = [&](int id, int s) {
        const auto& h = instance.charts[id].heights;
        loads[s] += h[0];
        loads[s + 1] += h[1];
        packing.start_cell[id] = s;
    };

    place(order[0], 1);

    // Loads only grow, so each chart's leftmost feasible start moves
    // monotonically right; cached positions stay valid between rounds.
    std::vector<int> remaining(order.begin() + 1, order.end());
    std::vector<int> cached(instance.size(), 1);
    while (!remaining.empty()) {
        int best_pos = -1;
        int best_start = std::numeric_limits<int>::max();
        for (int k = 0; k < static_cast<int>(remaining.size()); ++k) {
            int id = remaining[k];
            int s = cached[id];
            while (!fits(id, s)) ++s;
            cached[id] = s;
            if (s < best_start) {  // strict: ties go to the earliest in the order
                best_start = s;
                best_pos = k;
            }
        }
        place(remaining[best_pos], best_start);
        remaining.erase(remaining.begin() + best_pos);
    }
    return packing;
}

Packing pack_ga_right_to_left(const Instance& instance, const ChartOrder& order) {
    Instance rev = reversed_heights(instance);
    Packing packed = pack_ga(rev, order);
    int frame = occupied_count(rev, packed);
    return left_justify(instance, mirror_packing(instance, packed, frame));
}

MergeResult merge_small(const Instance& instance) {
    require_two_bar(instance);

    MergeResult result;
    result.merged.strip_height = instance.strip_height;
    Height acc_a = 0, acc_b = 0;
    std::vector<int> acc_origin;
    bool have_acc = false;

    auto emit = [&](Height a, Height b, std::vector<int> origin) {
        int id = result.merged.size();
        result.merged.charts.push_back({id, {a, b}});
        result.merged.origins.push_back(std::move(origin));
        return id;
    };

    for (int i = 0; i < instance.size(); ++i) {
        Height a = instance.charts[i].first_bar();
        Height b = instance.charts[i].second_bar();
        if (a > kHalfUnit || b > kHalfUnit) {
            emit(a, b, instance.origin(i));
            continue;
        }
        if (!have_acc) {
            acc_a = a;
            acc_b = b;
            acc_origin = instance.origin(i);
            have_acc = true;
            continue;
        }
        // two bars each at most 1/2 sum to at most 1, so merged charts
        // never overflow a cell on their own
        acc_a += a;
        acc_b += b;
        for (int o : instance.origin(i)) acc_origin.push_back(o);
        if (acc_a > kHalfUnit || acc_b > kHalfUnit) {
            emit(acc_a, acc_b, std::move(acc_origin));
            acc_origin = {};
            have_acc = false;
        }
    }
    if (have_acc) result.leftover_small = emit(acc_a, acc_b, std::move(acc_origin));
    return result;
}

SplitSets split(const Instance& instance, std::optional<int> leftover) {
    require_two_bar(instance);
    if (leftover && (*leftover < 0 || *leftover >= instance.size()))
        throw ValidationError("leftover id out of range");

    SplitSets sets;
    for (int i = 0; i < instance.size(); ++i) {
        if (leftover && *leftover == i) continue;
        const BarChart& c = instance.charts[i];
        (c.first_bar() >= c.second_bar() ? sets.s1 : sets.s2).push_back(i);
    }
    if (leftover) sets.s1.push_back(*leftover);
    return sets;
}

Packing shift_join(const Instance& instance, const Packing& left, const Packing& right) {
    if (right.empty()) return left;
    if (left.empty()) return left_justify(instance, right);

    for (const auto& [id, start] : right.start_cell)
        if (left.start_cell.count(id))
            throw ValidationError("shift_join given overlapping chart sets");

    auto left_loads = cell_loads(instance, left);
    auto right_loads = cell_loads(instance, right);
    for (const auto* loads : {&left_loads, &right_loads})
        for (const auto& [cell, load] : *loads)
            if (load > kUnit) throw ValidationError("shift_join requires feasible packages");

    int left_end = left_loads.rbegin()->first;
    int right_end = right_loads.rbegin()->first;
    std::vector<Height> lv(left_end + 1, 0), rv(right_end + 1, 0);
    for (const auto& [cell, load] : left_loads) lv[cell] = load;
    for (const auto& [cell, load] : right_loads) rv[cell] = load;

    // Feasibility is not monotone in the shift, so scan from the deepest
    // overlap down and keep the first (largest) feasible translation.
    int best_shift = 0;
    for (int t = left_end; t >= 1; --t) {
        bool ok = true;
        for (int j = 1; j <= right_end && ok; ++j) {
            int cell = left_end + j - t;
            Height sum = (cell <= left_end ? lv[cell] : 0) + rv[j];
            if (sum > kUnit) ok = false;
        }
        if (ok) {
            best_shift = t;
            break;
        }
    }

    Packing combined = left;
    for (const auto& [id, start] : right.start_cell)
        combined.start_cell[id] = start + left_end - best_shift;
    return left_justify(instance, combined);
}

ChartOrder lex_order(const Instance& instance, LexKey key) {
    ChartOrder ids = input_order(instance);
    std::sort(ids.begin(), ids.end(), [&](int x, int y) {
        const BarChart& cx = instance.charts[x];
        const BarChart& cy = instance.charts[y];
        if (key == LexKey::max_bar) {
            Height mx = cx.max_height(), my = cy.max_height();
            if (mx != my) return mx > my;
        }
        if (cx.heights != cy.heights)
            return std::lexicographical_compare(cy.heights.begin(), cy.heights.end(),
                                                cx.heights.begin(), cx.heights.end());
        return x < y;
    });
    return ids;
}

Packing expand_to_origins(const Instance& derived, const Packing& packing) {
    Packing out;
    for (const auto& [id, start] : packing.start_cell)
        for (int original : derived.origin(id)) out.start_cell[original] = start;
    return out;
}

Instance reorder(const Instance& instance, const ChartOrder& order) {
    validate_order(instance, order);
    if (static_cast<int>(order.size()) != instance.size())
        throw ValidationError("reorder needs a full permutation");

    Instance out;
    out.strip_height = instance.strip_height;
    for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        out.charts.push_back({k, instance.charts[order[k]].heights});
        out.origins.push_back(instance.origin(order[k]));
    }
    return out;
}

namespace {

StagedPacking run_staged(const Instance& instance, bool with_merge) {
    require_two_bar(instance);

    StagedPacking staged;
    if (with_merge) {
        staged.merge = merge_small(instance);
    } else {
        staged.merge.merged = instance;
        if (staged.merge.merged.origins.empty())
            for (int i = 0; i < instance.size(); ++i) staged.merge.merged.origins.push_back({i});
    }
    const Instance& merged = staged.merge.merged;

    staged.sets = split(merged, staged.merge.leftover_small);
    if (!staged.sets.s1.empty()) staged.left = pack_ga(merged, staged.sets.s1);
    if (!staged.sets.s2.empty()) staged.right = pack_ga_right_to_left(merged, staged.sets.s2);
    staged.joined = shift_join(merged, staged.left, staged.right);
    staged.expanded = expand_to_origins(merged, staged.joined);
    return staged;
}

}  // namespace

StagedPacking algorithm_a_trace(const Instance& instance) { return run_staged(instance, true); }

Packing algorithm_a(const Instance& instance) { return algorithm_a_trace(instance).expanded; }

StagedPacking algorithm_a1_trace(const Instance& instance) { return run_staged(instance, false); }

Packing algorithm_a1(const Instance& instance) { return algorithm_a1_trace(instance).expanded; }

}  // namespace bcp
