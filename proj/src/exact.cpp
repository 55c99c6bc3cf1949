#include "bcp/exact.hpp"

#include <algorithm>
#include <chrono>

#include "bcp/twobar.hpp"

namespace bcp {

int packing_lower_bound(const Instance& instance) {
    Height total = instance.total_height();
    long long area = (total + kUnit - 1) / kUnit;
    long long tall = 0;
    for (const auto& c : instance.charts)
        for (Height h : c.heights)
            if (h > kHalfUnit) ++tall;  // bars above 1/2 cannot share a cell
    return static_cast<int>(std::max(area, tall));
}

namespace {

struct Solver {
    int n;
    int horizon;
    std::vector<Height> a, b;
    std::vector<char> same_as_prev;
    std::vector<Height> suffix_sum;
    std::vector<int> suffix_tall;
    bool symmetry;

    std::vector<Height> loads;
    std::vector<int> starts;
    std::vector<int> best_starts;
    int best_len;
    int occupied = 0;
    int hosts = 0;        // occupied cells still open to a bar above 1/2
    Height free_cap = 0;  // spare capacity inside occupied cells

    std::uint64_t nodes = 0;
    bool timed_out = false;
    std::chrono::steady_clock::time_point deadline;

    void add_bar(int cell, Height h) {
        Height before = loads[cell];
        if (before == 0) {
            ++occupied;
            free_cap += kUnit;
            if (h < kHalfUnit) ++hosts;
        } else {
            hosts += (before + h < kHalfUnit) - (before < kHalfUnit);
        }
        loads[cell] = before + h;
        free_cap -= h;
    }

    void remove_bar(int cell, Height h) {
        Height before = loads[cell];
        Height after = before - h;
        if (after == 0) {
            --occupied;
            free_cap -= kUnit - before;
            if (before < kHalfUnit) --hosts;
        } else {
            hosts += (after < kHalfUnit) - (before < kHalfUnit);
            free_cap += h;
        }
        loads[cell] = after;
    }

    // Cells occupied so far stay occupied. The rest of the charts needs new
    // cells for whatever mass the spare capacity cannot absorb, and a fresh
    // cell for every tall bar beyond the currently hostable ones.
    int bound_after(int k) const {
        Height deficit = suffix_sum[k + 1] - free_cap;
        long long need_area = deficit > 0 ? (deficit + kUnit - 1) / kUnit : 0;
        long long need_tall = std::max(0, suffix_tall[k + 1] - hosts);
        return occupied + static_cast<int>(std::max(need_area, need_tall));
    }

    void dfs(int k) {
        if (k == n) {
            if (occupied < best_len) {
                best_len = occupied;
                best_starts = starts;
            }
            return;
        }
        int s_begin = (symmetry && same_as_prev[k]) ? starts[k - 1] : 1;
        for (int s = s_begin; s <= horizon - 1; ++s) {
            if ((++nodes & 0xFFFu) == 0 && std::chrono::steady_clock::now() > deadline) {
                timed_out = true;
                return;
            }
            if (loads[s] + a[k] > kUnit || loads[s + 1] + b[k] > kUnit) continue;
            add_bar(s, a[k]);
            add_bar(s + 1, b[k]);
            starts[k] = s;
            if (bound_after(k) < best_len) dfs(k + 1);
            remove_bar(s + 1, b[k]);
            remove_bar(s, a[k]);
            if (timed_out) return;
        }
    }
};

}  // namespace

ExactResult solve_exact(const Instance& instance, double time_limit_sec, bool symmetry_breaking) {
    require_two_bar(instance);

    const int n = instance.size();
    ChartOrder order = lex_order(instance);
    Packing incumbent = pack_ga(instance, order);

    Solver sv;
    sv.n = n;
    sv.horizon = 2 * n;
    sv.symmetry = symmetry_breaking;
    sv.a.resize(n);
    sv.b.resize(n);
    for (int k = 0; k < n; ++k) {
        sv.a[k] = instance.charts[order[k]].first_bar();
        sv.b[k] = instance.charts[order[k]].second_bar();
    }
    sv.same_as_prev.assign(n, 0);
    for (int k = 1; k < n; ++k)
        sv.same_as_prev[k] = (sv.a[k] == sv.a[k - 1] && sv.b[k] == sv.b[k - 1]);
    sv.suffix_sum.assign(n + 1, 0);
    sv.suffix_tall.assign(n + 1, 0);
    for (int k = n - 1; k >= 0; --k) {
        sv.suffix_sum[k] = sv.suffix_sum[k + 1] + sv.a[k] + sv.b[k];
        sv.suffix_tall[k] =
            sv.suffix_tall[k + 1] + (sv.a[k] > kHalfUnit) + (sv.b[k] > kHalfUnit);
    }
    sv.loads.assign(sv.horizon + 2, 0);
    sv.starts.assign(n, 0);
    sv.best_len = occupied_count(instance, incumbent);
    sv.best_starts.resize(n);
    for (int k = 0; k < n; ++k) sv.best_starts[k] = incumbent.at(order[k]);
    sv.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_limit_sec));

    sv.dfs(0);

    ExactResult result;
    result.proven_optimal = !sv.timed_out;
    result.length = sv.best_len;
    Packing packing;
    for (int k = 0; k < n; ++k) packing.start_cell[order[k]] = sv.best_starts[k];
    result.packing = left_justify(instance, packing);
    return result;
}

BlpModel build_blp(const Instance& instance) {
    require_two_bar(instance);

    const int n = instance.size();
    const int horizon = 2 * n;
    // A chart starting at the last capacity row would push its second bar
    // past every row that counts toward the objective, so starts stop one
    // cell short of the horizon.
    const int last_start = std::max(1, horizon - 1);

    BlpModel model;
    model.horizon = horizon;
    model.num_x = n * last_start;
    model.num_y = horizon;
    model.num_assign_rows = n;
    model.num_capacity_rows = horizon;

    std::string lp;
    lp += "Minimize\n obj:";
    for (int j = 1; j <= horizon; ++j) {
        lp += j == 1 ? " " : " + ";
        lp += "y_" + std::to_string(j);
    }
    lp += "\nSubject To\n";
    for (int i = 0; i < n; ++i) {
        lp += " assign_" + std::to_string(i) + ":";
        for (int j = 1; j <= last_start; ++j) {
            lp += j == 1 ? " " : " + ";
            lp += "x_" + std::to_string(i) + "_" + std::to_string(j);
        }
        lp += " = 1\n";
    }
    for (int j = 1; j <= horizon; ++j) {
        lp += " cap_" + std::to_string(j) + ":";
        bool first = true;
        if (j <= last_start) {
            for (int i = 0; i < n; ++i) {
                lp += first ? " " : " + ";
                first = false;
                lp += format_height(instance.charts[i].first_bar()) + " x_" + std::to_string(i) +
                      "_" + std::to_string(j);
            }
        }
        if (j >= 2 && j - 1 <= last_start) {
            for (int i = 0; i < n; ++i) {
                lp += first ? " " : " + ";
                first = false;
                lp += format_height(instance.charts[i].second_bar()) + " x_" + std::to_string(i) +
                      "_" + std::to_string(j - 1);
            }
        }
        lp += " - y_" + std::to_string(j) + " <= 0\n";
    }
    lp += "Binary\n";
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= last_start; ++j)
            lp += " x_" + std::to_string(i) + "_" + std::to_string(j) + "\n";
    for (int j = 1; j <= horizon; ++j) lp += " y_" + std::to_string(j) + "\n";
    lp += "End\n";

    model.lp = std::move(lp);
    return model;
}

std::string export_blp(const Instance& instance) { return build_blp(instance).lp; }

}  // namespace bcp
