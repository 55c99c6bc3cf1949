#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bcp/fixed.hpp"
#include "bcp/model.hpp"

namespace helpers {

// Build an instance from double-literal heights (strip height 1).
inline bcp::Instance inst_of(const std::vector<std::vector<double>>& charts) {
    bcp::Instance instance;
    int id = 0;
    for (const auto& hs : charts) {
        bcp::BarChart chart;
        chart.id = id++;
        for (double h : hs) chart.heights.push_back(bcp::height_from_double(h));
        instance.charts.push_back(std::move(chart));
    }
    return instance;
}

inline bcp::Height h(double v) { return bcp::height_from_double(v); }

}  // namespace helpers
