#include "bcp/baseline.hpp"

#include <algorithm>

namespace bcp {

Packing pack_ffd_wrap(const Instance& instance) {
    require_two_bar(instance);

    std::vector<int> ids = input_order(instance);
    std::sort(ids.begin(), ids.end(), [&](int x, int y) {
        Height hx = instance.charts[x].max_height();
        Height hy = instance.charts[y].max_height();
        if (hx != hy) return hx > hy;
        return x < y;
    });

    std::vector<Height> bins;
    Packing packing;
    for (int id : ids) {
        Height item = instance.charts[id].max_height();
        int bin = -1;
        for (int k = 0; k < static_cast<int>(bins.size()); ++k) {
            if (bins[k] + item <= kUnit) {
                bin = k;
                break;
            }
        }
        if (bin < 0) {
            bins.push_back(0);
            bin = static_cast<int>(bins.size()) - 1;
        }
        bins[bin] += item;
        packing.start_cell[id] = 2 * bin + 1;  // bin k is the cell pair (2k-1, 2k)
    }
    return packing;
}

}  // namespace bcp
