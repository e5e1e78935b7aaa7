#include "cosal/image.hpp"

#include <algorithm>

namespace cosal {

void normalize_depth(DepthMap& depth) {
    if (depth.data.empty()) return;
    auto [lo, hi] = std::minmax_element(depth.data.begin(), depth.data.end());
    double min_v = *lo, max_v = *hi;
    if (max_v - min_v <= 0.0) {
        std::fill(depth.data.begin(), depth.data.end(), 0.0);
        return;
    }
    double scale = 1.0 / (max_v - min_v);
    for (double& d : depth.data) d = (d - min_v) * scale;
}

}  // namespace cosal
