#include "cosal/initialization.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosal/logging.hpp"
#include "cosal/saliency_field.hpp"

namespace cosal {

PixelMap fuse_initial(const std::vector<PixelMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("fuse_initial: no input maps");
    const int width = maps[0].width;
    const int height = maps[0].height;
    for (const PixelMap& m : maps) {
        if (m.width != width || m.height != height)
            throw std::invalid_argument("fuse_initial: map size mismatch");
        for (double v : m.values)
            if (v < 0.0 || v > 1.0)
                throw std::invalid_argument("fuse_initial: value outside [0,1]");
    }

    PixelMap fused(width, height);
    double inv = 1.0 / maps.size();
    for (const PixelMap& m : maps)
        for (size_t i = 0; i < fused.values.size(); ++i)
            fused.values[i] += m.values[i] * inv;

    auto [lo, hi] = std::minmax_element(fused.values.begin(), fused.values.end());
    if (*hi - *lo <= 0.0)
        log_warn("fuse_initial: fused map is constant, flattening to zero");
    min_max_normalize(fused.values, DegeneratePolicy::ZeroFill);
    return fused;
}

}  // namespace cosal
