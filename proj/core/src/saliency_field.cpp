#include "cosal/saliency_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosal {

void min_max_normalize(std::vector<double>& values, DegeneratePolicy policy) {
    if (values.empty()) return;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double min_v = *lo, max_v = *hi;
    if (max_v - min_v <= 0.0) {
        if (policy == DegeneratePolicy::ZeroFill)
            std::fill(values.begin(), values.end(), 0.0);
        return;
    }
    // divide rather than multiply by a reciprocal: (max-min)/(max-min) is
    // exactly 1.0, so a second pass over already-normalized values is a no-op
    double range = max_v - min_v;
    for (double& v : values) v = (v - min_v) / range;
}

SaliencyField pool(const PixelMap& map, const Segmentation& seg) {
    if (map.width != seg.width || map.height != seg.height)
        throw std::invalid_argument("pool: size mismatch");
    SaliencyField field(seg.n_superpixels, 0.0);
    for (size_t i = 0; i < map.values.size(); ++i)
        field[seg.labels[i]] += map.values[i];
    for (int l = 0; l < seg.n_superpixels; ++l) field[l] /= seg.sizes[l];
    return field;
}

PixelMap render(const SaliencyField& field, const Segmentation& seg) {
    if (field.size() != seg.n_superpixels)
        throw std::invalid_argument("render: field size mismatch");
    PixelMap map(seg.width, seg.height);
    for (size_t i = 0; i < map.values.size(); ++i)
        map.values[i] = field[seg.labels[i]];
    return map;
}

}  // namespace cosal
