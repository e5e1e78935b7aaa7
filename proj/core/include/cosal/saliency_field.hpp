#pragma once

#include <vector>

#include "cosal/image.hpp"
#include "cosal/segmentation.hpp"

namespace cosal {

// Saliency expressed per superpixel. The pipeline moves between this and
// dense PixelMaps via pool/render.
struct SaliencyField {
    std::vector<double> values;

    SaliencyField() = default;
    explicit SaliencyField(int n, double fill = 0.0) : values(n, fill) {}
    explicit SaliencyField(std::vector<double> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int i) const { return values[i]; }
    double& operator[](int i) { return values[i]; }
};

// What min-max normalization does when max == min. ZeroFill flattens the
// field to zero (a featureless fused map carries no signal); Keep leaves
// values untouched (a uniformly salient field should stay salient).
enum class DegeneratePolicy { ZeroFill, Keep };

void min_max_normalize(std::vector<double>& values, DegeneratePolicy policy);

inline void min_max_normalize(SaliencyField& field, DegeneratePolicy policy) {
    min_max_normalize(field.values, policy);
}

// Mean of the pixel map over each superpixel.
SaliencyField pool(const PixelMap& map, const Segmentation& seg);

// Paints each superpixel's value onto its pixels.
PixelMap render(const SaliencyField& field, const Segmentation& seg);

}  // namespace cosal
