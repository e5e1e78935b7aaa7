#pragma once

#include <vector>

#include "cosal/image.hpp"

namespace cosal {

// Superpixel partition of one image. Labels are compact 0..n_superpixels-1
// and every superpixel is 4-connected.
struct Segmentation {
    int width = 0;
    int height = 0;
    int n_superpixels = 0;
    std::vector<int> labels;                  // per pixel, row-major
    std::vector<int> sizes;                   // pixel count per superpixel
    std::vector<std::vector<int>> adjacency;  // sorted neighbor labels per superpixel

    int label_at(int x, int y) const {
        return labels[static_cast<size_t>(y) * width + x];
    }
};

// SLIC in Lab space with compactness 10, then connectivity enforcement.
// Produces close to target_superpixels regions; throws std::runtime_error
// if the count lands outside [0.5x, 2x] of the target after cleanup.
Segmentation slic_superpixels(const RgbImage& image, int target_superpixels);

// Builds a Segmentation from an existing label map. Validates that labels
// are compact and each region is 4-connected; used by tests to pin exact
// region shapes. Throws std::invalid_argument on violations.
Segmentation make_segmentation(int width, int height, std::vector<int> labels);

}  // namespace cosal
