#pragma once

#include <array>
#include <vector>

#include "cosal/image.hpp"
#include "cosal/segmentation.hpp"

namespace cosal {

inline constexpr int kColorHistBins = 512;   // 8x8x8 over normalized Lab
inline constexpr int kTextureHistBins = 59;  // uniform LBP (P=8, R=1)

// Per-superpixel descriptors used by propagation and matching. Histograms
// are L1-normalized; centroids are scaled by the image diagonal so spatial
// distances compare across resolutions.
struct SuperpixelFeatures {
    std::array<double, 3> mean_lab{};  // normalized Lab, each in [0,1]
    double mean_depth = 0.0;
    std::array<double, 2> centroid{};
    std::vector<double> color_hist;
    std::vector<double> texture_hist;
};

// Uniform LBP codes (P=8, R=1) for every pixel. Borders are handled by
// clamping neighbor coordinates, so each pixel yields a code. Values are
// bin indices in [0, kTextureHistBins).
std::vector<uint8_t> lbp_codes(const RgbImage& image);

std::vector<SuperpixelFeatures> compute_features(const RgbImage& image,
                                                 const DepthMap& depth,
                                                 const Segmentation& seg);

}  // namespace cosal
