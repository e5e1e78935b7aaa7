#include "cosal/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosal/color.hpp"

namespace cosal {

namespace {

// Maps the 256 LBP codes onto 59 bins: codes with at most two 0/1
// transitions around the ring get their own bin in increasing code order,
// everything else shares the last bin.
const std::array<uint8_t, 256>& uniform_lut() {
    static const std::array<uint8_t, 256> lut = [] {
        std::array<uint8_t, 256> t{};
        int next = 0;
        for (int code = 0; code < 256; ++code) {
            int transitions = 0;
            for (int b = 0; b < 8; ++b) {
                int cur = (code >> b) & 1;
                int nxt = (code >> ((b + 1) % 8)) & 1;
                if (cur != nxt) ++transitions;
            }
            t[code] = transitions <= 2 ? static_cast<uint8_t>(next++)
                                       : static_cast<uint8_t>(kTextureHistBins - 1);
        }
        return t;
    }();
    return lut;
}

int color_bin(const std::array<double, 3>& nlab) {
    auto q = [](double v) { return std::min(7, static_cast<int>(v * 8.0)); };
    return (q(nlab[0]) * 8 + q(nlab[1])) * 8 + q(nlab[2]);
}

}  // namespace

std::vector<uint8_t> lbp_codes(const RgbImage& image) {
    const int width = image.width();
    const int height = image.height();
    std::vector<uint8_t> gray(image.pixel_count());
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const uint8_t* p = image.pixel(x, y);
            gray[static_cast<size_t>(y) * width + x] = luminance(p[0], p[1], p[2]);
        }

    // Ring order: E, SE, S, SW, W, NW, N, NE (bit 0 first).
    const int ox[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    const int oy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    const auto& lut = uniform_lut();

    std::vector<uint8_t> codes(image.pixel_count());
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            uint8_t center = gray[static_cast<size_t>(y) * width + x];
            int code = 0;
            for (int b = 0; b < 8; ++b) {
                int nx = std::clamp(x + ox[b], 0, width - 1);
                int ny = std::clamp(y + oy[b], 0, height - 1);
                if (gray[static_cast<size_t>(ny) * width + nx] >= center)
                    code |= 1 << b;
            }
            codes[static_cast<size_t>(y) * width + x] = lut[code];
        }
    }
    return codes;
}

std::vector<SuperpixelFeatures> compute_features(const RgbImage& image,
                                                 const DepthMap& depth,
                                                 const Segmentation& seg) {
    if (seg.width != image.width() || seg.height != image.height())
        throw std::invalid_argument("compute_features: segmentation size mismatch");
    if (depth.width != image.width() || depth.height != image.height())
        throw std::invalid_argument("compute_features: depth size mismatch");

    const int width = image.width();
    const int height = image.height();
    const int n = seg.n_superpixels;
    const double diag = std::sqrt(static_cast<double>(width) * width +
                                  static_cast<double>(height) * height);

    std::vector<SuperpixelFeatures> feats(n);
    for (auto& f : feats) {
        f.color_hist.assign(kColorHistBins, 0.0);
        f.texture_hist.assign(kTextureHistBins, 0.0);
    }

    std::vector<uint8_t> texture = lbp_codes(image);

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            size_t idx = static_cast<size_t>(y) * width + x;
            int l = seg.labels[idx];
            const uint8_t* p = image.pixel(x, y);
            auto nlab = normalize_lab(srgb_to_lab(p[0], p[1], p[2]));
            SuperpixelFeatures& f = feats[l];
            for (int c = 0; c < 3; ++c) f.mean_lab[c] += nlab[c];
            f.mean_depth += depth.data[idx];
            f.centroid[0] += x;
            f.centroid[1] += y;
            f.color_hist[color_bin(nlab)] += 1.0;
            f.texture_hist[texture[idx]] += 1.0;
        }
    }

    for (int l = 0; l < n; ++l) {
        SuperpixelFeatures& f = feats[l];
        double inv = 1.0 / seg.sizes[l];
        for (int c = 0; c < 3; ++c) f.mean_lab[c] *= inv;
        f.mean_depth *= inv;
        f.centroid[0] *= inv / diag;
        f.centroid[1] *= inv / diag;
        for (double& v : f.color_hist) v *= inv;
        for (double& v : f.texture_hist) v *= inv;
    }
    return feats;
}

}  // namespace cosal
