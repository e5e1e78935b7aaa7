#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cosal {

// Smallest image edge the pipeline accepts. Superpixel segmentation and
// boundary-connectivity handling degenerate below this.
inline constexpr int kMinImageDim = 16;

// Interleaved 8-bit RGB, row-major.
class RgbImage {
public:
    RgbImage(int width, int height)
        : width_(width), height_(height) {
        if (width < kMinImageDim || height < kMinImageDim)
            throw std::invalid_argument("RgbImage: dimensions below minimum");
        data_.resize(static_cast<size_t>(width) * height * 3, 0);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    size_t pixel_count() const { return static_cast<size_t>(width_) * height_; }

    const uint8_t* pixel(int x, int y) const {
        return data_.data() + (static_cast<size_t>(y) * width_ + x) * 3;
    }
    uint8_t* pixel(int x, int y) {
        return data_.data() + (static_cast<size_t>(y) * width_ + x) * 3;
    }

    const std::vector<uint8_t>& data() const { return data_; }
    std::vector<uint8_t>& data() { return data_; }

private:
    int width_;
    int height_;
    std::vector<uint8_t> data_;
};

// Dense per-pixel depth, values in [0,1] after normalize_depth.
struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    DepthMap() = default;
    DepthMap(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h, 0.0) {}

    double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
};

// Per-pixel scalar field (saliency maps, stage renders). No minimum size:
// unit tests exercise tiny synthetic maps directly.
struct PixelMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    PixelMap() = default;
    PixelMap(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    size_t size() const { return values.size(); }
};

// Rescales depth to [0,1] by min-max over the whole map. A constant map
// carries no relief information, so it collapses to all zeros; the depth
// confidence weight then vanishes and the pipeline runs on color alone.
void normalize_depth(DepthMap& depth);

}  // namespace cosal
