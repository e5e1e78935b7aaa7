#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cosal/config.hpp"
#include "cosal/image.hpp"

namespace cosal {

// One image with everything the pipeline needs for it. Depth and ground
// truth are optional at the dataset level; saliency maps are aligned with
// the group's method list.
struct ImageEntry {
    std::string name;
    RgbImage rgb;
    std::optional<DepthMap> depth;  // min-max normalized
    std::optional<PixelMap> gt;     // 0/1 mask
    std::vector<PixelMap> saliency;
};

struct ImageGroup {
    std::string name;
    std::vector<std::string> methods;
    std::vector<ImageEntry> images;
};

// Expected layout per group directory:
//   rgb/<name>.(png|jpg)  depth/<name>.png  gt/<name>.png
//   saliency/<method>/<name>.png
// Files pair up by stem; rgb/ defines the image list. depth/ and gt/ may
// be missing per image (depth gaps warn, the pipeline runs color-only for
// those entries).
std::vector<std::filesystem::path> discover_groups(const std::filesystem::path& root);

ImageGroup load_group(const std::filesystem::path& dir, const PipelineConfig& config);

// Image file primitives (8-bit PNG/JPEG; 16-bit depth PNGs accepted).
RgbImage load_rgb(const std::filesystem::path& path);
DepthMap load_depth(const std::filesystem::path& path);    // normalized
PixelMap load_gray(const std::filesystem::path& path);     // values/255
void save_gray8(const std::filesystem::path& path, const PixelMap& map);
void save_rgb8(const std::filesystem::path& path, const RgbImage& image);

}  // namespace cosal
