#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cosal/dataset.hpp"

namespace cosal {

// Generator for self-contained test groups: each group shares one planted
// object (consistent color and depth across images) over a textured
// background with a depth ramp, plus one per-image distractor object.
// Input saliency methods: "m0" and "m1" highlight both objects; "degraded"
// additionally paints false-positive background blobs whose values overlap
// the object's, so only depth can separate them.
struct SynthParams {
    int width = 128;
    int height = 128;
    int groups = 5;
    int images_per_group = 4;
    uint32_t seed = 7;
};

struct SynthGroup {
    ImageGroup group;
    std::vector<PixelMap> distractor_masks;  // 0/1 per image
};

SynthGroup make_synth_group(const SynthParams& params, int group_index);

// Writes all groups in the standard dataset layout (rgb/, depth/, gt/,
// saliency/<method>/) plus a distractor/ directory with the per-image
// distractor masks for verification.
void write_synth_dataset(const std::filesystem::path& root, const SynthParams& params);

}  // namespace cosal
