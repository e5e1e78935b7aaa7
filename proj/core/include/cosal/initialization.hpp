#pragma once

#include <vector>

#include "cosal/image.hpp"

namespace cosal {

// Pixel-wise average of the input saliency maps, min-max rescaled to [0,1].
// All maps must share one size and hold values in [0,1]. A constant average
// (no method found anything) flattens to zero with a warning.
PixelMap fuse_initial(const std::vector<PixelMap>& maps);

}  // namespace cosal
