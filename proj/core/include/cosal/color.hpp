#pragma once

#include <array>
#include <cstdint>

namespace cosal {

// CIELAB under D65. L in [0,100], a/b roughly [-110,110] for sRGB inputs.
std::array<double, 3> srgb_to_lab(uint8_t r, uint8_t g, uint8_t b);

// Maps Lab onto [0,1]^3 so color distances and histogram bins share one
// scale: L/100, (a+110)/220, (b+110)/220, clamped.
std::array<double, 3> normalize_lab(const std::array<double, 3>& lab);

// Rec.601 luma, rounded to the nearest 8-bit level.
uint8_t luminance(uint8_t r, uint8_t g, uint8_t b);

}  // namespace cosal
