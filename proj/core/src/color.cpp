#include "cosal/color.hpp"

#include <algorithm>
#include <cmath>

namespace cosal {

namespace {

double linearize(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double lab_f(double t) {
    constexpr double delta = 6.0 / 29.0;
    return t > delta * delta * delta ? std::cbrt(t)
                                     : t / (3.0 * delta * delta) + 4.0 / 29.0;
}

}  // namespace

std::array<double, 3> srgb_to_lab(uint8_t r8, uint8_t g8, uint8_t b8) {
    double r = linearize(r8 / 255.0);
    double g = linearize(g8 / 255.0);
    double b = linearize(b8 / 255.0);

    double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
    double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
    double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;

    double fx = lab_f(x / 0.95047);
    double fy = lab_f(y);
    double fz = lab_f(z / 1.08883);

    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

std::array<double, 3> normalize_lab(const std::array<double, 3>& lab) {
    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    return {clamp01(lab[0] / 100.0), clamp01((lab[1] + 110.0) / 220.0),
            clamp01((lab[2] + 110.0) / 220.0)};
}

uint8_t luminance(uint8_t r, uint8_t g, uint8_t b) {
    double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<uint8_t>(std::lround(y));
}

}  // namespace cosal
