#pragma once

#include <array>
#include <string>
#include <vector>

#include "cosal/image.hpp"

namespace cosal {

inline constexpr int kEvalThresholds = 256;

// Snaps map values onto the 8-bit grid k/255. Applied before every metric
// so that in-memory maps and maps round-tripped through PNG files score
// identically.
PixelMap quantize8(const PixelMap& map);

// Ground truth convention: a pixel is foreground when its value exceeds
// 127/255 (8-bit masks with any antialiasing stay binary).
inline bool gt_foreground(double v) { return v > 127.0 / 255.0; }

struct PrCurve {
    std::array<double, kEvalThresholds> thresholds{};
    std::array<double, kEvalThresholds> precision{};
    std::array<double, kEvalThresholds> recall{};
};

// Threshold sweep over k/255, k = 0..255. A pixel is predicted salient
// when its (quantized) value >= threshold. Precision defaults to 1 with no
// predicted positives, recall to 1 with no ground-truth positives, and
// both are macro-averaged across images.
PrCurve pr_curve(const std::vector<PixelMap>& maps, const std::vector<PixelMap>& gts);

// Weighted harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall, double beta2);

// Largest F over the 256 points of a curve.
double max_f_measure(const PrCurve& curve, double beta2);

// Per-image F at the adaptive threshold 2 * mean(map), averaged.
double adaptive_f_measure(const std::vector<PixelMap>& maps,
                          const std::vector<PixelMap>& gts, double beta2);

// Area under the ROC of the 256-threshold sweep for one image, with the
// (0,0) and (1,1) endpoints always included so a constant map scores 0.5.
double auc(const PixelMap& map, const PixelMap& gt);

double mean_auc(const std::vector<PixelMap>& maps, const std::vector<PixelMap>& gts);

struct MetricReport {
    double f_measure_max = 0.0;
    double f_measure_adaptive = 0.0;
    double auc = 0.0;
    PrCurve curve;
    std::vector<double> per_image_auc;
    std::vector<double> per_image_f_adaptive;
};

MetricReport evaluate(const std::vector<PixelMap>& maps,
                      const std::vector<PixelMap>& gts, double beta2);

}  // namespace cosal
