#include "cosal/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cosal {

namespace {

struct Confusion {
    long long tp = 0, fp = 0, fn = 0, tn = 0;
};

Confusion count(const PixelMap& map, const PixelMap& gt, double threshold) {
    Confusion c;
    for (size_t i = 0; i < map.values.size(); ++i) {
        bool pred = map.values[i] >= threshold;
        bool pos = gt_foreground(gt.values[i]);
        if (pred && pos) ++c.tp;
        else if (pred && !pos) ++c.fp;
        else if (!pred && pos) ++c.fn;
        else ++c.tn;
    }
    return c;
}

double precision_of(const Confusion& c) {
    return c.tp + c.fp == 0 ? 1.0 : static_cast<double>(c.tp) / (c.tp + c.fp);
}

double recall_of(const Confusion& c) {
    return c.tp + c.fn == 0 ? 1.0 : static_cast<double>(c.tp) / (c.tp + c.fn);
}

void check_pairs(const std::vector<PixelMap>& maps, const std::vector<PixelMap>& gts) {
    if (maps.empty() || maps.size() != gts.size())
        throw std::invalid_argument("evaluation: map/gt count mismatch");
    for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].width != gts[i].width || maps[i].height != gts[i].height)
            throw std::invalid_argument("evaluation: map/gt size mismatch");
}

}  // namespace

PixelMap quantize8(const PixelMap& map) {
    PixelMap out(map.width, map.height);
    for (size_t i = 0; i < map.values.size(); ++i) {
        double v = std::clamp(map.values[i], 0.0, 1.0);
        out.values[i] = std::lround(v * 255.0) / 255.0;
    }
    return out;
}

PrCurve pr_curve(const std::vector<PixelMap>& maps, const std::vector<PixelMap>& gts) {
    check_pairs(maps, gts);
    std::vector<PixelMap> q;
    q.reserve(maps.size());
    for (const PixelMap& m : maps) q.push_back(quantize8(m));

    PrCurve curve;
    for (int k = 0; k < kEvalThresholds; ++k) {
        double th = k / 255.0;
        curve.thresholds[k] = th;
        double psum = 0.0, rsum = 0.0;
        for (size_t i = 0; i < q.size(); ++i) {
            Confusion c = count(q[i], gts[i], th);
            psum += precision_of(c);
            rsum += recall_of(c);
        }
        curve.precision[k] = psum / q.size();
        curve.recall[k] = rsum / q.size();
    }
    return curve;
}

double f_measure(double precision, double recall, double beta2) {
    double denom = beta2 * precision + recall;
    if (denom <= 0.0) return 0.0;
    return (1.0 + beta2) * precision * recall / denom;
}

double max_f_measure(const PrCurve& curve, double beta2) {
    double best = 0.0;
    for (int k = 0; k < kEvalThresholds; ++k)
        best = std::max(best, f_measure(curve.precision[k], curve.recall[k], beta2));
    return best;
}

double adaptive_f_measure(const std::vector<PixelMap>& maps,
                          const std::vector<PixelMap>& gts, double beta2) {
    check_pairs(maps, gts);
    double acc = 0.0;
    for (size_t i = 0; i < maps.size(); ++i) {
        PixelMap q = quantize8(maps[i]);
        double mean = std::accumulate(q.values.begin(), q.values.end(), 0.0) /
                      q.values.size();
        Confusion c = count(q, gts[i], 2.0 * mean);
        acc += f_measure(precision_of(c), recall_of(c), beta2);
    }
    return acc / maps.size();
}

double auc(const PixelMap& map, const PixelMap& gt) {
    if (map.width != gt.width || map.height != gt.height)
        throw std::invalid_argument("auc: size mismatch");
    PixelMap q = quantize8(map);

    std::vector<std::pair<double, double>> points;  // (fpr, tpr)
    points.reserve(kEvalThresholds + 2);
    points.emplace_back(0.0, 0.0);
    points.emplace_back(1.0, 1.0);
    for (int k = 0; k < kEvalThresholds; ++k) {
        Confusion c = count(q, gt, k / 255.0);
        double tpr = c.tp + c.fn == 0 ? 1.0 : static_cast<double>(c.tp) / (c.tp + c.fn);
        double fpr = c.fp + c.tn == 0 ? 0.0 : static_cast<double>(c.fp) / (c.fp + c.tn);
        points.emplace_back(fpr, tpr);
    }
    std::sort(points.begin(), points.end());

    double area = 0.0;
    for (size_t i = 1; i < points.size(); ++i)
        area += (points[i].first - points[i - 1].first) *
                (points[i].second + points[i - 1].second) * 0.5;
    return area;
}

double mean_auc(const std::vector<PixelMap>& maps, const std::vector<PixelMap>& gts) {
    check_pairs(maps, gts);
    double acc = 0.0;
    for (size_t i = 0; i < maps.size(); ++i) acc += auc(maps[i], gts[i]);
    return acc / maps.size();
}

MetricReport evaluate(const std::vector<PixelMap>& maps,
                      const std::vector<PixelMap>& gts, double beta2) {
    check_pairs(maps, gts);
    MetricReport report;
    report.curve = pr_curve(maps, gts);
    report.f_measure_max = max_f_measure(report.curve, beta2);
    report.f_measure_adaptive = adaptive_f_measure(maps, gts, beta2);
    for (size_t i = 0; i < maps.size(); ++i) {
        report.per_image_auc.push_back(auc(maps[i], gts[i]));
        report.per_image_f_adaptive.push_back(
            adaptive_f_measure({maps[i]}, {gts[i]}, beta2));
    }
    report.auc = std::accumulate(report.per_image_auc.begin(),
                                 report.per_image_auc.end(), 0.0) /
                 report.per_image_auc.size();
    return report;
}

}  // namespace cosal
