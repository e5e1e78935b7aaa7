#pragma once

#include <string>
#include <vector>

#include "cosal/config.hpp"
#include "cosal/dataset.hpp"
#include "cosal/evaluation.hpp"

namespace cosal {

struct StageMetrics {
    std::string stage;
    MetricReport report;
};

// Metrics for every stage of one group's run: the fused initialization,
// the first enrichment pass, and each iteration's suppressed output
// (converged images keep contributing their last map). When the group
// runs from a single input method, the depth-prior conversion is also
// scored with and without the depth blend.
struct AblationReport {
    std::vector<StageMetrics> stages;
    bool has_dsp_comparison = false;
    double f_with_dsp = 0.0;
    double f_without_dsp = 0.0;
    double dsp_gain_percent = 0.0;
};

// Requires ground truth on every image of the group.
AblationReport ablation_report(const ImageGroup& group, const PipelineConfig& config,
                               int jobs = 1);

}  // namespace cosal
