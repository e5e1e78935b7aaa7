#include "cosal/ablation.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosal/pipeline.hpp"

namespace cosal {

AblationReport ablation_report(const ImageGroup& group, const PipelineConfig& config,
                               int jobs) {
    const int n = static_cast<int>(group.images.size());
    std::vector<PixelMap> gts;
    for (const ImageEntry& img : group.images) {
        if (!img.gt)
            throw std::invalid_argument("ablation_report: missing ground truth for " +
                                        img.name);
        gts.push_back(*img.gt);
    }

    StageCapture capture;
    RunOptions options;
    options.jobs = jobs;
    options.observer = capture.observer();
    GroupRunResult result = run_group(group, config, options);

    auto stage_maps = [&](const std::string& stage, int upto) {
        std::vector<PixelMap> maps;
        for (int i = 0; i < n; ++i) {
            const PixelMap* m = capture.find(stage, i, upto);
            if (!m) throw std::runtime_error("ablation_report: missing stage " + stage);
            maps.push_back(*m);
        }
        return maps;
    };

    AblationReport report;
    report.stages.push_back(
        {"initial", evaluate(stage_maps("initial", 0), gts, config.beta2)});
    report.stages.push_back(
        {"addition", evaluate(stage_maps("propagated", 1), gts, config.beta2)});
    int max_t = *std::max_element(result.iterations_used.begin(),
                                  result.iterations_used.end());
    for (int t = 1; t <= max_t; ++t)
        report.stages.push_back({"iteration_" + std::to_string(t),
                                 evaluate(stage_maps("deleted", t), gts, config.beta2)});

    if (group.methods.size() == 1) {
        report.has_dsp_comparison = true;
        std::vector<PixelMap> raw;
        for (const ImageEntry& img : group.images) raw.push_back(img.saliency[0]);
        DspConversionResult dsp =
            run_dsp_conversion(group, group.methods[0], config, jobs);
        report.f_without_dsp =
            max_f_measure(pr_curve(raw, gts), config.beta2);
        report.f_with_dsp =
            max_f_measure(pr_curve(dsp.converted, gts), config.beta2);
        report.dsp_gain_percent =
            report.f_without_dsp > 0.0
                ? 100.0 * (report.f_with_dsp - report.f_without_dsp) /
                      report.f_without_dsp
                : 0.0;
    }
    return report;
}

}  // namespace cosal
