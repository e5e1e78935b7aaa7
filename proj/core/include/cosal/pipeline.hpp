#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "cosal/config.hpp"
#include "cosal/dataset.hpp"
#include "cosal/image.hpp"

namespace cosal {

// Called with rendered intermediate maps as the pipeline produces them.
// Stage names: "initial" (iteration 0), then per iteration "rgbd",
// "propagated", "deleted". May be invoked from worker threads.
using StageObserver =
    std::function<void(const std::string& stage, int image_index, int iteration,
                       const PixelMap& map)>;

// Thread-safe collector for observer events; used by stage dumps, the
// ablation report, and tests.
class StageCapture {
public:
    StageObserver observer();

    struct Event {
        std::string stage;
        int image = 0;
        int iteration = 0;
        PixelMap map;
    };

    const std::vector<Event>& events() const { return events_; }
    // Latest map for (stage, image) at iteration <= upto, or null.
    const PixelMap* find(const std::string& stage, int image, int upto) const;

private:
    mutable std::mutex mu_;
    std::vector<Event> events_;
};

struct RunOptions {
    int jobs = 1;
    // Treat every depth map as unreliable (lambda_d = 0). Used for the
    // depth-ablation arm of reports.
    bool force_lambda_zero = false;
    StageObserver observer;
};

struct GroupRunResult {
    std::vector<PixelMap> final_maps;              // per image, in [0,1]
    std::vector<int> iterations_used;              // per image
    std::vector<std::vector<double>> delta_trace;  // per image, one entry per pass
};

// Mean absolute pixel difference between two same-size maps.
double iteration_delta(const PixelMap& prev, const PixelMap& curr);

// Group-level refinement loop: step advances every active image one
// iteration and returns the new rendered maps (inactive entries must pass
// through unchanged). An image deactivates once its delta falls to zeta or
// the cap is hit. Exposed separately so termination is testable against
// synthetic steps.
using GroupStep = std::function<std::vector<PixelMap>(
    const std::vector<PixelMap>& current, int iteration,
    const std::vector<char>& active)>;

GroupRunResult iterate_group(std::vector<PixelMap> initial, const GroupStep& step,
                             int i_max, double zeta);

// Full per-group pipeline: fuse input maps once, then alternate the
// intra-image enrichment pass and the inter-image suppression pass until
// each image converges or the iteration cap is reached.
GroupRunResult run_group(const ImageGroup& group, const PipelineConfig& config,
                         const RunOptions& options = {});

// Depth-prior conversion of a single method's maps, no iteration and no
// inter-image coupling: fuse (single map), grow the depth prior, blend by
// depth confidence, render. baseline holds the same maps with the depth
// blend skipped, isolating the prior's effect.
struct DspConversionResult {
    std::vector<PixelMap> converted;
    std::vector<PixelMap> baseline;
    std::vector<double> lambda_d;
};

DspConversionResult run_dsp_conversion(const ImageGroup& group,
                                       const std::string& method,
                                       const PipelineConfig& config, int jobs = 1);

}  // namespace cosal
