#pragma once

#include <utility>
#include <vector>

#include "cosal/features.hpp"
#include "cosal/image.hpp"
#include "cosal/saliency_field.hpp"
#include "cosal/segmentation.hpp"

namespace cosal {

// Region growing thresholds for the depth shape prior and the number of
// root seeds it grows from.
struct DspParams {
    int k_roots = 10;
    double t1 = 0.1;  // max gap to the running mean of the grown region
    double t2 = 0.2;  // max gap to the root seed
};

// Scores how trustworthy a depth map is, in [0,1]. Combines mean depth,
// coefficient of variation, and a 16-bin entropy of the depth histogram:
// exp((1 - mean) * cv * entropy) - 1, clamped. Flat maps score 0 and the
// depth channel drops out of the pipeline downstream.
double depth_confidence(const DepthMap& depth);

// Indices of the k highest-saliency superpixels, ties broken by lower
// index. Clamps to the field size with a warning.
std::vector<int> select_root_seeds(const SaliencyField& saliency, int k);

// Region growing over the superpixel graph from one root. Starting with
// the root (value 1), each round admits every non-member adjacent to the
// grown region whose depth is within t1 of the region's mean depth and
// within t2 of the root's depth. A new member scores
// 1 - min(|d - region mean|, |d - root|); unreached superpixels score 0.
std::vector<double> grow_dsp(const std::vector<std::vector<int>>& adjacency,
                             const std::vector<double>& depth, int root,
                             double t1, double t2);

// Mean of grow_dsp over the top-k saliency roots.
SaliencyField compute_dsp(const std::vector<std::vector<int>>& adjacency,
                          const std::vector<double>& depth,
                          const SaliencyField& saliency, const DspParams& params);

// Blends the fused saliency with its depth-shaped variant:
// (1 - lambda) * s + lambda * s * dsp, then min-max rescaled.
SaliencyField combine_rgbd(const SaliencyField& fused, const SaliencyField& dsp,
                           double lambda_d);

// Sparse symmetric affinity over adjacent superpixels:
// w = exp(-(||lab_u - lab_v||_2 + lambda_d * |d_u - d_v|) / sigma2).
struct AffinityMatrix {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> rows;  // (neighbor, weight)
};

AffinityMatrix build_affinity(const std::vector<std::vector<int>>& adjacency,
                              const std::vector<SuperpixelFeatures>& features,
                              double lambda_d, double sigma2);

struct PropagationSeeds {
    std::vector<int> foreground;
    std::vector<int> background;
};

// Top kappa superpixels by saliency become foreground seeds, bottom kappa
// background seeds. When fewer than 2*kappa superpixels exist the sorted
// list is split at the middle instead, so the sets stay disjoint.
PropagationSeeds select_propagation_seeds(const SaliencyField& saliency, int kappa);

// Graph propagation from labeled seeds. Seeds are clamped to 1 (foreground)
// or 0 (background); every superpixel then receives the affinity-weighted
// score of its neighborhood. With row_normalize the node's own clamped
// score joins the average with unit weight, which keeps outputs in [0,1];
// without it the raw weighted sum is returned. The result is min-max
// rescaled when normalize_output is set.
SaliencyField propagate(const AffinityMatrix& affinity, const SaliencyField& saliency,
                        const PropagationSeeds& seeds, bool row_normalize,
                        bool normalize_output = true);

}  // namespace cosal
