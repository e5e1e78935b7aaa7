#pragma once

#include <vector>

#include "cosal/features.hpp"
#include "cosal/saliency_field.hpp"

namespace cosal {

// Chi-square distance between two L1-normalized histograms:
// 0.5 * sum (h-g)^2 / (h+g+eps). In [0,1] for such inputs.
double chi_square(const std::vector<double>& h, const std::vector<double>& g);

// Color plus texture histogram agreement between two superpixels:
// 1 - (chi2(color) + chi2(texture)) / 2.
double rgb_similarity(const SuperpixelFeatures& a, const SuperpixelFeatures& b);

// Depth contrast of one superpixel against the rest of its image:
// sum_k |d_m - d_k| * exp(-||p_m - p_k||_2 / sigma2).
double depth_contrast(const std::vector<SuperpixelFeatures>& features, int m,
                      double sigma2);

// Depth contrast for every superpixel, divided by the image maximum so the
// values compare across images with different depth spreads. All-zero
// contrasts (flat depth) stay zero.
std::vector<double> normalized_depth_contrasts(
    const std::vector<SuperpixelFeatures>& features, double sigma2);

// exp(-(|d_m - d_n| + |c_m - c_n|) / sigma2) where c are normalized
// contrasts.
double depth_similarity(double depth_m, double contrast_m, double depth_n,
                        double contrast_n, double sigma2);

// exp(-|s_m - s_n|) mapped affinely from its raw range [e^-1, 1] onto
// [0,1], so a full saliency gap scores 0.
double saliency_similarity(double s_m, double s_n);

// Pairwise similarity between all superpixels of one ordered image pair.
// Scores are row-major, rows = source superpixels.
struct SimilarityTable {
    int source_image = 0;
    int target_image = 0;
    int rows = 0;
    int cols = 0;
    std::vector<double> scores;

    double at(int m, int n) const { return scores[static_cast<size_t>(m) * cols + n]; }
    double& at(int m, int n) { return scores[static_cast<size_t>(m) * cols + n]; }
};

SimilarityTable transpose(const SimilarityTable& table);

// Color and depth cue tables for a pair. These only depend on static image
// content, so the pipeline computes them once per pair and reuses them
// across iterations; only the saliency cue changes.
struct PairCueTables {
    int rows = 0;
    int cols = 0;
    std::vector<double> color;
    std::vector<double> depth;
};

PairCueTables compute_static_cues(const std::vector<SuperpixelFeatures>& feats_i,
                                  const std::vector<double>& contrasts_i,
                                  const std::vector<SuperpixelFeatures>& feats_j,
                                  const std::vector<double>& contrasts_j,
                                  double sigma2);

// Final multi-cue similarity: each cue table is min-max normalized over
// its entries (constant tables kept as-is), then the three are averaged.
SimilarityTable combined_similarity(const PairCueTables& cues,
                                    const SaliencyField& saliency_i,
                                    const SaliencyField& saliency_j,
                                    int source_image, int target_image);

// Row argmax; ties go to the lower index.
int best_match(const SimilarityTable& table, int m);

struct CommonProbability {
    std::vector<double> values;
};

// Mean best-match similarity against every other image. With no partner
// tables (single-image group) every superpixel is trivially common.
CommonProbability common_probability(const std::vector<SimilarityTable>& tables,
                                     int n_superpixels);

// S_del = S_sp * P_c, min-max rescaled.
SaliencyField apply_deletion(const SaliencyField& s_sp, const CommonProbability& p_c);

}  // namespace cosal
