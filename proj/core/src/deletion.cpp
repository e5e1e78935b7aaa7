#include "cosal/deletion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosal/logging.hpp"

namespace cosal {

namespace {

constexpr double kChiEps = 1e-10;

}  // namespace

double chi_square(const std::vector<double>& h, const std::vector<double>& g) {
    if (h.size() != g.size())
        throw std::invalid_argument("chi_square: histogram size mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < h.size(); ++i) {
        double diff = h[i] - g[i];
        acc += diff * diff / (h[i] + g[i] + kChiEps);
    }
    return 0.5 * acc;
}

double rgb_similarity(const SuperpixelFeatures& a, const SuperpixelFeatures& b) {
    return 1.0 - 0.5 * (chi_square(a.color_hist, b.color_hist) +
                        chi_square(a.texture_hist, b.texture_hist));
}

double depth_contrast(const std::vector<SuperpixelFeatures>& features, int m,
                      double sigma2) {
    const auto& fm = features[m];
    double acc = 0.0;
    for (size_t k = 0; k < features.size(); ++k) {
        if (static_cast<int>(k) == m) continue;
        const auto& fk = features[k];
        double dx = fm.centroid[0] - fk.centroid[0];
        double dy = fm.centroid[1] - fk.centroid[1];
        acc += std::abs(fm.mean_depth - fk.mean_depth) *
               std::exp(-std::sqrt(dx * dx + dy * dy) / sigma2);
    }
    return acc;
}

std::vector<double> normalized_depth_contrasts(
    const std::vector<SuperpixelFeatures>& features, double sigma2) {
    std::vector<double> contrasts(features.size());
    for (size_t m = 0; m < features.size(); ++m)
        contrasts[m] = depth_contrast(features, static_cast<int>(m), sigma2);
    double max_c = contrasts.empty()
                       ? 0.0
                       : *std::max_element(contrasts.begin(), contrasts.end());
    if (max_c > 0.0)
        for (double& c : contrasts) c /= max_c;
    return contrasts;
}

double depth_similarity(double depth_m, double contrast_m, double depth_n,
                        double contrast_n, double sigma2) {
    double wd = std::abs(depth_m - depth_n);
    double wc = std::abs(contrast_m - contrast_n);
    return std::exp(-(wd + wc) / sigma2);
}

double saliency_similarity(double s_m, double s_n) {
    const double floor = std::exp(-1.0);
    double raw = std::exp(-std::abs(s_m - s_n));
    return (raw - floor) / (1.0 - floor);
}

SimilarityTable transpose(const SimilarityTable& table) {
    SimilarityTable out;
    out.source_image = table.target_image;
    out.target_image = table.source_image;
    out.rows = table.cols;
    out.cols = table.rows;
    out.scores.resize(table.scores.size());
    for (int m = 0; m < table.rows; ++m)
        for (int n = 0; n < table.cols; ++n) out.at(n, m) = table.at(m, n);
    return out;
}

PairCueTables compute_static_cues(const std::vector<SuperpixelFeatures>& feats_i,
                                  const std::vector<double>& contrasts_i,
                                  const std::vector<SuperpixelFeatures>& feats_j,
                                  const std::vector<double>& contrasts_j,
                                  double sigma2) {
    if (feats_i.size() != contrasts_i.size() || feats_j.size() != contrasts_j.size())
        throw std::invalid_argument("compute_static_cues: contrast count mismatch");
    PairCueTables cues;
    cues.rows = static_cast<int>(feats_i.size());
    cues.cols = static_cast<int>(feats_j.size());
    size_t total = static_cast<size_t>(cues.rows) * cues.cols;
    cues.color.resize(total);
    cues.depth.resize(total);
    for (int m = 0; m < cues.rows; ++m) {
        for (int n = 0; n < cues.cols; ++n) {
            size_t idx = static_cast<size_t>(m) * cues.cols + n;
            cues.color[idx] = rgb_similarity(feats_i[m], feats_j[n]);
            cues.depth[idx] =
                depth_similarity(feats_i[m].mean_depth, contrasts_i[m],
                                 feats_j[n].mean_depth, contrasts_j[n], sigma2);
        }
    }
    return cues;
}

SimilarityTable combined_similarity(const PairCueTables& cues,
                                    const SaliencyField& saliency_i,
                                    const SaliencyField& saliency_j,
                                    int source_image, int target_image) {
    if (saliency_i.size() != cues.rows || saliency_j.size() != cues.cols)
        throw std::invalid_argument("combined_similarity: saliency size mismatch");

    std::vector<double> color = cues.color;
    std::vector<double> depth = cues.depth;
    std::vector<double> sal(color.size());
    for (int m = 0; m < cues.rows; ++m)
        for (int n = 0; n < cues.cols; ++n)
            sal[static_cast<size_t>(m) * cues.cols + n] =
                saliency_similarity(saliency_i[m], saliency_j[n]);

    min_max_normalize(color, DegeneratePolicy::Keep);
    min_max_normalize(depth, DegeneratePolicy::Keep);
    min_max_normalize(sal, DegeneratePolicy::Keep);

    SimilarityTable table;
    table.source_image = source_image;
    table.target_image = target_image;
    table.rows = cues.rows;
    table.cols = cues.cols;
    table.scores.resize(color.size());
    for (size_t i = 0; i < color.size(); ++i)
        table.scores[i] = (color[i] + depth[i] + sal[i]) / 3.0;
    return table;
}

int best_match(const SimilarityTable& table, int m) {
    if (m < 0 || m >= table.rows) throw std::invalid_argument("best_match: bad row");
    int best = 0;
    double best_score = table.at(m, 0);
    for (int n = 1; n < table.cols; ++n) {
        if (table.at(m, n) > best_score) {
            best_score = table.at(m, n);
            best = n;
        }
    }
    return best;
}

CommonProbability common_probability(const std::vector<SimilarityTable>& tables,
                                     int n_superpixels) {
    CommonProbability pc;
    if (tables.empty()) {
        log_warn("common_probability: single-image group, marking all common");
        pc.values.assign(n_superpixels, 1.0);
        return pc;
    }
    pc.values.assign(n_superpixels, 0.0);
    for (const SimilarityTable& table : tables) {
        if (table.rows != n_superpixels)
            throw std::invalid_argument("common_probability: table row mismatch");
        for (int m = 0; m < n_superpixels; ++m)
            pc.values[m] += table.at(m, best_match(table, m));
    }
    double inv = 1.0 / tables.size();
    for (double& v : pc.values) v *= inv;
    return pc;
}

SaliencyField apply_deletion(const SaliencyField& s_sp, const CommonProbability& p_c) {
    if (s_sp.values.size() != p_c.values.size())
        throw std::invalid_argument("apply_deletion: size mismatch");
    SaliencyField out(s_sp.size());
    for (int m = 0; m < s_sp.size(); ++m) out[m] = s_sp[m] * p_c.values[m];
    min_max_normalize(out, DegeneratePolicy::Keep);
    return out;
}

}  // namespace cosal
