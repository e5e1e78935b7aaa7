#include "cosal/addition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cosal/logging.hpp"

namespace cosal {

double depth_confidence(const DepthMap& depth) {
    if (depth.data.empty()) return 0.0;
    const size_t n = depth.data.size();

    double mean = std::accumulate(depth.data.begin(), depth.data.end(), 0.0) / n;
    double var = 0.0;
    for (double d : depth.data) var += (d - mean) * (d - mean);
    var /= n;
    double cv = mean > 0.0 ? std::sqrt(var) / mean : 0.0;

    std::array<double, 16> hist{};
    for (double d : depth.data)
        ++hist[std::min(15, static_cast<int>(d * 16.0))];
    double entropy = 0.0;
    for (double h : hist) {
        if (h <= 0.0) continue;
        double p = h / n;
        entropy -= p * std::log(p);
    }
    entropy /= std::log(16.0);

    double lambda = std::exp((1.0 - mean) * cv * entropy) - 1.0;
    return std::clamp(lambda, 0.0, 1.0);
}

std::vector<int> select_root_seeds(const SaliencyField& saliency, int k) {
    const int n = saliency.size();
    if (k < 1) throw std::invalid_argument("select_root_seeds: k must be positive");
    if (k > n) {
        log_warn("select_root_seeds: requested " + std::to_string(k) +
                 " seeds from " + std::to_string(n) + " superpixels");
        k = n;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (saliency[a] != saliency[b]) return saliency[a] > saliency[b];
        return a < b;
    });
    order.resize(k);
    return order;
}

std::vector<double> grow_dsp(const std::vector<std::vector<int>>& adjacency,
                             const std::vector<double>& depth, int root,
                             double t1, double t2) {
    const int n = static_cast<int>(adjacency.size());
    if (depth.size() != adjacency.size())
        throw std::invalid_argument("grow_dsp: depth size mismatch");
    if (root < 0 || root >= n) throw std::invalid_argument("grow_dsp: bad root");

    std::vector<double> dsp(n, 0.0);
    std::vector<char> member(n, 0), pooled(n, 0);
    dsp[root] = 1.0;
    member[root] = 1;

    const double d_root = depth[root];
    double depth_sum = d_root;
    int member_count = 1;

    // Candidate pool: every non-member adjacent to the region. Membership
    // only grows, so newly admitted nodes just add their neighbors.
    std::vector<int> pool;
    for (int nb : adjacency[root])
        if (!member[nb] && !pooled[nb]) {
            pooled[nb] = 1;
            pool.push_back(nb);
        }

    while (!pool.empty()) {
        double mean_prev = depth_sum / member_count;
        std::vector<int> admitted;
        for (int q : pool) {
            double gap_mean = std::abs(depth[q] - mean_prev);
            double gap_root = std::abs(depth[q] - d_root);
            if (gap_mean <= t1 && gap_root <= t2) {
                dsp[q] = 1.0 - std::min(gap_mean, gap_root);
                admitted.push_back(q);
            }
        }
        if (admitted.empty()) break;
        for (int q : admitted) {
            member[q] = 1;
            depth_sum += depth[q];
            ++member_count;
        }
        std::vector<int> next_pool;
        for (int q : pool)
            if (!member[q]) next_pool.push_back(q);
        for (int q : admitted)
            for (int nb : adjacency[q])
                if (!member[nb] && !pooled[nb]) {
                    pooled[nb] = 1;
                    next_pool.push_back(nb);
                }
        pool = std::move(next_pool);
    }
    return dsp;
}

SaliencyField compute_dsp(const std::vector<std::vector<int>>& adjacency,
                          const std::vector<double>& depth,
                          const SaliencyField& saliency, const DspParams& params) {
    if (saliency.values.size() != adjacency.size())
        throw std::invalid_argument("compute_dsp: saliency size mismatch");
    std::vector<int> roots = select_root_seeds(saliency, params.k_roots);
    SaliencyField dsp(static_cast<int>(adjacency.size()), 0.0);
    for (int root : roots) {
        std::vector<double> one = grow_dsp(adjacency, depth, root, params.t1, params.t2);
        for (size_t i = 0; i < one.size(); ++i) dsp[static_cast<int>(i)] += one[i];
    }
    double inv = 1.0 / roots.size();
    for (double& v : dsp.values) v *= inv;
    return dsp;
}

SaliencyField combine_rgbd(const SaliencyField& fused, const SaliencyField& dsp,
                           double lambda_d) {
    if (fused.size() != dsp.size())
        throw std::invalid_argument("combine_rgbd: size mismatch");
    SaliencyField out(fused.size());
    for (int i = 0; i < fused.size(); ++i)
        out[i] = (1.0 - lambda_d) * fused[i] + lambda_d * fused[i] * dsp[i];
    min_max_normalize(out, DegeneratePolicy::Keep);
    return out;
}

AffinityMatrix build_affinity(const std::vector<std::vector<int>>& adjacency,
                              const std::vector<SuperpixelFeatures>& features,
                              double lambda_d, double sigma2) {
    if (features.size() != adjacency.size())
        throw std::invalid_argument("build_affinity: feature count mismatch");
    AffinityMatrix w;
    w.n = static_cast<int>(adjacency.size());
    w.rows.resize(w.n);
    for (int u = 0; u < w.n; ++u) {
        for (int v : adjacency[u]) {
            double dc = 0.0;
            for (int c = 0; c < 3; ++c) {
                double diff = features[u].mean_lab[c] - features[v].mean_lab[c];
                dc += diff * diff;
            }
            double dd = std::abs(features[u].mean_depth - features[v].mean_depth);
            double weight = std::exp(-(std::sqrt(dc) + lambda_d * dd) / sigma2);
            w.rows[u].emplace_back(v, weight);
        }
    }
    return w;
}

PropagationSeeds select_propagation_seeds(const SaliencyField& saliency, int kappa) {
    const int n = saliency.size();
    if (kappa < 1)
        throw std::invalid_argument("select_propagation_seeds: kappa must be positive");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (saliency[a] != saliency[b]) return saliency[a] > saliency[b];
        return a < b;
    });

    PropagationSeeds seeds;
    if (n >= 2 * kappa) {
        seeds.foreground.assign(order.begin(), order.begin() + kappa);
        seeds.background.assign(order.end() - kappa, order.end());
    } else {
        int split = (n + 1) / 2;
        seeds.foreground.assign(order.begin(), order.begin() + split);
        seeds.background.assign(order.begin() + split, order.end());
    }
    return seeds;
}

SaliencyField propagate(const AffinityMatrix& affinity, const SaliencyField& saliency,
                        const PropagationSeeds& seeds, bool row_normalize,
                        bool normalize_output) {
    const int n = affinity.n;
    if (saliency.size() != n)
        throw std::invalid_argument("propagate: saliency size mismatch");

    std::vector<double> s0(saliency.values);
    for (int i : seeds.foreground) s0[i] = 1.0;
    for (int i : seeds.background) s0[i] = 0.0;

    SaliencyField out(n);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0, wsum = 0.0;
        for (const auto& [v, w] : affinity.rows[m]) {
            acc += w * s0[v];
            wsum += w;
        }
        out[m] = row_normalize ? (s0[m] + acc) / (1.0 + wsum) : acc;
    }
    if (normalize_output) min_max_normalize(out, DegeneratePolicy::Keep);
    return out;
}

}  // namespace cosal
