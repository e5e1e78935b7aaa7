#include "cosal/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cosal/color.hpp"
#include "cosal/logging.hpp"

namespace cosal {

namespace {

constexpr double kCompactness = 10.0;
constexpr int kIterations = 10;

struct Center {
    double l = 0, a = 0, b = 0;
    double x = 0, y = 0;
};

std::vector<std::vector<int>> build_adjacency(int width, int height, int n,
                                              const std::vector<int>& labels) {
    std::vector<std::vector<int>> adj(n);
    auto link = [&](int u, int v) {
        if (u == v) return;
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            int l = labels[static_cast<size_t>(y) * width + x];
            if (x + 1 < width) link(l, labels[static_cast<size_t>(y) * width + x + 1]);
            if (y + 1 < height) link(l, labels[static_cast<size_t>(y + 1) * width + x]);
        }
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

Segmentation finalize(int width, int height, std::vector<int> labels) {
    int n = 0;
    for (int l : labels) n = std::max(n, l + 1);
    Segmentation seg;
    seg.width = width;
    seg.height = height;
    seg.n_superpixels = n;
    seg.sizes.assign(n, 0);
    for (int l : labels) ++seg.sizes[l];
    seg.adjacency = build_adjacency(width, height, n, labels);
    seg.labels = std::move(labels);
    return seg;
}

// Relabels into 4-connected components in scan order, absorbing components
// smaller than min_size into the previously assigned neighboring label.
std::vector<int> enforce_connectivity(int width, int height,
                                      const std::vector<int>& labels,
                                      int min_size) {
    const int dx4[4] = {-1, 0, 1, 0};
    const int dy4[4] = {0, -1, 0, 1};
    std::vector<int> out(labels.size(), -1);
    std::vector<int> xs(labels.size()), ys(labels.size());
    int label = 0;
    int adjlabel = 0;

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            size_t idx = static_cast<size_t>(y) * width + x;
            if (out[idx] >= 0) continue;
            out[idx] = label;
            xs[0] = x;
            ys[0] = y;
            // Remember an already-relabeled neighbor to absorb into if this
            // component turns out too small.
            for (int k = 0; k < 4; ++k) {
                int nx = x + dx4[k], ny = y + dy4[k];
                if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
                size_t nidx = static_cast<size_t>(ny) * width + nx;
                if (out[nidx] >= 0) adjlabel = out[nidx];
            }
            int count = 1;
            for (int c = 0; c < count; ++c) {
                for (int k = 0; k < 4; ++k) {
                    int nx = xs[c] + dx4[k], ny = ys[c] + dy4[k];
                    if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
                    size_t nidx = static_cast<size_t>(ny) * width + nx;
                    if (out[nidx] < 0 && labels[nidx] == labels[idx]) {
                        out[nidx] = label;
                        xs[count] = nx;
                        ys[count] = ny;
                        ++count;
                    }
                }
            }
            if (count < min_size) {
                for (int c = 0; c < count; ++c)
                    out[static_cast<size_t>(ys[c]) * width + xs[c]] = adjlabel;
                --label;
            }
            ++label;
        }
    }
    return out;
}

// Merges the smallest region into its most similar neighbor (by mean Lab).
void merge_smallest(int width, int height, std::vector<int>& labels,
                    const std::vector<std::array<double, 3>>& pixel_lab) {
    int n = 0;
    for (int l : labels) n = std::max(n, l + 1);
    std::vector<int> sizes(n, 0);
    std::vector<std::array<double, 3>> mean(n, {0, 0, 0});
    for (size_t i = 0; i < labels.size(); ++i) {
        int l = labels[i];
        ++sizes[l];
        for (int c = 0; c < 3; ++c) mean[l][c] += pixel_lab[i][c];
    }
    for (int l = 0; l < n; ++l)
        for (int c = 0; c < 3; ++c) mean[l][c] /= sizes[l];

    int victim = static_cast<int>(
        std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
    auto adj = build_adjacency(width, height, n, labels);
    if (adj[victim].empty()) throw std::runtime_error("slic: isolated region");
    int best = adj[victim][0];
    double best_d = std::numeric_limits<double>::max();
    for (int nb : adj[victim]) {
        double d = 0;
        for (int c = 0; c < 3; ++c) {
            double diff = mean[victim][c] - mean[nb][c];
            d += diff * diff;
        }
        if (d < best_d) {
            best_d = d;
            best = nb;
        }
    }
    for (int& l : labels) {
        if (l == victim) l = best;
        if (l > victim) --l;
    }
}

}  // namespace

Segmentation slic_superpixels(const RgbImage& image, int target_superpixels) {
    if (target_superpixels < 1)
        throw std::invalid_argument("slic: target must be positive");
    const int width = image.width();
    const int height = image.height();
    const size_t npx = image.pixel_count();

    std::vector<std::array<double, 3>> lab(npx);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const uint8_t* p = image.pixel(x, y);
            lab[static_cast<size_t>(y) * width + x] = srgb_to_lab(p[0], p[1], p[2]);
        }

    const double grid = std::sqrt(static_cast<double>(npx) / target_superpixels);
    const int nx = std::max(1, static_cast<int>(std::lround(width / grid)));
    const int ny = std::max(1, static_cast<int>(std::lround(height / grid)));

    std::vector<Center> centers;
    centers.reserve(static_cast<size_t>(nx) * ny);
    for (int i = 0; i < ny; ++i) {
        for (int j = 0; j < nx; ++j) {
            Center c;
            c.x = (j + 0.5) * width / nx - 0.5;
            c.y = (i + 0.5) * height / ny - 0.5;
            int px = std::clamp(static_cast<int>(std::lround(c.x)), 0, width - 1);
            int py = std::clamp(static_cast<int>(std::lround(c.y)), 0, height - 1);
            const auto& s = lab[static_cast<size_t>(py) * width + px];
            c.l = s[0];
            c.a = s[1];
            c.b = s[2];
            centers.push_back(c);
        }
    }

    const double spatial_w = kCompactness * kCompactness / (grid * grid);
    std::vector<int> labels(npx, 0);
    std::vector<double> dist(npx);
    const int window = static_cast<int>(std::ceil(2.0 * grid));

    for (int iter = 0; iter < kIterations; ++iter) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::max());
        for (size_t k = 0; k < centers.size(); ++k) {
            const Center& c = centers[k];
            int x0 = std::max(0, static_cast<int>(std::floor(c.x)) - window);
            int x1 = std::min(width - 1, static_cast<int>(std::ceil(c.x)) + window);
            int y0 = std::max(0, static_cast<int>(std::floor(c.y)) - window);
            int y1 = std::min(height - 1, static_cast<int>(std::ceil(c.y)) + window);
            for (int y = y0; y <= y1; ++y) {
                for (int x = x0; x <= x1; ++x) {
                    size_t idx = static_cast<size_t>(y) * width + x;
                    const auto& s = lab[idx];
                    double dl = s[0] - c.l, da = s[1] - c.a, db = s[2] - c.b;
                    double dxs = x - c.x, dys = y - c.y;
                    double d = dl * dl + da * da + db * db +
                               (dxs * dxs + dys * dys) * spatial_w;
                    if (d < dist[idx]) {
                        dist[idx] = d;
                        labels[idx] = static_cast<int>(k);
                    }
                }
            }
        }
        std::vector<Center> next(centers.size());
        std::vector<int> count(centers.size(), 0);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                size_t idx = static_cast<size_t>(y) * width + x;
                Center& c = next[labels[idx]];
                const auto& s = lab[idx];
                c.l += s[0];
                c.a += s[1];
                c.b += s[2];
                c.x += x;
                c.y += y;
                ++count[labels[idx]];
            }
        }
        for (size_t k = 0; k < centers.size(); ++k) {
            if (count[k] == 0) continue;  // vacated cluster keeps its center
            next[k].l /= count[k];
            next[k].a /= count[k];
            next[k].b /= count[k];
            next[k].x /= count[k];
            next[k].y /= count[k];
            centers[k] = next[k];
        }
    }

    int min_size = static_cast<int>(npx) / static_cast<int>(centers.size()) / 4;
    labels = enforce_connectivity(width, height, labels, std::max(min_size, 1));

    int n = 0;
    for (int l : labels) n = std::max(n, l + 1);
    while (n > 2 * target_superpixels) {
        merge_smallest(width, height, labels, lab);
        --n;
    }
    if (n < (target_superpixels + 1) / 2) {
        log_warn("slic: produced " + std::to_string(n) + " regions for target " +
                 std::to_string(target_superpixels));
        if (n < std::max(1, target_superpixels / 2))
            throw std::runtime_error("slic: too few superpixels after cleanup");
    }

    return finalize(width, height, std::move(labels));
}

Segmentation make_segmentation(int width, int height, std::vector<int> labels) {
    if (static_cast<size_t>(width) * height != labels.size())
        throw std::invalid_argument("make_segmentation: size mismatch");
    int n = 0;
    for (int l : labels) {
        if (l < 0) throw std::invalid_argument("make_segmentation: negative label");
        n = std::max(n, l + 1);
    }
    std::vector<int> seen(n, 0);
    for (int l : labels) seen[l] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("make_segmentation: labels not compact");

    // Each label must form one 4-connected component.
    std::vector<int> comp = enforce_connectivity(width, height, labels, 1);
    int ncomp = 0;
    for (int l : comp) ncomp = std::max(ncomp, l + 1);
    if (ncomp != n)
        throw std::invalid_argument("make_segmentation: region not connected");

    return finalize(width, height, std::move(labels));
}

}  // namespace cosal
