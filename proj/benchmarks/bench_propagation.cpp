#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <cosal/addition.hpp>
#include <cosal/features.hpp>
#include <cosal/saliency_field.hpp>

namespace {

double rand01(std::mt19937& rng) {
    return static_cast<double>(rng() >> 8) * (1.0 / 16777216.0);
}

std::vector<std::vector<int>> grid_adjacency(int cols, int rows) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(cols) * rows);
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x < cols; ++x) {
            int i = y * cols + x;
            if (x > 0) adj[i].push_back(i - 1);
            if (x + 1 < cols) adj[i].push_back(i + 1);
            if (y > 0) adj[i].push_back(i - cols);
            if (y + 1 < rows) adj[i].push_back(i + cols);
        }
    return adj;
}

std::vector<cosal::SuperpixelFeatures> random_features(std::mt19937& rng, int n) {
    std::vector<cosal::SuperpixelFeatures> out(n);
    for (auto& f : out) {
        f.mean_lab = {rand01(rng), rand01(rng), rand01(rng)};
        f.mean_depth = rand01(rng);
    }
    return out;
}

cosal::SaliencyField random_field(std::mt19937& rng, int n) {
    cosal::SaliencyField field(n);
    for (double& v : field.values) v = rand01(rng);
    return field;
}

void bm_build_affinity(benchmark::State& state) {
    std::mt19937 rng(11);
    const int side = 14;  // 196 nodes, close to the 200-superpixel default
    const auto adjacency = grid_adjacency(side, side);
    const auto features = random_features(rng, side * side);
    for (auto _ : state) {
        cosal::AffinityMatrix affinity =
            cosal::build_affinity(adjacency, features, 0.5, 0.1);
        benchmark::DoNotOptimize(affinity.rows.data());
    }
}

void bm_propagate(benchmark::State& state) {
    std::mt19937 rng(13);
    const int side = 14;
    const auto adjacency = grid_adjacency(side, side);
    const auto features = random_features(rng, side * side);
    const cosal::AffinityMatrix affinity =
        cosal::build_affinity(adjacency, features, 0.5, 0.1);
    const cosal::SaliencyField saliency = random_field(rng, side * side);
    const cosal::PropagationSeeds seeds = cosal::select_propagation_seeds(saliency, 10);
    for (auto _ : state) {
        cosal::SaliencyField out = cosal::propagate(affinity, saliency, seeds, true);
        benchmark::DoNotOptimize(out.values.data());
    }
}

void bm_compute_dsp(benchmark::State& state) {
    std::mt19937 rng(17);
    const int side = 14;
    const auto adjacency = grid_adjacency(side, side);
    const int n = side * side;
    std::vector<double> depth(n);
    for (double& d : depth) d = rand01(rng);
    const cosal::SaliencyField saliency = random_field(rng, n);
    const cosal::DspParams params;
    for (auto _ : state) {
        cosal::SaliencyField dsp = cosal::compute_dsp(adjacency, depth, saliency, params);
        benchmark::DoNotOptimize(dsp.values.data());
    }
}

BENCHMARK(bm_build_affinity);
BENCHMARK(bm_propagate);
BENCHMARK(bm_compute_dsp);

}  // namespace
