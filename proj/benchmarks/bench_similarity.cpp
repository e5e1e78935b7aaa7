#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <cosal/deletion.hpp>
#include <cosal/features.hpp>
#include <cosal/saliency_field.hpp>

namespace {

double rand01(std::mt19937& rng) {
    return static_cast<double>(rng() >> 8) * (1.0 / 16777216.0);
}

std::vector<double> random_hist(std::mt19937& rng, int bins) {
    std::vector<double> h(bins);
    double sum = 0.0;
    for (double& v : h) {
        v = rand01(rng) + 1e-6;
        sum += v;
    }
    for (double& v : h) v /= sum;
    return h;
}

std::vector<cosal::SuperpixelFeatures> random_features(std::mt19937& rng, int n) {
    std::vector<cosal::SuperpixelFeatures> out(n);
    for (auto& f : out) {
        f.mean_lab = {rand01(rng), rand01(rng), rand01(rng)};
        f.mean_depth = rand01(rng);
        f.centroid = {rand01(rng) * 0.7, rand01(rng) * 0.7};
        f.color_hist = random_hist(rng, cosal::kColorHistBins);
        f.texture_hist = random_hist(rng, cosal::kTextureHistBins);
    }
    return out;
}

cosal::SaliencyField random_field(std::mt19937& rng, int n) {
    cosal::SaliencyField field(n);
    for (double& v : field.values) v = rand01(rng);
    return field;
}

void bm_chi_square(benchmark::State& state) {
    std::mt19937 rng(3);
    const std::vector<double> h = random_hist(rng, cosal::kColorHistBins);
    const std::vector<double> g = random_hist(rng, cosal::kColorHistBins);
    for (auto _ : state) benchmark::DoNotOptimize(cosal::chi_square(h, g));
}

void bm_static_cues(benchmark::State& state) {
    std::mt19937 rng(5);
    const int n = static_cast<int>(state.range(0));
    const auto feats_i = random_features(rng, n);
    const auto feats_j = random_features(rng, n);
    const auto contrasts_i = cosal::normalized_depth_contrasts(feats_i, 0.1);
    const auto contrasts_j = cosal::normalized_depth_contrasts(feats_j, 0.1);
    for (auto _ : state) {
        auto cues = cosal::compute_static_cues(feats_i, contrasts_i, feats_j,
                                               contrasts_j, 0.1);
        benchmark::DoNotOptimize(cues.color.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}

void bm_combined_similarity(benchmark::State& state) {
    std::mt19937 rng(7);
    const int n = static_cast<int>(state.range(0));
    const auto feats_i = random_features(rng, n);
    const auto feats_j = random_features(rng, n);
    const auto contrasts_i = cosal::normalized_depth_contrasts(feats_i, 0.1);
    const auto contrasts_j = cosal::normalized_depth_contrasts(feats_j, 0.1);
    const cosal::PairCueTables cues =
        cosal::compute_static_cues(feats_i, contrasts_i, feats_j, contrasts_j, 0.1);
    const cosal::SaliencyField si = random_field(rng, n);
    const cosal::SaliencyField sj = random_field(rng, n);
    for (auto _ : state) {
        cosal::SimilarityTable table = cosal::combined_similarity(cues, si, sj, 0, 1);
        benchmark::DoNotOptimize(table.scores.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}

BENCHMARK(bm_chi_square);
BENCHMARK(bm_static_cues)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_combined_similarity)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
