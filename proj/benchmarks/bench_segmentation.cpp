#include <benchmark/benchmark.h>

#include <cosal/features.hpp>
#include <cosal/segmentation.hpp>
#include <cosal/synth.hpp>

namespace {

cosal::SynthGroup sample(int side) {
    cosal::SynthParams params;
    params.width = side;
    params.height = side;
    params.images_per_group = 1;
    return cosal::make_synth_group(params, 0);
}

void bm_slic(benchmark::State& state) {
    const cosal::RgbImage image = sample(static_cast<int>(state.range(0))).group.images[0].rgb;
    for (auto _ : state) {
        cosal::Segmentation seg = cosal::slic_superpixels(image, 200);
        benchmark::DoNotOptimize(seg.labels.data());
    }
    state.SetItemsProcessed(state.iterations() * image.width() * image.height());
}

void bm_lbp(benchmark::State& state) {
    const cosal::RgbImage image = sample(static_cast<int>(state.range(0))).group.images[0].rgb;
    for (auto _ : state) {
        std::vector<uint8_t> codes = cosal::lbp_codes(image);
        benchmark::DoNotOptimize(codes.data());
    }
    state.SetItemsProcessed(state.iterations() * image.width() * image.height());
}

void bm_features(benchmark::State& state) {
    cosal::SynthGroup sg = sample(256);
    const cosal::RgbImage& image = sg.group.images[0].rgb;
    const cosal::DepthMap& depth = *sg.group.images[0].depth;
    const cosal::Segmentation seg = cosal::slic_superpixels(image, 200);
    for (auto _ : state) {
        auto feats = cosal::compute_features(image, depth, seg);
        benchmark::DoNotOptimize(feats.data());
    }
}

BENCHMARK(bm_slic)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_lbp)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_features)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
