#include "cosal/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cosal/addition.hpp"
#include "cosal/deletion.hpp"
#include "cosal/features.hpp"
#include "cosal/initialization.hpp"
#include "cosal/logging.hpp"
#include "cosal/parallel.hpp"
#include "cosal/saliency_field.hpp"
#include "cosal/segmentation.hpp"

namespace cosal {

StageObserver StageCapture::observer() {
    return [this](const std::string& stage, int image, int iteration,
                  const PixelMap& map) {
        std::lock_guard<std::mutex> lock(mu_);
        events_.push_back(Event{stage, image, iteration, map});
    };
}

const PixelMap* StageCapture::find(const std::string& stage, int image,
                                   int upto) const {
    std::lock_guard<std::mutex> lock(mu_);
    const PixelMap* best = nullptr;
    int best_iter = -1;
    for (const Event& e : events_) {
        if (e.stage != stage || e.image != image) continue;
        if (e.iteration <= upto && e.iteration > best_iter) {
            best = &e.map;
            best_iter = e.iteration;
        }
    }
    return best;
}

double iteration_delta(const PixelMap& prev, const PixelMap& curr) {
    if (prev.width != curr.width || prev.height != curr.height)
        throw std::invalid_argument("iteration_delta: size mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < prev.values.size(); ++i)
        acc += std::abs(curr.values[i] - prev.values[i]);
    return acc / prev.values.size();
}

GroupRunResult iterate_group(std::vector<PixelMap> initial, const GroupStep& step,
                             int i_max, double zeta) {
    const int n = static_cast<int>(initial.size());
    GroupRunResult result;
    result.final_maps = std::move(initial);
    result.iterations_used.assign(n, 0);
    result.delta_trace.resize(n);

    std::vector<char> active(n, 1);
    for (int t = 1; t <= i_max; ++t) {
        std::vector<PixelMap> next = step(result.final_maps, t, active);
        if (next.size() != result.final_maps.size())
            throw std::runtime_error("iterate_group: step changed image count");
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            double delta = iteration_delta(result.final_maps[i], next[i]);
            result.delta_trace[i].push_back(delta);
            result.iterations_used[i] = t;
            if (delta <= zeta) active[i] = 0;
        }
        result.final_maps = std::move(next);
        if (std::none_of(active.begin(), active.end(), [](char a) { return a; }))
            break;
    }
    return result;
}

namespace {

struct ImageState {
    Segmentation seg;
    std::vector<SuperpixelFeatures> feats;
    std::vector<double> sp_depth;
    std::vector<double> contrasts;
    double lambda_d = 0.0;
    AffinityMatrix affinity;
    SaliencyField fused;    // pooled initial map
    SaliencyField working;  // feeds the next enrichment pass
    SaliencyField rgbd;     // depth-blended field of the current pass
    SaliencyField s_sp;     // last propagated field, matching target
};

ImageState prepare_image(const ImageEntry& img, const PipelineConfig& config,
                         bool force_lambda_zero) {
    ImageState st;
    st.seg = slic_superpixels(img.rgb, config.n_superpixels);
    DepthMap depth = img.depth ? *img.depth
                               : DepthMap(img.rgb.width(), img.rgb.height());
    st.feats = compute_features(img.rgb, depth, st.seg);
    st.sp_depth.reserve(st.feats.size());
    for (const auto& f : st.feats) st.sp_depth.push_back(f.mean_depth);
    st.lambda_d = force_lambda_zero ? 0.0 : depth_confidence(depth);
    st.affinity = build_affinity(st.seg.adjacency, st.feats, st.lambda_d, config.sigma2);
    st.contrasts = normalized_depth_contrasts(st.feats, config.sigma2);
    st.fused = pool(fuse_initial(img.saliency), st.seg);
    st.working = st.fused;
    return st;
}

// One enrichment pass: depth prior from the working field's top seeds,
// confidence-weighted blend, then graph propagation.
void addition_pass(ImageState& st, const PipelineConfig& config) {
    DspParams params{config.k_roots, config.t1, config.t2};
    SaliencyField dsp = compute_dsp(st.seg.adjacency, st.sp_depth, st.working, params);
    st.rgbd = combine_rgbd(st.working, dsp, st.lambda_d);
    PropagationSeeds seeds = select_propagation_seeds(st.rgbd, config.kappa);
    st.s_sp = propagate(st.affinity, st.rgbd, seeds, config.propagation_row_normalize,
                        true);
}

}  // namespace

GroupRunResult run_group(const ImageGroup& group, const PipelineConfig& config,
                         const RunOptions& options) {
    config.validate();
    const int n = static_cast<int>(group.images.size());
    if (n == 0) throw std::invalid_argument("run_group: empty group");
    for (const ImageEntry& img : group.images)
        if (img.saliency.empty())
            throw std::invalid_argument("run_group: image without saliency maps: " +
                                        img.name);

    auto observe = [&](const char* stage, int image, int iteration,
                       const PixelMap& map) {
        if (options.observer) options.observer(stage, image, iteration, map);
    };

    std::vector<ImageState> states(n);
    std::vector<PixelMap> initial(n);
    parallel_for(n, options.jobs, [&](int i) {
        states[i] = prepare_image(group.images[i], config, options.force_lambda_zero);
        initial[i] = render(states[i].fused, states[i].seg);
        observe("initial", i, 0, initial[i]);
    });

    // Color and depth cue tables only depend on static content; build them
    // once for every unordered pair.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    auto pair_index = [&](int i, int j) {
        // i < j; pairs are emitted in lexicographic order
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<PairCueTables> cues(pairs.size());
    parallel_for(static_cast<int>(pairs.size()), options.jobs, [&](int p) {
        auto [i, j] = pairs[p];
        cues[p] = compute_static_cues(states[i].feats, states[i].contrasts,
                                      states[j].feats, states[j].contrasts,
                                      config.sigma2);
    });

    GroupStep step = [&](const std::vector<PixelMap>& current, int t,
                         const std::vector<char>& active) {
        parallel_for(n, options.jobs, [&](int i) {
            if (!active[i]) return;
            addition_pass(states[i], config);
            observe("rgbd", i, t, render(states[i].rgbd, states[i].seg));
            observe("propagated", i, t, render(states[i].s_sp, states[i].seg));
        });

        std::vector<SimilarityTable> tables(pairs.size());
        parallel_for(static_cast<int>(pairs.size()), options.jobs, [&](int p) {
            auto [i, j] = pairs[p];
            if (!active[i] && !active[j]) return;  // nothing consumes this pair
            tables[p] = combined_similarity(cues[p], states[i].s_sp, states[j].s_sp,
                                            i, j);
        });

        std::vector<PixelMap> next = current;
        parallel_for(n, options.jobs, [&](int i) {
            if (!active[i]) return;
            std::vector<SimilarityTable> from_i;
            from_i.reserve(n - 1);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                from_i.push_back(i < j ? tables[pair_index(i, j)]
                                       : transpose(tables[pair_index(j, i)]));
            }
            CommonProbability pc =
                common_probability(from_i, states[i].s_sp.size());
            SaliencyField s_del = apply_deletion(states[i].s_sp, pc);
            states[i].working = s_del;
            next[i] = render(s_del, states[i].seg);
            observe("deleted", i, t, next[i]);
        });
        return next;
    };

    return iterate_group(std::move(initial), step, config.i_max, config.zeta);
}

DspConversionResult run_dsp_conversion(const ImageGroup& group,
                                       const std::string& method,
                                       const PipelineConfig& config, int jobs) {
    config.validate();
    auto it = std::find(group.methods.begin(), group.methods.end(), method);
    if (it == group.methods.end())
        throw std::invalid_argument("run_dsp_conversion: unknown method " + method);
    const int midx = static_cast<int>(it - group.methods.begin());
    const int n = static_cast<int>(group.images.size());
    if (n == 0) throw std::invalid_argument("run_dsp_conversion: empty group");

    DspConversionResult result;
    result.converted.resize(n);
    result.baseline.resize(n);
    result.lambda_d.resize(n);

    parallel_for(n, jobs, [&](int i) {
        const ImageEntry& img = group.images[i];
        Segmentation seg = slic_superpixels(img.rgb, config.n_superpixels);
        DepthMap depth = img.depth ? *img.depth
                                   : DepthMap(img.rgb.width(), img.rgb.height());
        std::vector<SuperpixelFeatures> feats = compute_features(img.rgb, depth, seg);
        std::vector<double> sp_depth;
        sp_depth.reserve(feats.size());
        for (const auto& f : feats) sp_depth.push_back(f.mean_depth);

        double lambda = depth_confidence(depth);
        SaliencyField sf = pool(fuse_initial({img.saliency[midx]}), seg);
        DspParams params{config.k_roots, config.t1, config.t2};
        SaliencyField dsp = compute_dsp(seg.adjacency, sp_depth, sf, params);

        result.converted[i] = render(combine_rgbd(sf, dsp, lambda), seg);
        result.baseline[i] = render(combine_rgbd(sf, dsp, 0.0), seg);
        result.lambda_d[i] = lambda;
    });
    return result;
}

}  // namespace cosal
