#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "cosal/addition.hpp"
#include "test_util.hpp"

using namespace cosal;

namespace {

// Reference region growing: rescans every non-member each round instead of
// maintaining a frontier, so it cross-checks the incremental version.
std::vector<double> grow_oracle(const std::vector<std::vector<int>>& adjacency,
                                const std::vector<double>& depth, int root,
                                double t1, double t2) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<double> scores(n, 0.0);
    std::vector<char> member(n, 0);
    member[root] = 1;
    scores[root] = 1.0;
    while (true) {
        double mean = 0.0;
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (member[v]) {
                mean += depth[v];
                ++count;
            }
        mean /= count;

        std::vector<int> admitted;
        for (int v = 0; v < n; ++v) {
            if (member[v]) continue;
            bool touches = false;
            for (int u : adjacency[v])
                if (member[u]) {
                    touches = true;
                    break;
                }
            if (!touches) continue;
            if (std::abs(depth[v] - mean) <= t1 &&
                std::abs(depth[v] - depth[root]) <= t2)
                admitted.push_back(v);
        }
        if (admitted.empty()) break;
        for (int v : admitted) {
            member[v] = 1;
            scores[v] = 1.0 - std::min(std::abs(depth[v] - mean),
                                       std::abs(depth[v] - depth[root]));
        }
    }
    return scores;
}

std::vector<std::vector<int>> chain_adjacency(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i + 1 < n; ++i) {
        adj[i].push_back(i + 1);
        adj[i + 1].push_back(i);
    }
    return adj;
}

}  // namespace

TEST_CASE("depth confidence vanishes on flat maps") {
    DepthMap zero(16, 16);
    CHECK(depth_confidence(zero) == 0.0);

    DepthMap half(16, 16);
    for (double& v : half.data) v = 0.5;
    CHECK(depth_confidence(half) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("depth confidence of a bimodal map") {
    // half at 0.2, half at 0.8: mean 0.5, std 0.3, two occupied histogram
    // bins -> entropy ln2/ln16, so exp(0.5 * 0.6 * 0.25) - 1
    DepthMap d(16, 16);
    for (size_t i = 0; i < d.data.size(); ++i) d.data[i] = i % 2 == 0 ? 0.2 : 0.8;
    CHECK(depth_confidence(d) == doctest::Approx(0.077884150884632).epsilon(1e-9));
}

TEST_CASE("depth confidence stays in range on noise") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        DepthMap d = testutil::random_depth(rng, 16, 16);
        double lambda = depth_confidence(d);
        CHECK(lambda >= 0.0);
        CHECK(lambda <= 1.0);
    }
}

TEST_CASE("root seeds are the top saliency indices, ties to the lower") {
    SaliencyField f(std::vector<double>{0.1, 0.9, 0.5, 0.9});
    CHECK(select_root_seeds(f, 2) == std::vector<int>{1, 3});
    CHECK(select_root_seeds(f, 10) == std::vector<int>{1, 3, 2, 0});
}

TEST_CASE("region growing on a depth chain") {
    auto adj = chain_adjacency(4);

    // second step fails the running-mean gate
    std::vector<double> cut{0.5, 0.45, 0.3, 0.2};
    std::vector<double> got = grow_dsp(adj, cut, 0, 0.1, 0.2);
    REQUIRE(got.size() == 4);
    CHECK(got[0] == 1.0);
    CHECK(got[1] == doctest::Approx(0.95).epsilon(1e-12));
    CHECK(got[2] == 0.0);
    CHECK(got[3] == 0.0);

    // mean drifts as the region grows, still admits the third node
    std::vector<double> drift{0.5, 0.45, 0.38, 0.2};
    got = grow_dsp(adj, drift, 0, 0.1, 0.2);
    CHECK(got[0] == 1.0);
    CHECK(got[1] == doctest::Approx(0.95).epsilon(1e-12));
    CHECK(got[2] == doctest::Approx(0.905).epsilon(1e-12));
    CHECK(got[3] == 0.0);

    // generous t1 lets the mean follow, t2 still tethers to the root
    std::vector<double> tether{0.9, 0.8, 0.75, 0.65};
    got = grow_dsp(adj, tether, 0, 0.5, 0.2);
    CHECK(got[0] == 1.0);
    CHECK(got[1] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(got[2] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(got[3] == 0.0);
}

TEST_CASE("one round admits all qualifying neighbors at the same mean") {
    std::vector<std::vector<int>> star{{1, 2, 3}, {0}, {0}, {0}};
    std::vector<double> depth{0.5, 0.46, 0.54, 0.9};
    std::vector<double> got = grow_dsp(star, depth, 0, 0.1, 0.2);
    CHECK(got[0] == 1.0);
    CHECK(got[1] == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(got[2] == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(got[3] == 0.0);
}

TEST_CASE("region growing matches the rescan oracle") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int cols = testutil::randint(rng, 2, 6);
        int rows = testutil::randint(rng, 2, 6);
        auto adj = testutil::grid_adjacency(cols, rows);
        int n = cols * rows;
        std::vector<double> depth(n);
        for (double& v : depth) v = testutil::rand01(rng);
        int root = testutil::randint(rng, 0, n - 1);
        double t1 = 0.05 + testutil::rand01(rng) * 0.3;
        double t2 = 0.05 + testutil::rand01(rng) * 0.4;

        std::vector<double> got = grow_dsp(adj, depth, root, t1, t2);
        std::vector<double> want = grow_oracle(adj, depth, root, t1, t2);
        REQUIRE(got.size() == want.size());
        for (int i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
        CHECK(got[root] == 1.0);
        for (double v : got) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("dsp averages the growth of the top roots") {
    auto adj = chain_adjacency(4);
    std::vector<double> depth{0.5, 0.45, 0.3, 0.2};
    SaliencyField sal(std::vector<double>{1.0, 0.9, 0.1, 0.0});

    SaliencyField dsp = compute_dsp(adj, depth, sal, DspParams{2, 0.1, 0.2});
    // roots 0 and 1 both grow to {0,1} only
    CHECK(dsp[0] == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(dsp[1] == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(dsp[2] == 0.0);
    CHECK(dsp[3] == 0.0);

    // more roots requested than superpixels: clamps, stays in range
    SaliencyField wide = compute_dsp(adj, depth, sal, DspParams{10, 0.1, 0.2});
    for (int i = 0; i < wide.size(); ++i) {
        CHECK(wide[i] >= 0.0);
        CHECK(wide[i] <= 1.0);
    }
}

TEST_CASE("rgbd blend weights the depth prior by confidence") {
    SaliencyField s(std::vector<double>{0.5, 1.0, 0.0});
    SaliencyField dsp(std::vector<double>{1.0, 0.5, 0.0});

    SaliencyField half = combine_rgbd(s, dsp, 0.5);
    CHECK(half[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(half[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(half[2] == doctest::Approx(0.0).scale(1).epsilon(1e-12));

    // zero confidence ignores the prior entirely
    SaliencyField none = combine_rgbd(s, dsp, 0.0);
    for (int i = 0; i < s.size(); ++i) CHECK(none[i] == doctest::Approx(s[i]).epsilon(1e-12));
}

TEST_CASE("affinity weights adjacent pairs only, symmetrically") {
    std::vector<SuperpixelFeatures> feats(3);
    feats[0].mean_lab = {0.5, 0.5, 0.5};
    feats[0].mean_depth = 0.3;
    feats[1].mean_lab = {0.7, 0.5, 0.5};
    feats[1].mean_depth = 0.4;
    feats[2].mean_lab = {0.1, 0.1, 0.1};
    feats[2].mean_depth = 0.9;
    std::vector<std::vector<int>> adj{{1}, {0}, {}};

    AffinityMatrix aff = build_affinity(adj, feats, 1.0, 0.1);
    REQUIRE(aff.n == 3);
    REQUIRE(aff.rows[0].size() == 1);
    CHECK(aff.rows[0][0].first == 1);
    // lab gap 0.2, depth gap 0.1, so exp(-(0.2 + 0.1)/0.1)
    CHECK(aff.rows[0][0].second == doctest::Approx(0.049787068367863944).epsilon(1e-12));
    REQUIRE(aff.rows[1].size() == 1);
    CHECK(aff.rows[1][0].second == doctest::Approx(aff.rows[0][0].second));
    CHECK(aff.rows[2].empty());

    // ignoring depth raises the weight to exp(-2)
    AffinityMatrix nodepth = build_affinity(adj, feats, 0.0, 0.1);
    CHECK(nodepth.rows[0][0].second ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("propagation seeds split top and bottom") {
    std::vector<double> v(25);
    for (int i = 0; i < 25; ++i) v[i] = i / 24.0;
    PropagationSeeds seeds = select_propagation_seeds(SaliencyField(v), 10);
    CHECK(seeds.foreground.size() == 10);
    CHECK(seeds.background.size() == 10);
    std::set<int> fg(seeds.foreground.begin(), seeds.foreground.end());
    for (int i = 15; i < 25; ++i) CHECK(fg.count(i) == 1);
    std::set<int> bg(seeds.background.begin(), seeds.background.end());
    for (int i = 0; i < 10; ++i) CHECK(bg.count(i) == 1);
    for (int i : seeds.foreground) CHECK(bg.count(i) == 0);
}

TEST_CASE("propagation seeds on small fields stay disjoint") {
    SaliencyField f(std::vector<double>{0.9, 0.1, 0.5, 0.3, 0.7});
    PropagationSeeds seeds = select_propagation_seeds(f, 10);
    CHECK(seeds.foreground.size() + seeds.background.size() == 5);
    std::set<int> fg(seeds.foreground.begin(), seeds.foreground.end());
    for (int i : seeds.background) CHECK(fg.count(i) == 0);
    // highest lands in foreground, lowest in background
    CHECK(fg.count(0) == 1);
    std::set<int> bg(seeds.background.begin(), seeds.background.end());
    CHECK(bg.count(1) == 1);
}

TEST_CASE("propagation on a two-node graph") {
    AffinityMatrix aff;
    aff.n = 2;
    aff.rows = {{{1, 0.5}}, {{0, 0.5}}};
    SaliencyField s0(std::vector<double>{0.7, 0.2});
    PropagationSeeds seeds{{0}, {1}};

    SaliencyField norm = propagate(aff, s0, seeds, true, false);
    CHECK(norm[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(norm[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    SaliencyField raw = propagate(aff, s0, seeds, false, false);
    CHECK(raw[0] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(raw[1] == doctest::Approx(0.5).epsilon(1e-12));

    SaliencyField scaled = propagate(aff, s0, seeds, true, true);
    CHECK(scaled[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scaled[1] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("propagation averages the clamped neighborhood") {
    AffinityMatrix aff;
    aff.n = 3;
    aff.rows = {{{1, 0.5}}, {{0, 0.5}, {2, 0.25}}, {{1, 0.25}}};
    SaliencyField s0(std::vector<double>{0.9, 0.4, 0.6});
    PropagationSeeds seeds{{0}, {2}};

    SaliencyField out = propagate(aff, s0, seeds, true, false);
    CHECK(out[0] == doctest::Approx(1.2 / 1.5).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(0.9 / 1.75).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(0.1 / 1.25).epsilon(1e-12));
}

TEST_CASE("isolated superpixel keeps its own score under row normalization") {
    AffinityMatrix aff;
    aff.n = 3;
    aff.rows = {{{1, 0.5}}, {{0, 0.5}}, {}};
    SaliencyField s0(std::vector<double>{0.9, 0.1, 0.3});
    PropagationSeeds seeds{{0}, {1}};
    SaliencyField out = propagate(aff, s0, seeds, true, false);
    CHECK(out[2] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("propagation output stays in range on random graphs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        int cols = testutil::randint(rng, 3, 6);
        int rows = testutil::randint(rng, 3, 6);
        int n = cols * rows;
        auto feats = testutil::random_features(rng, n);
        AffinityMatrix aff =
            build_affinity(testutil::grid_adjacency(cols, rows), feats, 0.5, 0.1);
        std::vector<double> v(n);
        for (double& x : v) x = testutil::rand01(rng);
        SaliencyField s0(v);
        PropagationSeeds seeds = select_propagation_seeds(s0, 5);
        SaliencyField out = propagate(aff, s0, seeds, true, true);
        for (int i = 0; i < n; ++i) {
            CHECK(out[i] >= 0.0);
            CHECK(out[i] <= 1.0);
        }
    }
}
