#include "doctest.h"

#include <cmath>
#include <random>

#include "cosal/deletion.hpp"
#include "test_util.hpp"

using namespace cosal;

namespace {

double chi2_oracle(const std::vector<double>& h, const std::vector<double>& g) {
    double acc = 0.0;
    for (size_t i = 0; i < h.size(); ++i) {
        double d = h[i] - g[i];
        acc += d * d / (h[i] + g[i] + 1e-10);
    }
    return 0.5 * acc;
}

// Full reimplementation of the pairwise similarity table, formulas inlined.
std::vector<double> combined_oracle(const std::vector<SuperpixelFeatures>& fi,
                                    const std::vector<double>& ci,
                                    const std::vector<SuperpixelFeatures>& fj,
                                    const std::vector<double>& cj,
                                    const SaliencyField& si, const SaliencyField& sj,
                                    double sigma2) {
    const size_t rows = fi.size(), cols = fj.size();
    std::vector<double> color(rows * cols), depth(rows * cols), sal(rows * cols);
    for (size_t m = 0; m < rows; ++m)
        for (size_t n = 0; n < cols; ++n) {
            size_t idx = m * cols + n;
            color[idx] = 1.0 - 0.5 * (chi2_oracle(fi[m].color_hist, fj[n].color_hist) +
                                      chi2_oracle(fi[m].texture_hist, fj[n].texture_hist));
            depth[idx] = std::exp(-(std::abs(fi[m].mean_depth - fj[n].mean_depth) +
                                    std::abs(ci[m] - cj[n])) /
                                  sigma2);
            sal[idx] = (std::exp(-std::abs(si[static_cast<int>(m)] -
                                           sj[static_cast<int>(n)])) -
                        std::exp(-1.0)) /
                       (1.0 - std::exp(-1.0));
        }
    auto rescale = [](std::vector<double>& t) {
        double lo = *std::min_element(t.begin(), t.end());
        double hi = *std::max_element(t.begin(), t.end());
        if (hi - lo <= 0.0) return;
        for (double& v : t) v = (v - lo) / (hi - lo);
    };
    rescale(color);
    rescale(depth);
    rescale(sal);
    std::vector<double> out(rows * cols);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (color[i] + depth[i] + sal[i]) / 3.0;
    return out;
}

}  // namespace

TEST_CASE("chi square distance") {
    std::vector<double> h{0.5, 0.5};
    CHECK(chi_square(h, h) == doctest::Approx(0.0).scale(1).epsilon(1e-12));

    std::vector<double> a{1.0, 0.0};
    std::vector<double> b{0.0, 1.0};
    CHECK(chi_square(a, b) == doctest::Approx(1.0).epsilon(1e-9));

    std::mt19937 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> p(32), q(32);
        double ps = 0.0, qs = 0.0;
        for (double& v : p) ps += (v = testutil::rand01(rng));
        for (double& v : q) qs += (v = testutil::rand01(rng));
        for (double& v : p) v /= ps;
        for (double& v : q) v /= qs;
        double d = chi_square(p, q);
        CHECK(d == doctest::Approx(chi2_oracle(p, q)).epsilon(1e-12));
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        CHECK(chi_square(q, p) == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("rgb similarity of identical features is one") {
    std::mt19937 rng(52);
    auto feats = testutil::random_features(rng, 2);
    CHECK(rgb_similarity(feats[0], feats[0]) == doctest::Approx(1.0).epsilon(1e-9));
    double s = rgb_similarity(feats[0], feats[1]);
    double want = 1.0 - 0.5 * (chi2_oracle(feats[0].color_hist, feats[1].color_hist) +
                               chi2_oracle(feats[0].texture_hist, feats[1].texture_hist));
    CHECK(s == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("depth contrast of a two superpixel image") {
    std::vector<SuperpixelFeatures> feats(2);
    feats[0].mean_depth = 0.0;
    feats[0].centroid = {0.0, 0.0};
    feats[1].mean_depth = 0.5;
    feats[1].centroid = {0.1, 0.0};
    // one partner: |0 - 0.5| * exp(-0.1/0.1)
    CHECK(depth_contrast(feats, 0, 0.1) ==
          doctest::Approx(0.183939720585721167).epsilon(1e-12));
    CHECK(depth_contrast(feats, 1, 0.1) ==
          doctest::Approx(0.183939720585721167).epsilon(1e-12));
}

TEST_CASE("depth contrast matches its definition on noise") {
    std::mt19937 rng(53);
    auto feats = testutil::random_features(rng, 12);
    for (int m = 0; m < 12; ++m) {
        double want = 0.0;
        for (int k = 0; k < 12; ++k) {
            if (k == m) continue;
            double dx = feats[m].centroid[0] - feats[k].centroid[0];
            double dy = feats[m].centroid[1] - feats[k].centroid[1];
            want += std::abs(feats[m].mean_depth - feats[k].mean_depth) *
                    std::exp(-std::sqrt(dx * dx + dy * dy) / 0.1);
        }
        CHECK(depth_contrast(feats, m, 0.1) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("normalized contrasts peak at one and keep flat depth at zero") {
    std::mt19937 rng(54);
    auto feats = testutil::random_features(rng, 8);
    std::vector<double> c = normalized_depth_contrasts(feats, 0.1);
    double hi = 0.0;
    for (double v : c) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        hi = std::max(hi, v);
    }
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));

    for (auto& f : feats) f.mean_depth = 0.4;
    std::vector<double> flat = normalized_depth_contrasts(feats, 0.1);
    for (double v : flat) CHECK(v == 0.0);
}

TEST_CASE("depth similarity formula") {
    CHECK(depth_similarity(0.3, 0.2, 0.3, 0.2, 0.1) == doctest::Approx(1.0));
    CHECK(depth_similarity(0.5, 0.8, 0.3, 0.7, 0.1) ==
          doctest::Approx(std::exp(-(0.2 + 0.1) / 0.1)).epsilon(1e-9));
}

TEST_CASE("saliency similarity spans [0,1] over the unit gap") {
    CHECK(saliency_similarity(0.4, 0.4) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(saliency_similarity(1.0, 0.0) ==
          doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(saliency_similarity(0.75, 0.25) ==
          doctest::Approx(0.377540668798145).epsilon(1e-9));
}

TEST_CASE("combined similarity matches the inlined oracle") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 5; ++trial) {
        int rows = testutil::randint(rng, 2, 6);
        int cols = testutil::randint(rng, 2, 6);
        auto fi = testutil::random_features(rng, rows);
        auto fj = testutil::random_features(rng, cols);
        std::vector<double> ci(rows), cj(cols);
        for (double& v : ci) v = testutil::rand01(rng);
        for (double& v : cj) v = testutil::rand01(rng);
        std::vector<double> vi(rows), vj(cols);
        for (double& v : vi) v = testutil::rand01(rng);
        for (double& v : vj) v = testutil::rand01(rng);
        SaliencyField si(vi), sj(vj);

        PairCueTables cues = compute_static_cues(fi, ci, fj, cj, 0.1);
        SimilarityTable table = combined_similarity(cues, si, sj, 3, 7);
        CHECK(table.source_image == 3);
        CHECK(table.target_image == 7);
        REQUIRE(table.rows == rows);
        REQUIRE(table.cols == cols);

        std::vector<double> want = combined_oracle(fi, ci, fj, cj, si, sj, 0.1);
        for (int m = 0; m < rows; ++m)
            for (int n = 0; n < cols; ++n) {
                double v = table.at(m, n);
                CHECK(v == doctest::Approx(want[static_cast<size_t>(m) * cols + n])
                               .epsilon(1e-12));
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
    }
}

TEST_CASE("static cues hold the raw pairwise scores") {
    std::mt19937 rng(56);
    auto fi = testutil::random_features(rng, 3);
    auto fj = testutil::random_features(rng, 4);
    std::vector<double> ci{0.1, 0.5, 0.9};
    std::vector<double> cj{0.2, 0.4, 0.6, 0.8};
    PairCueTables cues = compute_static_cues(fi, ci, fj, cj, 0.1);
    REQUIRE(cues.rows == 3);
    REQUIRE(cues.cols == 4);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 4; ++n) {
            CHECK(cues.color[static_cast<size_t>(m) * 4 + n] ==
                  doctest::Approx(rgb_similarity(fi[m], fj[n])).epsilon(1e-12));
            CHECK(cues.depth[static_cast<size_t>(m) * 4 + n] ==
                  doctest::Approx(depth_similarity(fi[m].mean_depth, ci[m],
                                                   fj[n].mean_depth, cj[n], 0.1))
                      .epsilon(1e-12));
        }
}

TEST_CASE("best match takes the row argmax, ties to the lower column") {
    SimilarityTable t;
    t.rows = 2;
    t.cols = 3;
    t.scores = {0.2, 0.9, 0.5, 0.4, 0.1, 0.4};
    CHECK(best_match(t, 0) == 1);
    CHECK(best_match(t, 1) == 0);
}

TEST_CASE("transpose swaps the table orientation") {
    SimilarityTable t;
    t.source_image = 2;
    t.target_image = 5;
    t.rows = 2;
    t.cols = 3;
    t.scores = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    SimilarityTable tt = transpose(t);
    CHECK(tt.source_image == 5);
    CHECK(tt.target_image == 2);
    REQUIRE(tt.rows == 3);
    REQUIRE(tt.cols == 2);
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 3; ++n) CHECK(tt.at(n, m) == t.at(m, n));
}

TEST_CASE("common probability averages best match scores") {
    SimilarityTable t1;
    t1.rows = 2;
    t1.cols = 3;
    t1.scores = {0.2, 0.9, 0.5, 0.4, 0.1, 0.4};
    SimilarityTable t2;
    t2.rows = 2;
    t2.cols = 2;
    t2.scores = {0.6, 0.6, 0.3, 0.8};

    CommonProbability pc = common_probability({t1, t2}, 2);
    REQUIRE(pc.values.size() == 2);
    CHECK(pc.values[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(pc.values[1] == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("common probability without partners keeps everything") {
    CommonProbability pc = common_probability({}, 3);
    REQUIRE(pc.values.size() == 3);
    for (double v : pc.values) CHECK(v == 1.0);
}

TEST_CASE("deletion suppresses low-probability superpixels") {
    SaliencyField s(std::vector<double>{0.8, 0.5, 0.2});
    CommonProbability pc{{1.0, 0.5, 0.5}};
    SaliencyField out = apply_deletion(s, pc);
    // products 0.8, 0.25, 0.1 rescaled
    CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(0.15 / 0.7).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("deletion with unit probabilities is the identity on a spanning field") {
    SaliencyField s(std::vector<double>{1.0, 0.4, 0.0});
    CommonProbability pc{{1.0, 1.0, 1.0}};
    SaliencyField out = apply_deletion(s, pc);
    for (int i = 0; i < s.size(); ++i) CHECK(out[i] == s[i]);
}
