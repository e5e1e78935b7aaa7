#include "cosal/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fs = std::filesystem;

namespace cosal {

namespace {

// Manual scaling keeps the streams identical across standard libraries.
double rand01(std::mt19937& rng) { return (rng() >> 8) * (1.0 / 16777216.0); }

double jitter(std::mt19937& rng, double amplitude) {
    return (rand01(rng) * 2.0 - 1.0) * amplitude;
}

uint8_t clamp8(double v) {
    return static_cast<uint8_t>(std::clamp(v, 0.0, 255.0));
}

struct Rect {
    int x, y, w, h;
    bool contains(int px, int py) const {
        return px >= x && px < x + w && py >= y && py < y + h;
    }
};

struct Palette {
    std::array<int, 3> background;
    std::array<int, 3> object;
};

const Palette kGroupPalettes[] = {
    {{96, 112, 84}, {204, 60, 48}},
    {{110, 100, 92}, {56, 92, 200}},
    {{88, 104, 110}, {212, 164, 40}},
    {{104, 96, 104}, {88, 172, 68}},
    {{92, 108, 96}, {172, 60, 184}},
};

const std::array<int, 3> kDistractorColors[] = {
    {40, 180, 200}, {230, 120, 30}, {120, 220, 90}, {200, 40, 120},
    {240, 220, 60}, {60, 60, 220},
};

const double kDistractorDepths[] = {0.55, 0.70, 0.90, 0.35, 0.62, 0.78};

const std::pair<int, int> kObjectAnchors[] = {
    {20, 30}, {52, 40}, {34, 58}, {58, 20}, {26, 44}, {46, 30},
};

const std::pair<int, int> kDistractorAnchors[] = {
    {90, 92}, {14, 86}, {86, 14}, {12, 12}, {94, 20}, {16, 70},
};

void box_blur(PixelMap& map, int passes) {
    PixelMap tmp(map.width, map.height);
    for (int p = 0; p < passes; ++p) {
        for (int y = 0; y < map.height; ++y)
            for (int x = 0; x < map.width; ++x) {
                double acc = 0.0;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = std::clamp(x + dx, 0, map.width - 1);
                        int ny = std::clamp(y + dy, 0, map.height - 1);
                        acc += map.at(nx, ny);
                    }
                tmp.at(x, y) = acc / 9.0;
            }
        std::swap(map.values, tmp.values);
    }
}

void paint_saliency_rect(PixelMap& map, const Rect& r, double lo, double hi,
                         std::mt19937& rng) {
    for (int y = r.y; y < r.y + r.h; ++y)
        for (int x = r.x; x < r.x + r.w; ++x)
            map.at(x, y) = lo + rand01(rng) * (hi - lo);
}

}  // namespace

SynthGroup make_synth_group(const SynthParams& params, int group_index) {
    if (params.width < 64 || params.height < 64)
        throw std::invalid_argument("synth: images must be at least 64x64");
    if (params.images_per_group < 1 || group_index < 0)
        throw std::invalid_argument("synth: bad group shape");

    const int W = params.width, H = params.height;
    const double sx = W / 128.0, sy = H / 128.0;
    const Palette& pal =
        kGroupPalettes[group_index % (sizeof(kGroupPalettes) / sizeof(Palette))];

    SynthGroup out;
    out.group.name = "group" + std::to_string(group_index);
    out.group.methods = {"degraded", "m0", "m1"};

    for (int i = 0; i < params.images_per_group; ++i) {
        std::mt19937 rng(params.seed * 1000003u +
                         static_cast<uint32_t>(group_index) * 1009u +
                         static_cast<uint32_t>(i));

        auto [ax, ay] = kObjectAnchors[i % 6];
        Rect object{static_cast<int>((ax + jitter(rng, 4)) * sx),
                    static_cast<int>((ay + jitter(rng, 4)) * sy),
                    static_cast<int>(48 * sx), static_cast<int>(40 * sy)};
        auto [dx, dy] = kDistractorAnchors[i % 6];
        Rect distractor{static_cast<int>((dx + jitter(rng, 3)) * sx),
                        static_cast<int>((dy + jitter(rng, 3)) * sy),
                        static_cast<int>(26 * sx), static_cast<int>(26 * sy)};
        const auto& dcolor = kDistractorColors[i % 6];
        double ddepth = kDistractorDepths[i % 6];
        double object_jitter[3] = {jitter(rng, 5), jitter(rng, 5), jitter(rng, 5)};

        RgbImage rgb(W, H);
        DepthMap depth(W, H);
        PixelMap gt(W, H);
        PixelMap dmask(W, H);

        for (int y = 0; y < H; ++y) {
            for (int x = 0; x < W; ++x) {
                uint8_t* p = rgb.pixel(x, y);
                double d;
                if (object.contains(x, y)) {
                    for (int c = 0; c < 3; ++c)
                        p[c] = clamp8(pal.object[c] + object_jitter[c] +
                                      jitter(rng, 8));
                    d = 0.85 + jitter(rng, 0.01);
                    gt.at(x, y) = 1.0;
                } else if (distractor.contains(x, y)) {
                    for (int c = 0; c < 3; ++c)
                        p[c] = clamp8(dcolor[c] + jitter(rng, 8));
                    d = ddepth + jitter(rng, 0.01);
                    dmask.at(x, y) = 1.0;
                } else {
                    double wave = 10.0 * std::sin(x * 0.19) * std::cos(y * 0.23) +
                                  6.0 * std::sin((x + y) * 0.11);
                    for (int c = 0; c < 3; ++c)
                        p[c] = clamp8(pal.background[c] + wave + jitter(rng, 12));
                    d = 0.05 + 0.40 * y / (H - 1) + jitter(rng, 0.01);
                }
                depth.at(x, y) = std::clamp(d, 0.0, 1.0);
            }
        }
        normalize_depth(depth);

        // m0/m1: both objects pop, background stays low and noisy.
        PixelMap m0(W, H), m1(W, H);
        for (size_t k = 0; k < m0.values.size(); ++k) {
            m0.values[k] = 0.05 + rand01(rng) * 0.30;
            m1.values[k] = 0.08 + rand01(rng) * 0.27;
        }
        paint_saliency_rect(m0, object, 0.75, 0.95, rng);
        paint_saliency_rect(m0, distractor, 0.75, 0.95, rng);
        paint_saliency_rect(m1, object, 0.70, 0.95, rng);
        paint_saliency_rect(m1, distractor, 0.70, 0.95, rng);
        box_blur(m0, 2);
        box_blur(m1, 2);

        // degraded: the object's value range overlaps four false-positive
        // background blobs, so no threshold on this map alone separates
        // them; the blobs sit on background depth.
        PixelMap deg(W, H);
        for (double& v : deg.values) v = 0.05 + rand01(rng) * 0.20;
        paint_saliency_rect(deg, object, 0.60, 0.90, rng);
        paint_saliency_rect(deg, distractor, 0.60, 0.90, rng);
        const std::pair<int, int> blob_spots[4] = {
            {6, 48}, {108, 56}, {46, 108}, {104, 108}};
        for (const auto& [bx, by] : blob_spots) {
            Rect blob{static_cast<int>((bx + jitter(rng, 3)) * sx),
                      static_cast<int>((by + jitter(rng, 3)) * sy),
                      static_cast<int>(15 * sx), static_cast<int>(15 * sy)};
            paint_saliency_rect(deg, blob, 0.55, 0.85, rng);
        }
        box_blur(deg, 1);

        std::vector<PixelMap> saliency;
        saliency.push_back(std::move(deg));
        saliency.push_back(std::move(m0));
        saliency.push_back(std::move(m1));
        out.group.images.push_back(ImageEntry{"img" + std::to_string(i),
                                              std::move(rgb), std::move(depth),
                                              std::move(gt), std::move(saliency)});
        out.distractor_masks.push_back(std::move(dmask));
    }
    return out;
}

void write_synth_dataset(const fs::path& root, const SynthParams& params) {
    fs::create_directories(root);
    for (int g = 0; g < params.groups; ++g) {
        SynthGroup sg = make_synth_group(params, g);
        fs::path dir = root / sg.group.name;
        fs::create_directories(dir / "rgb");
        fs::create_directories(dir / "depth");
        fs::create_directories(dir / "gt");
        fs::create_directories(dir / "distractor");
        for (const std::string& m : sg.group.methods)
            fs::create_directories(dir / "saliency" / m);

        for (size_t i = 0; i < sg.group.images.size(); ++i) {
            const ImageEntry& img = sg.group.images[i];
            std::string file = img.name + ".png";

            save_rgb8(dir / "rgb" / file, img.rgb);
            PixelMap depth_px(img.depth->width, img.depth->height);
            depth_px.values = img.depth->data;
            save_gray8(dir / "depth" / file, depth_px);
            save_gray8(dir / "gt" / file, *img.gt);
            save_gray8(dir / "distractor" / file, sg.distractor_masks[i]);
            for (size_t m = 0; m < sg.group.methods.size(); ++m)
                save_gray8(dir / "saliency" / sg.group.methods[m] / file,
                           img.saliency[m]);
        }
    }
}

}  // namespace cosal
