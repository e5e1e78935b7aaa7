#include "cosal/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <opencv2/imgcodecs.hpp>

#include "cosal/evaluation.hpp"
#include "cosal/logging.hpp"

namespace fs = std::filesystem;

namespace cosal {

namespace {

const char* kImageExtensions[] = {".png", ".jpg", ".jpeg", ".bmp"};

bool is_image_file(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const char* e : kImageExtensions)
        if (ext == e) return true;
    return false;
}

// stem -> path for all image files directly inside dir.
std::map<std::string, fs::path> index_dir(const fs::path& dir) {
    std::map<std::string, fs::path> out;
    if (!fs::is_directory(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || !is_image_file(entry.path())) continue;
        out[entry.path().stem().string()] = entry.path();
    }
    return out;
}

}  // namespace

RgbImage load_rgb(const fs::path& path) {
    cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
    if (bgr.empty()) throw std::runtime_error("cannot read image: " + path.string());
    RgbImage img(bgr.cols, bgr.rows);
    for (int y = 0; y < bgr.rows; ++y) {
        const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < bgr.cols; ++x) {
            uint8_t* p = img.pixel(x, y);
            p[0] = row[x][2];
            p[1] = row[x][1];
            p[2] = row[x][0];
        }
    }
    return img;
}

DepthMap load_depth(const fs::path& path) {
    cv::Mat raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED | cv::IMREAD_ANYDEPTH);
    if (raw.empty()) throw std::runtime_error("cannot read depth: " + path.string());
    if (raw.channels() > 1) {
        cv::Mat gray;
        cv::extractChannel(raw, gray, 0);
        raw = gray;
    }
    DepthMap depth(raw.cols, raw.rows);
    double scale;
    switch (raw.depth()) {
        case CV_8U: scale = 1.0 / 255.0; break;
        case CV_16U: scale = 1.0 / 65535.0; break;
        default:
            throw std::runtime_error("unsupported depth encoding: " + path.string());
    }
    for (int y = 0; y < raw.rows; ++y)
        for (int x = 0; x < raw.cols; ++x) {
            double v = raw.depth() == CV_8U
                           ? raw.at<uint8_t>(y, x)
                           : static_cast<double>(raw.at<uint16_t>(y, x));
            depth.at(x, y) = v * scale;
        }
    normalize_depth(depth);
    return depth;
}

PixelMap load_gray(const fs::path& path) {
    cv::Mat gray = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
    if (gray.empty()) throw std::runtime_error("cannot read image: " + path.string());
    PixelMap map(gray.cols, gray.rows);
    for (int y = 0; y < gray.rows; ++y)
        for (int x = 0; x < gray.cols; ++x)
            map.at(x, y) = gray.at<uint8_t>(y, x) / 255.0;
    return map;
}

void save_gray8(const fs::path& path, const PixelMap& map) {
    cv::Mat out(map.height, map.width, CV_8UC1);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x) {
            double v = std::clamp(map.at(x, y), 0.0, 1.0);
            out.at<uint8_t>(y, x) = static_cast<uint8_t>(std::lround(v * 255.0));
        }
    if (!cv::imwrite(path.string(), out))
        throw std::runtime_error("cannot write image: " + path.string());
}

void save_rgb8(const fs::path& path, const RgbImage& image) {
    cv::Mat out(image.height(), image.width(), CV_8UC3);
    for (int y = 0; y < image.height(); ++y) {
        cv::Vec3b* row = out.ptr<cv::Vec3b>(y);
        for (int x = 0; x < image.width(); ++x) {
            const uint8_t* p = image.pixel(x, y);
            row[x] = cv::Vec3b(p[2], p[1], p[0]);
        }
    }
    if (!cv::imwrite(path.string(), out))
        throw std::runtime_error("cannot write image: " + path.string());
}

std::vector<fs::path> discover_groups(const fs::path& root) {
    if (!fs::is_directory(root))
        throw std::runtime_error("dataset root is not a directory: " + root.string());
    std::vector<fs::path> groups;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory()) continue;
        if (fs::is_directory(entry.path() / "rgb")) groups.push_back(entry.path());
    }
    std::sort(groups.begin(), groups.end());
    if (groups.empty())
        throw std::runtime_error("no groups with an rgb/ directory under " +
                                 root.string());
    return groups;
}

ImageGroup load_group(const fs::path& dir, const PipelineConfig& config) {
    ImageGroup group;
    group.name = dir.filename().string();

    auto rgb_files = index_dir(dir / "rgb");
    if (rgb_files.empty())
        throw std::runtime_error("group has no images: " + dir.string());
    auto depth_files = index_dir(dir / "depth");
    auto gt_files = index_dir(dir / "gt");

    group.methods = config.methods;
    if (group.methods.empty()) {
        fs::path sal_root = dir / "saliency";
        if (fs::is_directory(sal_root)) {
            for (const auto& entry : fs::directory_iterator(sal_root))
                if (entry.is_directory())
                    group.methods.push_back(entry.path().filename().string());
            std::sort(group.methods.begin(), group.methods.end());
        }
    }
    if (group.methods.empty())
        throw std::runtime_error("group has no saliency methods: " + dir.string());

    std::vector<std::map<std::string, fs::path>> method_files;
    std::string missing;
    for (const std::string& method : group.methods) {
        fs::path mdir = dir / "saliency" / method;
        if (!fs::is_directory(mdir)) {
            missing += missing.empty() ? method : ", " + method;
            method_files.emplace_back();
            continue;
        }
        method_files.push_back(index_dir(mdir));
    }
    if (!missing.empty())
        throw std::runtime_error("group " + group.name +
                                 " lacks saliency directories: " + missing);

    std::vector<std::string> errors;
    for (const auto& [stem, rgb_path] : rgb_files) {
        try {
            RgbImage rgb = load_rgb(rgb_path);
            std::optional<DepthMap> depth;
            if (auto it = depth_files.find(stem); it != depth_files.end()) {
                DepthMap d = load_depth(it->second);
                if (d.width != rgb.width() || d.height != rgb.height())
                    throw std::runtime_error("depth size mismatch for " + stem);
                depth = std::move(d);
            } else {
                log_warn("group " + group.name + ": no depth for " + stem +
                         ", running color-only");
            }
            std::optional<PixelMap> gt;
            if (auto it = gt_files.find(stem); it != gt_files.end()) {
                PixelMap g = load_gray(it->second);
                if (g.width != rgb.width() || g.height != rgb.height())
                    throw std::runtime_error("gt size mismatch for " + stem);
                for (double& v : g.values) v = gt_foreground(v) ? 1.0 : 0.0;
                gt = std::move(g);
            }
            std::vector<PixelMap> saliency;
            for (size_t m = 0; m < group.methods.size(); ++m) {
                auto it = method_files[m].find(stem);
                if (it == method_files[m].end())
                    throw std::runtime_error("method " + group.methods[m] +
                                             " has no map for " + stem);
                PixelMap s = load_gray(it->second);
                if (s.width != rgb.width() || s.height != rgb.height())
                    throw std::runtime_error("saliency size mismatch for " + stem);
                saliency.push_back(std::move(s));
            }
            group.images.push_back(ImageEntry{stem, std::move(rgb), std::move(depth),
                                              std::move(gt), std::move(saliency)});
        } catch (const std::exception& e) {
            errors.emplace_back(e.what());
        }
    }
    if (!errors.empty()) {
        std::string msg = "group " + group.name + " failed to load:";
        for (const std::string& e : errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }
    return group;
}

}  // namespace cosal
