#include "cosal/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "cosal/ablation.hpp"
#include "cosal/config.hpp"
#include "cosal/dataset.hpp"
#include "cosal/evaluation.hpp"
#include "cosal/logging.hpp"
#include "cosal/parallel.hpp"
#include "cosal/pipeline.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace cosal {

namespace {

PipelineConfig make_config(const std::string& config_file) {
    PipelineConfig config;
    if (!config_file.empty()) config = load_config(config_file);
    return config;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void write_pr_csv(const fs::path& path, const PrCurve& curve) {
    std::ostringstream out;
    out << "threshold,precision,recall\n" << std::fixed << std::setprecision(9);
    for (int k = 0; k < kEvalThresholds; ++k)
        out << curve.thresholds[k] << ',' << curve.precision[k] << ','
            << curve.recall[k] << '\n';
    write_text(path, out.str());
}

json report_json(const MetricReport& report, const std::vector<std::string>& names) {
    json j;
    j["f_measure_max"] = report.f_measure_max;
    j["f_measure_adaptive"] = report.f_measure_adaptive;
    j["auc"] = report.auc;
    json per_image;
    for (size_t i = 0; i < names.size(); ++i) {
        per_image[names[i]] = {{"auc", report.per_image_auc[i]},
                               {"f_adaptive", report.per_image_f_adaptive[i]}};
    }
    j["per_image"] = std::move(per_image);
    return j;
}

struct GroupOutcome {
    std::string name;
    bool ok = false;
    std::string error;
    json group_json;
    std::vector<PixelMap> final_maps;
    std::vector<PixelMap> gts;  // empty unless every image has ground truth
};

}  // namespace

int cmd_run(const RunArgs& args) {
    try {
        PipelineConfig config = make_config(args.config_file);
        if (!args.one_for_one.empty()) config.methods = {args.one_for_one};
        if (args.max_iters >= 0) config.i_max = std::max(1, args.max_iters);
        config.validate();

        std::vector<fs::path> group_dirs = discover_groups(args.dataset);
        fs::create_directories(args.out);

        const int ngroups = static_cast<int>(group_dirs.size());
        const int outer = std::max(1, std::min(args.jobs, ngroups));
        const int inner = std::max(1, args.jobs / outer);

        std::vector<GroupOutcome> outcomes(ngroups);
        parallel_for(ngroups, outer, [&](int gi) {
            GroupOutcome& oc = outcomes[gi];
            oc.name = group_dirs[gi].filename().string();
            try {
                ImageGroup group = load_group(group_dirs[gi], config);
                StageCapture capture;
                RunOptions options;
                options.jobs = inner;
                if (args.dump_stages) options.observer = capture.observer();
                GroupRunResult result = run_group(group, config, options);

                fs::path gdir = fs::path(args.out) / group.name;
                fs::create_directories(gdir);
                const int n = static_cast<int>(group.images.size());
                std::vector<std::string> names;
                for (int i = 0; i < n; ++i) {
                    names.push_back(group.images[i].name);
                    save_gray8(gdir / (group.images[i].name + ".png"),
                               result.final_maps[i]);
                }
                if (args.dump_stages) {
                    fs::path sdir = gdir / "stages";
                    fs::create_directories(sdir);
                    for (const auto& e : capture.events())
                        save_gray8(sdir / (e.stage + "_t" +
                                           std::to_string(e.iteration) + "_" +
                                           group.images[e.image].name + ".png"),
                                   e.map);
                }

                oc.group_json["n_images"] = n;
                oc.group_json["iterations_used"] = result.iterations_used;
                oc.group_json["delta_trace"] = result.delta_trace;

                bool full_gt = std::all_of(
                    group.images.begin(), group.images.end(),
                    [](const ImageEntry& img) { return img.gt.has_value(); });
                if (full_gt) {
                    for (const ImageEntry& img : group.images)
                        oc.gts.push_back(*img.gt);
                    MetricReport report =
                        evaluate(result.final_maps, oc.gts, config.beta2);
                    oc.group_json["metrics"] = report_json(report, names);
                    if (args.dump_stages) {
                        AblationReport ab = ablation_report(group, config, inner);
                        json stages;
                        for (const StageMetrics& sm : ab.stages)
                            stages[sm.stage] = {
                                {"f_measure_max", sm.report.f_measure_max},
                                {"f_measure_adaptive", sm.report.f_measure_adaptive},
                                {"auc", sm.report.auc}};
                        oc.group_json["stages"] = std::move(stages);
                    }
                }
                oc.final_maps = std::move(result.final_maps);
                oc.ok = true;
            } catch (const std::exception& e) {
                oc.error = e.what();
                log_error("group " + oc.name + ": " + oc.error);
            }
        });

        json root;
        root["config"] = {{"n_superpixels", config.n_superpixels},
                          {"k_roots", config.k_roots},
                          {"kappa", config.kappa},
                          {"t1", config.t1},
                          {"t2", config.t2},
                          {"sigma2", config.sigma2},
                          {"zeta", config.zeta},
                          {"i_max", config.i_max},
                          {"beta2", config.beta2},
                          {"propagation_row_normalize", config.propagation_row_normalize}};
        json groups_json;
        std::vector<PixelMap> all_maps, all_gts;
        bool any_failure = false;
        for (const GroupOutcome& oc : outcomes) {
            if (!oc.ok) {
                any_failure = true;
                groups_json[oc.name] = {{"error", oc.error}};
                continue;
            }
            groups_json[oc.name] = oc.group_json;
            if (!oc.gts.empty()) {
                all_maps.insert(all_maps.end(), oc.final_maps.begin(),
                                oc.final_maps.end());
                all_gts.insert(all_gts.end(), oc.gts.begin(), oc.gts.end());
            }
        }
        root["groups"] = std::move(groups_json);
        if (!all_maps.empty()) {
            PrCurve curve = pr_curve(all_maps, all_gts);
            root["overall"] = {
                {"n_images", all_maps.size()},
                {"f_measure_max", max_f_measure(curve, config.beta2)},
                {"f_measure_adaptive",
                 adaptive_f_measure(all_maps, all_gts, config.beta2)},
                {"auc", mean_auc(all_maps, all_gts)}};
            write_pr_csv(fs::path(args.out) / "pr_curve.csv", curve);
            write_text(fs::path(args.out) / "metrics.json", root.dump(2) + "\n");
        } else if (!any_failure) {
            log_info("no ground truth found, skipping metrics");
        }
        return any_failure ? 1 : 0;
    } catch (const std::exception& e) {
        log_error(e.what());
        return 1;
    }
}

int cmd_dsp(const DspArgs& args) {
    try {
        if (args.method.empty()) {
            log_error("dsp: --method is required");
            return 2;
        }
        PipelineConfig config = make_config(args.config_file);
        config.methods = {args.method};
        config.validate();

        std::vector<fs::path> group_dirs = discover_groups(args.dataset);
        fs::create_directories(args.out);

        json root;
        root["method"] = args.method;
        json groups_json;
        std::vector<PixelMap> all_raw, all_converted, all_baseline, all_gts;
        bool any_failure = false;

        for (const fs::path& dir : group_dirs) {
            std::string name = dir.filename().string();
            try {
                ImageGroup group = load_group(dir, config);
                DspConversionResult result =
                    run_dsp_conversion(group, args.method, config, args.jobs);

                fs::path gdir = fs::path(args.out) / group.name;
                fs::create_directories(gdir / "baseline");
                for (size_t i = 0; i < group.images.size(); ++i) {
                    save_gray8(gdir / (group.images[i].name + ".png"),
                               result.converted[i]);
                    save_gray8(gdir / "baseline" / (group.images[i].name + ".png"),
                               result.baseline[i]);
                }

                json gj;
                gj["lambda_d"] = result.lambda_d;
                bool full_gt = std::all_of(
                    group.images.begin(), group.images.end(),
                    [](const ImageEntry& img) { return img.gt.has_value(); });
                if (full_gt) {
                    std::vector<PixelMap> raw, gts;
                    for (const ImageEntry& img : group.images) {
                        raw.push_back(img.saliency[0]);
                        gts.push_back(*img.gt);
                    }
                    double f_raw =
                        max_f_measure(pr_curve(raw, gts), config.beta2);
                    double f_conv =
                        max_f_measure(pr_curve(result.converted, gts), config.beta2);
                    double f_base =
                        max_f_measure(pr_curve(result.baseline, gts), config.beta2);
                    gj["f_input"] = f_raw;
                    gj["f_baseline"] = f_base;
                    gj["f_with_dsp"] = f_conv;
                    gj["gain_percent"] =
                        f_raw > 0.0 ? 100.0 * (f_conv - f_raw) / f_raw : 0.0;
                    all_raw.insert(all_raw.end(), raw.begin(), raw.end());
                    all_converted.insert(all_converted.end(),
                                         result.converted.begin(),
                                         result.converted.end());
                    all_baseline.insert(all_baseline.end(), result.baseline.begin(),
                                        result.baseline.end());
                    all_gts.insert(all_gts.end(), gts.begin(), gts.end());
                }
                groups_json[name] = std::move(gj);
            } catch (const std::exception& e) {
                any_failure = true;
                groups_json[name] = {{"error", e.what()}};
                log_error("group " + name + ": " + e.what());
            }
        }
        root["groups"] = std::move(groups_json);
        if (!all_gts.empty()) {
            double f_raw = max_f_measure(pr_curve(all_raw, all_gts), config.beta2);
            double f_conv =
                max_f_measure(pr_curve(all_converted, all_gts), config.beta2);
            double f_base =
                max_f_measure(pr_curve(all_baseline, all_gts), config.beta2);
            root["overall"] = {
                {"f_input", f_raw},
                {"f_baseline", f_base},
                {"f_with_dsp", f_conv},
                {"gain_percent",
                 f_raw > 0.0 ? 100.0 * (f_conv - f_raw) / f_raw : 0.0}};
        }
        write_text(fs::path(args.out) / "metrics.json", root.dump(2) + "\n");
        return any_failure ? 1 : 0;
    } catch (const std::exception& e) {
        log_error(e.what());
        return 1;
    }
}

int cmd_eval(const EvalArgs& args) {
    try {
        std::vector<PixelMap> maps, gts;
        std::vector<std::string> names;

        std::vector<fs::path> pred_files;
        for (const auto& entry : fs::directory_iterator(args.pred_dir))
            if (entry.is_regular_file() &&
                entry.path().extension() == ".png")
                pred_files.push_back(entry.path());
        std::sort(pred_files.begin(), pred_files.end());
        if (pred_files.empty()) {
            log_error("eval: no .png maps under " + args.pred_dir);
            return 1;
        }

        for (const fs::path& pred : pred_files) {
            fs::path gt = fs::path(args.gt_dir) / pred.filename();
            if (!fs::exists(gt)) {
                log_error("eval: no ground truth for " + pred.filename().string());
                return 1;
            }
            maps.push_back(load_gray(pred));
            gts.push_back(load_gray(gt));
            names.push_back(pred.stem().string());
        }

        MetricReport report = evaluate(maps, gts, args.beta2);
        fs::create_directories(args.out);
        json root;
        root["beta2"] = args.beta2;
        root["n_images"] = maps.size();
        root["metrics"] = report_json(report, names);
        write_text(fs::path(args.out) / "metrics.json", root.dump(2) + "\n");
        write_pr_csv(fs::path(args.out) / "pr_curve.csv", report.curve);
        return 0;
    } catch (const std::exception& e) {
        log_error(e.what());
        return 1;
    }
}

int cmd_synth(const SynthArgs& args) {
    try {
        if (args.out.empty()) {
            log_error("synth: --out is required");
            return 2;
        }
        write_synth_dataset(args.out, args.params);
        log_info("wrote " + std::to_string(args.params.groups) + " groups under " +
                 args.out);
        return 0;
    } catch (const std::exception& e) {
        log_error(e.what());
        return 1;
    }
}

}  // namespace cosal
