#include "CLI11.hpp"

#include "cosal/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Batch co-saliency detection for RGBD image groups"};
    app.require_subcommand(1);

    cosal::RunArgs run_args;
    CLI::App* run = app.add_subcommand(
        "run", "Run the full pipeline over a dataset directory");
    run->add_option("--dataset", run_args.dataset, "Dataset root directory")
        ->required();
    run->add_option("--config", run_args.config_file, "Config file (key = value)");
    run->add_option("--out", run_args.out, "Output directory");
    run->add_option("--jobs", run_args.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    run->add_option("--one-for-one", run_args.one_for_one,
                    "Use only this input saliency method");
    run->add_option("--max-iters", run_args.max_iters,
                    "Cap refinement passes; 0 disables iteration");
    run->add_flag("--dump-stages", run_args.dump_stages,
                  "Write per-stage intermediate maps and metrics");

    cosal::DspArgs dsp_args;
    CLI::App* dsp = app.add_subcommand(
        "dsp", "Convert one method's maps with the depth shape prior only");
    dsp->add_option("--dataset", dsp_args.dataset, "Dataset root directory")
        ->required();
    dsp->add_option("--method", dsp_args.method, "Input saliency method")
        ->required();
    dsp->add_option("--config", dsp_args.config_file, "Config file");
    dsp->add_option("--out", dsp_args.out, "Output directory");
    dsp->add_option("--jobs", dsp_args.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);

    cosal::EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand(
        "eval", "Score saliency maps against ground-truth masks");
    eval->add_option("--pred", eval_args.pred_dir, "Directory of predicted maps")
        ->required();
    eval->add_option("--gt", eval_args.gt_dir, "Directory of ground-truth masks")
        ->required();
    eval->add_option("--out", eval_args.out, "Output directory");
    eval->add_option("--beta2", eval_args.beta2, "F-measure beta squared");

    cosal::SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a synthetic planted-object dataset");
    synth->add_option("--out", synth_args.out, "Dataset output directory")
        ->required();
    synth->add_option("--groups", synth_args.params.groups, "Group count");
    synth->add_option("--images", synth_args.params.images_per_group,
                      "Images per group");
    synth->add_option("--size", synth_args.params.width, "Image side length");
    synth->add_option("--seed", synth_args.params.seed, "Generator seed");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cosal::cmd_run(run_args);
    if (dsp->parsed()) return cosal::cmd_dsp(dsp_args);
    if (eval->parsed()) return cosal::cmd_eval(eval_args);
    if (synth->parsed()) {
        synth_args.params.height = synth_args.params.width;
        return cosal::cmd_synth(synth_args);
    }
    return 2;
}
