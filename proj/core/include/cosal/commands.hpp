#pragma once

#include <string>

#include "cosal/synth.hpp"

namespace cosal {

// Subcommand entry points. These are the CLI's whole behavior, kept in the
// library so tests drive them directly; the binary only parses argv.
// All return a process exit code and report failures on the log.

struct RunArgs {
    std::string dataset;
    std::string config_file;  // empty: defaults
    std::string out = "out";
    int jobs = 1;
    std::string one_for_one;  // run from this single method
    int max_iters = -1;       // >= 0 overrides; 0 means one pass, no iteration
    bool dump_stages = false;
};

int cmd_run(const RunArgs& args);

struct DspArgs {
    std::string dataset;
    std::string config_file;
    std::string out = "out";
    std::string method;  // required
    int jobs = 1;
};

int cmd_dsp(const DspArgs& args);

struct EvalArgs {
    std::string pred_dir;
    std::string gt_dir;
    std::string out = ".";
    double beta2 = 0.3;
};

int cmd_eval(const EvalArgs& args);

struct SynthArgs {
    std::string out;
    SynthParams params;
};

int cmd_synth(const SynthArgs& args);

}  // namespace cosal
