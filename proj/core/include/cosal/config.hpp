#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cosal {

// Pipeline parameters. Defaults are the working configuration for every
// dataset; a config file or CLI flags override individual keys.
struct PipelineConfig {
    int n_superpixels = 200;
    int k_roots = 10;
    int kappa = 10;
    double t1 = 0.1;
    double t2 = 0.2;
    double sigma2 = 0.1;
    double zeta = 0.1;
    int i_max = 5;
    double beta2 = 0.3;
    bool propagation_row_normalize = true;
    // Saliency method subdirectories to fuse. Empty means every directory
    // found under saliency/, sorted by name.
    std::vector<std::string> methods;

    void validate() const;  // throws std::invalid_argument on bad values
};

// Flat "key = value" text format, one pair per line, # starts a comment.
// Unknown keys are rejected. methods takes a comma-separated list.
PipelineConfig parse_config(const std::string& text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});

}  // namespace cosal
