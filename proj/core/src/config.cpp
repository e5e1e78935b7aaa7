#include "cosal/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cosal {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        int r = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return r;
    } catch (...) {
        throw std::invalid_argument("config: bad integer for " + key + ": " + v);
    }
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return r;
    } catch (...) {
        throw std::invalid_argument("config: bad number for " + key + ": " + v);
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw std::invalid_argument("config: bad boolean for " + key + ": " + v);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

void PipelineConfig::validate() const {
    if (n_superpixels < 4)
        throw std::invalid_argument("config: n_superpixels must be at least 4");
    if (k_roots < 1) throw std::invalid_argument("config: k_roots must be positive");
    if (kappa < 1) throw std::invalid_argument("config: kappa must be positive");
    if (t1 <= 0.0 || t2 <= 0.0)
        throw std::invalid_argument("config: growth thresholds must be positive");
    if (sigma2 <= 0.0) throw std::invalid_argument("config: sigma2 must be positive");
    if (zeta <= 0.0 || zeta >= 1.0)
        throw std::invalid_argument("config: zeta must lie in (0,1)");
    if (i_max < 1) throw std::invalid_argument("config: i_max must be at least 1");
    if (beta2 <= 0.0) throw std::invalid_argument("config: beta2 must be positive");
}

PipelineConfig parse_config(const std::string& text, PipelineConfig base) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: missing '=' on line " +
                                        std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "n_superpixels") base.n_superpixels = to_int(key, value);
        else if (key == "k_roots") base.k_roots = to_int(key, value);
        else if (key == "kappa") base.kappa = to_int(key, value);
        else if (key == "t1") base.t1 = to_double(key, value);
        else if (key == "t2") base.t2 = to_double(key, value);
        else if (key == "sigma2") base.sigma2 = to_double(key, value);
        else if (key == "zeta") base.zeta = to_double(key, value);
        else if (key == "i_max") base.i_max = to_int(key, value);
        else if (key == "beta2") base.beta2 = to_double(key, value);
        else if (key == "propagation_row_normalize")
            base.propagation_row_normalize = to_bool(key, value);
        else if (key == "methods") base.methods = split_list(value);
        else throw std::invalid_argument("config: unknown key " + key);
    }
    base.validate();
    return base;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

}  // namespace cosal
