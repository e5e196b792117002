#include "sdistance/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sdist {

const char* const kConfigEnvVar = "SDIST_CONFIG";

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Tolerances parse_tolerances(std::istream& in, Tolerances base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        double v = 0;
        try {
            v = std::stod(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("config key '" + key + "': bad number '" + value + "'");
        }
        if (v <= 0) throw std::invalid_argument("config key '" + key + "': must be positive");
        if (key == "tol_orth")
            base.tol_orth = v;
        else if (key == "tol_cluster")
            base.tol_cluster = v;
        else if (key == "tol_diag")
            base.tol_diag = v;
        else if (key == "rank_threshold_factor")
            base.rank_threshold_factor = v;
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return base;
}

Tolerances load_tolerances_file(const std::string& path, Tolerances base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    return parse_tolerances(in, base);
}

Tolerances default_tolerances() {
    if (const char* path = std::getenv(kConfigEnvVar); path && *path)
        return load_tolerances_file(path);
    return {};
}

}  // namespace sdist
