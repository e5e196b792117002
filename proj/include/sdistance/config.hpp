#pragma once

#include <iosfwd>
#include <string>

namespace sdist {

/// Every tolerance the formal statements leave implicit, in one place.
/// Overridable per-key by a TOML-style config file (key = value lines,
/// '#' comments) and by CLI flags; flags win over the file.
struct Tolerances {
    double tol_orth = 1e-10;             // orthonormality defect accepted as-is
    double tol_cluster = 1e-9;           // single-linkage gap for distance clustering
    double tol_diag = 1e-8;              // off-diagonal budget of evaluation matrices
    double rank_threshold_factor = 1e-10;  // numeric-rank cutoff: max(r,c)*sigma_max*factor

    // frames with orthonormality defect in (tol_orth, reorth_limit] are
    // re-orthonormalized; above it they are rejected
    static constexpr double reorth_limit = 1e-6;
};

Tolerances parse_tolerances(std::istream& in, Tolerances base = {});
Tolerances load_tolerances_file(const std::string& path, Tolerances base = {});

/// Environment variable naming a default config file (SDIST_CONFIG).
extern const char* const kConfigEnvVar;

/// Tolerances from the environment-designated config file, or defaults.
Tolerances default_tolerances();

}  // namespace sdist
