#ifndef QDUAL_JOB_HPP
#define QDUAL_JOB_HPP

#include <string>
#include <vector>

#include "qdual/quadrics.hpp"

namespace qdual {

// exit codes shared by the command runners
constexpr int EXIT_CHECKS_FAILED = 1;
constexpr int EXIT_CONFIG_ERROR = 2;
constexpr int EXIT_GENERATION_ERROR = 3;

/// One generation or verification job.  Exactly one of axes / moduli must be
/// given; the grid defaults to the family's pole-avoiding window.
struct JobConfig {
    std::string family = "ellipsoid";        // ellipsoid | hyp2 | hyp1
    std::string ambient;                     // euclidean | minkowski-z | minkowski-x
    std::vector<double> axes;                // a, b, c
    std::vector<std::string> moduli;         // p, q, r (suffix i = imaginary)
    bool has_grid = false;
    double u0 = 0, u1 = 0;
    int nu = 0;
    double v0 = 0, v1 = 0;
    int nv = 0;
    unsigned long seed = 20240801;
    std::string format = "obj";              // obj | csv | obj,csv
    std::string out = "surface";
    bool primal = true;
    bool dual = false;
    std::vector<std::string> checks;         // empty = all
    bool pair_sign_flip = false;
};

/// key=value config file; '#' starts a comment.  Unknown keys are an error.
JobConfig parse_config_file(const std::string& path);

/// Apply one key=value override (same keys as the config file).
void apply_option(JobConfig& cfg, const std::string& key, const std::string& value);

/// Resolve the quadric of a config.  Throws DomainError on bad input.
ModuliTriple resolve_moduli(const JobConfig& cfg);

/// Grid lattice of a config (explicit or the family default).
Lattice resolve_lattice(const JobConfig& cfg, const ModuliTriple& m);

/// `gen`: write the primal (and with cfg.dual also the dual) grid in the
/// requested formats.  Returns a process exit code.
int run_gen(const JobConfig& cfg, std::ostream& log);

/// `check`: run the selected verification suites, write the JSON report to
/// cfg.out when non-empty, print one line per check.  Exit code 0 iff all
/// pass, 1 on failures, 2 on config errors.
int run_check(const JobConfig& cfg, std::ostream& log);

/// `branch-values`: print the umbilic branch-value census.
int run_branch_values(const JobConfig& cfg, std::ostream& log);

/// `report`: re-read a JSON report and print its pass/fail table.
int run_report(const std::string& path, std::ostream& log);

// grid serialization (documented formats)
std::string grid_to_obj(const SurfaceGrid& grid);
std::string grid_to_csv(const SurfaceGrid& grid);

/// Write atomically: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qdual

#endif
