// Command-line front end: curvature-line grids of quadrics, their Christoffel
// duals, umbilic branch values, and the numerical verification suites.
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qdual/checks.hpp"
#include "qdual/job.hpp"

using namespace qdual;

namespace {

// Options are collected as strings and merged onto the config file (command
// line wins), so both layers share one key=value vocabulary.
struct RawOptions {
    std::map<std::string, std::string> values;
    std::string config_path;

    void bind_quadric(CLI::App* cmd) {
        add(cmd, "family", "ellipsoid | hyp2 | hyp1");
        add(cmd, "ambient", "euclidean | minkowski-z | minkowski-x");
        add(cmd, "axes", "half-axes a,b,c");
        add(cmd, "moduli", "moduli p,q,r (suffix i for imaginary)");
        add(cmd, "grid", "u0:u1:nu,v0:v1:nv");
        add(cmd, "seed", "seed for sampled checks");
        cmd->add_option("--config", config_path, "key=value config file");
    }
    void add(CLI::App* cmd, const std::string& key, const std::string& help) {
        cmd->add_option_function<std::string>(
            "--" + key, [this, key](const std::string& v) { values[key] = v; }, help);
    }

    int build(JobConfig& cfg, std::ostream& err) const {
        try {
            if (!config_path.empty()) cfg = parse_config_file(config_path);
            for (const auto& [k, v] : values) apply_option(cfg, k, v);
        } catch (const Error& e) {
            err << "config error: " << e.what() << "\n";
            return EXIT_CONFIG_ERROR;
        }
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature-line parametrizations of quadrics and their Christoffel duals"};
    app.require_subcommand(1);

    RawOptions gen_opts, dual_opts, check_opts, branch_opts;
    std::string report_path;
    bool list_checks = false;

    CLI::App* gen = app.add_subcommand("gen", "sample a surface grid and write meshes");
    gen_opts.bind_quadric(gen);
    gen_opts.add(gen, "format", "obj | csv | obj,csv");
    gen_opts.add(gen, "out", "output path (stem or file name)");
    gen->add_flag_function("--dual",
                           [&](std::int64_t) { gen_opts.values["dual"] = "1"; },
                           "also write the Christoffel dual grid");

    CLI::App* dual = app.add_subcommand("dual", "sample the Christoffel dual grid only");
    dual_opts.bind_quadric(dual);
    dual_opts.add(dual, "format", "obj | csv | obj,csv");
    dual_opts.add(dual, "out", "output path (stem or file name)");

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--config", check_opts.config_path, "key=value config file");
    check_opts.add(check, "checks", "comma-separated check names (default: all)");
    check_opts.add(check, "seed", "seed for sampled checks");
    check_opts.add(check, "out", "JSON report path");
    check->add_flag_function("--pair-sign-flip",
                             [&](std::int64_t) { check_opts.values["pair_sign_flip"] = "1"; },
                             "negative control: flip the pair sign conventions");
    check->add_flag("--list", list_checks, "list available check names");

    CLI::App* branch = app.add_subcommand("branch-values", "print the umbilic census");
    branch_opts.bind_quadric(branch);

    CLI::App* report = app.add_subcommand("report", "print a stored JSON report");
    report->add_option("path", report_path, "report file")->required();

    CLI11_PARSE(app, argc, argv);

    JobConfig cfg;
    if (gen->parsed()) {
        cfg.out = "surface";
        if (const int rc = gen_opts.build(cfg, std::cerr)) return rc;
        return run_gen(cfg, std::cout);
    }
    if (dual->parsed()) {
        cfg.out = "surface";
        if (const int rc = dual_opts.build(cfg, std::cerr)) return rc;
        cfg.dual = true;
        cfg.primal = false;
        return run_gen(cfg, std::cout);
    }
    if (check->parsed()) {
        if (list_checks) {
            for (const auto& name : check_names()) std::cout << name << "\n";
            return 0;
        }
        cfg.out = "";  // no report file unless asked
        if (const int rc = check_opts.build(cfg, std::cerr)) return rc;
        return run_check(cfg, std::cout);
    }
    if (branch->parsed()) {
        if (const int rc = branch_opts.build(cfg, std::cerr)) return rc;
        return run_branch_values(cfg, std::cout);
    }
    return run_report(report_path, std::cout);
}
