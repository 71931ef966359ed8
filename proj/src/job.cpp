#include "qdual/job.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qdual/checks.hpp"
#include "qdual/duals.hpp"
#include "qdual/errors.hpp"
#include "qdual/verify.hpp"

namespace qdual {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw DomainError("not a number: " + s);
    return v;
}

// "0.75" or "0.6i" (purely imaginary)
Complex to_scalar(const std::string& s) {
    if (!s.empty() && (s.back() == 'i' || s.back() == 'I'))
        return Complex(0, to_double(s.substr(0, s.size() - 1)));
    return Complex(to_double(s), 0);
}

Family family_of(const std::string& name) {
    if (name == "ellipsoid") return Family::Ellipsoid;
    if (name == "hyp2") return Family::Hyperboloid2Sheet;
    if (name == "hyp1") return Family::Hyperboloid1Sheet;
    throw DomainError("unknown family: " + name + " (ellipsoid | hyp2 | hyp1)");
}

Ambient ambient_of(const std::string& name, Family family) {
    if (name.empty()) {
        // family default: the ambient in which the construction lives
        switch (family) {
            case Family::Ellipsoid: return Ambient::Euclidean;
            case Family::Hyperboloid2Sheet: return Ambient::MinkowskiZ;
            default: return Ambient::MinkowskiX;
        }
    }
    if (name == "euclidean") return Ambient::Euclidean;
    if (name == "minkowski-z") return Ambient::MinkowskiZ;
    if (name == "minkowski-x") return Ambient::MinkowskiX;
    throw DomainError("unknown ambient: " + name +
                      " (euclidean | minkowski-z | minkowski-x)");
}

int causal_code(CausalType t) {
    switch (t) {
        case CausalType::Spacelike: return 1;
        case CausalType::Timelike: return -1;
        case CausalType::Degenerate: return 0;
        default: return 9;
    }
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void apply_option(JobConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "family") cfg.family = value;
    else if (key == "ambient") cfg.ambient = value;
    else if (key == "axes") {
        cfg.axes.clear();
        for (const auto& t : split(value, ',')) cfg.axes.push_back(to_double(t));
    } else if (key == "moduli") {
        cfg.moduli = split(value, ',');
    } else if (key == "grid") {
        // u0:u1:nu,v0:v1:nv
        const auto parts = split(value, ',');
        if (parts.size() != 2) throw DomainError("grid needs u0:u1:nu,v0:v1:nv");
        const auto us = split(parts[0], ':'), vs = split(parts[1], ':');
        if (us.size() != 3 || vs.size() != 3)
            throw DomainError("grid needs u0:u1:nu,v0:v1:nv");
        cfg.u0 = to_double(us[0]);
        cfg.u1 = to_double(us[1]);
        cfg.nu = int(to_double(us[2]));
        cfg.v0 = to_double(vs[0]);
        cfg.v1 = to_double(vs[1]);
        cfg.nv = int(to_double(vs[2]));
        cfg.has_grid = true;
    } else if (key == "seed") cfg.seed = std::strtoul(value.c_str(), nullptr, 10);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "dual") cfg.dual = (value == "1" || value == "true" || value == "yes");
    else if (key == "checks") cfg.checks = split(value, ',');
    else if (key == "pair_sign_flip")
        cfg.pair_sign_flip = (value == "1" || value == "true" || value == "yes");
    else
        throw DomainError("unknown config key: " + key);
}

JobConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file: " + path);
    JobConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        apply_option(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

ModuliTriple resolve_moduli(const JobConfig& cfg) {
    const Family family = family_of(cfg.family);
    const Ambient ambient = ambient_of(cfg.ambient, family);
    const bool have_axes = !cfg.axes.empty();
    const bool have_moduli = !cfg.moduli.empty();
    if (have_axes == have_moduli)
        throw DomainError("exactly one of axes / moduli must be given");
    if (have_axes) {
        if (cfg.axes.size() != 3) throw DomainError("axes needs three values a,b,c");
        QuadricSpec spec{family, cfg.axes[0], cfg.axes[1], cfg.axes[2], ambient};
        return moduli_from_axes(spec);
    }
    if (cfg.moduli.size() != 3) throw DomainError("moduli needs three values p,q,r");
    ModuliTriple m;
    m.p = to_scalar(cfg.moduli[0]);
    m.q = to_scalar(cfg.moduli[1]);
    m.r = to_scalar(cfg.moduli[2]);
    if (std::abs(m.p * m.p + m.q * m.q - Complex(1)) > 1e-12)
        throw DomainError("moduli must satisfy p^2 + q^2 = 1");
    m.family = family;
    m.ambient = ambient;
    m.scale = 1.0;
    const double p2 = m.p2();
    m.case_tag = p2 < 0 ? ModulusCase::II : (p2 > 1 ? ModulusCase::III : ModulusCase::I);
    axes_from_moduli(m);  // validates the admissible range
    return m;
}

Lattice resolve_lattice(const JobConfig& cfg, const ModuliTriple& m) {
    if (cfg.has_grid) {
        if (cfg.nu < 2 || cfg.nv < 2)
            throw DomainError("grid resolution must be at least 2x2");
        if (!(cfg.u1 > cfg.u0) || !(cfg.v1 > cfg.v0))
            throw DomainError("grid ranges must be strictly increasing");
        return Lattice(cfg.u0, cfg.u1, cfg.nu, cfg.v0, cfg.v1, cfg.nv);
    }
    const ParamWindow w = default_window(m);
    return Lattice(w.u0, w.u1, 64, w.v0, w.v1, 64);
}

std::string grid_to_obj(const SurfaceGrid& grid) {
    std::string out;
    out.reserve(grid.jets.size() * 64);
    std::vector<long> index(grid.jets.size(), -1);
    long next = 1;  // OBJ indices are 1-based
    for (int j = 0; j < grid.lattice.nv; ++j) {
        for (int i = 0; i < grid.lattice.nu; ++i) {
            const std::size_t k = grid.index(i, j);
            if (grid.mask[k] != NodeState::Valid) continue;
            const Vec3& x = grid.jets[k].x;
            out += "v " + fmt17(x.x) + " " + fmt17(x.y) + " " + fmt17(x.z) + "\n";
            index[k] = next++;
        }
    }
    for (int j = 0; j + 1 < grid.lattice.nv; ++j) {
        for (int i = 0; i + 1 < grid.lattice.nu; ++i) {
            const long a = index[grid.index(i, j)], b = index[grid.index(i + 1, j)];
            const long c = index[grid.index(i + 1, j + 1)], d = index[grid.index(i, j + 1)];
            if (a < 0 || b < 0 || c < 0 || d < 0) continue;
            out += "f " + std::to_string(a) + " " + std::to_string(b) + " " +
                   std::to_string(c) + " " + std::to_string(d) + "\n";
        }
    }
    return out;
}

std::string grid_to_csv(const SurfaceGrid& grid) {
    std::string out = "u,v,x1,x2,x3,causal_type\n";
    for (int j = 0; j < grid.lattice.nv; ++j) {
        for (int i = 0; i < grid.lattice.nu; ++i) {
            const std::size_t k = grid.index(i, j);
            if (grid.mask[k] != NodeState::Valid) continue;
            const SurfaceJet& J = grid.jets[k];
            out += fmt17(grid.lattice.u(i)) + "," + fmt17(grid.lattice.v(j)) + "," +
                   fmt17(J.x.x) + "," + fmt17(J.x.y) + "," + fmt17(J.x.z) + "," +
                   std::to_string(causal_code(grid.causal[k])) + "\n";
        }
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DomainError("cannot rename " + tmp + " to " + path);
}

namespace {

std::string with_suffix(const std::string& base, const std::string& tag,
                        const std::string& ext) {
    // "mesh.obj" + dual -> "mesh-dual.obj"; bare stems get the extension
    std::string stem = base, old_ext;
    const auto dot = base.find_last_of('.');
    const auto slash = base.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
        stem = base.substr(0, dot);
        old_ext = base.substr(dot);
    }
    (void)old_ext;
    return stem + tag + ext;
}

void emit_grid(const SurfaceGrid& grid, const JobConfig& cfg, const std::string& tag,
               std::ostream& log) {
    const double pct = 100.0 * grid.masked_count() / double(grid.jets.size());
    for (const auto& fmt : split(cfg.format, ',')) {
        std::string path, content;
        if (fmt == "obj") {
            path = with_suffix(cfg.out, tag, ".obj");
            content = grid_to_obj(grid);
        } else if (fmt == "csv") {
            path = with_suffix(cfg.out, tag, ".csv");
            content = grid_to_csv(grid);
        } else {
            throw DomainError("unknown format: " + fmt + " (obj | csv)");
        }
        write_file_atomic(path, content);
        log << path << ": " << grid.jets.size() - grid.masked_count() << " nodes, "
            << pct << "% masked\n";
    }
}

}  // namespace

int run_gen(const JobConfig& cfg, std::ostream& log) {
    ModuliTriple m;
    Lattice lat;
    try {
        m = resolve_moduli(cfg);
        lat = resolve_lattice(cfg, m);
    } catch (const Error& e) {
        log << "config error: " << e.what() << "\n";
        return EXIT_CONFIG_ERROR;
    }
    try {
        if (cfg.primal) {
            const SurfaceGrid primal = build_primal_grid(m, lat);
            emit_grid(primal, cfg, "", log);
        }
        if (cfg.dual) {
            const SurfaceGrid dual = build_dual_grid(m, lat);
            emit_grid(dual, cfg, "-dual", log);
        }
    } catch (const Error& e) {
        log << "generation error: " << e.what() << "\n";
        return EXIT_GENERATION_ERROR;
    }
    return 0;
}

int run_check(const JobConfig& cfg, std::ostream& log) {
    CheckContext ctx;
    ctx.seed = cfg.seed;
    ctx.pair_sign_flip = cfg.pair_sign_flip;
    std::vector<CheckReport> reports;
    try {
        reports = run_checks(cfg.checks, ctx);
    } catch (const Error& e) {
        log << "config error: " << e.what() << "\n";
        return EXIT_CONFIG_ERROR;
    }
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        log << (r.pass ? "pass  " : "FAIL  ") << r.check << "  max_residual="
            << r.max_residual << " tolerance=" << r.tolerance << " samples=" << r.samples
            << " masked=" << r.masked << "\n";
    }
    if (!cfg.out.empty()) {
        const std::string path =
            cfg.out.find('.') == std::string::npos ? cfg.out + ".json" : cfg.out;
        write_file_atomic(path, reports_to_json(reports, cfg.seed));
        log << "report: " << path << "\n";
    }
    return all ? 0 : EXIT_CHECKS_FAILED;
}

int run_branch_values(const JobConfig& cfg, std::ostream& log) {
    try {
        const Family family = family_of(cfg.family);
        const Ambient ambient = ambient_of(cfg.ambient, family);
        if (cfg.axes.size() != 3)
            throw DomainError("branch-values needs --axes a,b,c");
        const QuadricSpec spec{family, cfg.axes[0], cfg.axes[1], cfg.axes[2], ambient};
        const BranchCensus census = umbilic_branch_values(spec);
        const auto cls_name = [](BranchClass c) {
            switch (c) {
                case BranchClass::Real: return "real";
                case BranchClass::Imaginary: return "imaginary";
                case BranchClass::Unitary: return "unitary";
                default: return "excluded";
            }
        };
        log << census.values.size() << " branch values\n";
        for (const auto& b : census.values) {
            if (b.lorentz)
                log << "  " << b.re << (b.im < 0 ? " - j " : " + j ") << std::abs(b.im);
            else
                log << "  " << b.re << (b.im < 0 ? " - i " : " + i ") << std::abs(b.im);
            log << "   [" << cls_name(b.cls) << "]\n";
        }
        if (census.no_umbilics) log << "no umbilics\n";
        return 0;
    } catch (const Error& e) {
        log << "config error: " << e.what() << "\n";
        return EXIT_CONFIG_ERROR;
    }
}

int run_report(const std::string& path, std::ostream& log) {
    std::ifstream in(path);
    if (!in) {
        log << "config error: cannot open " << path << "\n";
        return EXIT_CONFIG_ERROR;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        log << "config error: " << e.what() << "\n";
        return EXIT_CONFIG_ERROR;
    }
    bool all = true;
    for (const auto& c : doc["checks"]) {
        const bool pass = c.value("pass", false);
        all = all && pass;
        log << (pass ? "pass  " : "FAIL  ") << c.value("check", "?") << "  max_residual="
            << c.value("max_residual", 0.0) << " tolerance=" << c.value("tolerance", 0.0)
            << " samples=" << c.value("samples", 0) << " masked=" << c.value("masked", 0)
            << "\n";
    }
    log << (all ? "all checks pass\n" : "failures present\n");
    return all ? 0 : EXIT_CHECKS_FAILED;
}

}  // namespace qdual
