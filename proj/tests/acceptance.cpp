// Acceptance suite: each criterion runs its verification checks at the pinned
// tolerances and prints one pass/fail line.  Exit code 0 iff all pass.
#include <cstdio>
#include <string>
#include <vector>

#include "qdual/checks.hpp"

using namespace qdual;

namespace {

struct Criterion {
    const char* label;
    std::vector<std::string> checks;
};

const std::vector<Criterion> CRITERIA = {
    {"01 Jacobi identity suite (both laws <= 1e-12; amplitude vs ODE oracle <= 1e-8)",
     {"jacobi-pythagorean", "jacobi-amplitude-oracle"}},
    {"02 complex conversion suite (imaginary arguments, double periodicity <= 1e-10)",
     {"jacobi-imaginary-argument", "jacobi-double-periodicity"}},
    {"03 curvature-line parametrizations (membership 1e-10, orthogonality 1e-8, "
     "conjugacy 1e-6; all three families)",
     {"ellipsoid-membership", "ellipsoid-orthogonality", "ellipsoid-conjugacy",
      "hyp2-membership", "hyp2-orthogonality", "hyp2-conjugacy", "hyp1-membership",
      "hyp1-orthogonality", "hyp1-conjugacy"}},
    {"04 implicit representations (tower, both 2-sheet cases, both 1-sheet cases <= 1e-8)",
     {"scherk-implicit", "hyp2-implicit-case-i", "hyp2-implicit-case-iii",
      "hyp1-implicit-case-i", "hyp1-implicit-case-ii"}},
    {"05 Christoffel pairs (five closed-form pairs + catenoid <= 1e-6; negative control)",
     {"pair-ellipsoid", "pair-hyp2-minkowski", "pair-hyp2-euclidean", "pair-hyp1-minkowski",
      "pair-hyp1-euclidean", "pair-catenoid", "pair-negative-control"}},
    {"06 quadrature oracle (duals <= 1e-5 gauged; closure <= 1e-7; step stability <= 1e-7)",
     {"dual-oracle-ellipsoid", "dual-oracle-hyp2-minkowski", "dual-oracle-hyp2-euclidean",
      "dual-oracle-hyp1-minkowski", "dual-oracle-hyp1-euclidean", "dual-path-independence",
      "dual-step-stability"}},
    {"07 degeneracy curves follow parameter lines (|G| <= 1e-8 scale; Euclidean control)",
     {"degenerate-line-mink-ellipsoid", "degenerate-line-hyp2",
      "degenerate-line-euclidean-control"}},
    {"08 branch-value census (4 real values, 16 para-complex with exactly 4 excluded)",
     {"umbilic-branch-ellipsoid", "umbilic-branch-hyp1-census"}},
    {"09 Lorentz machinery (restriction exact; para-CR, L-Jacobi and y ODEs <= 1e-6)",
     {"l-extend-restriction", "para-cr-extension", "l-jacobi-ode", "y-hyp1-ode",
      "para-cr-y-hyp1"}},
    {"10 elliptic-coordinate oracle (on-quadric <= 1e-10; tangent parallelism <= 1e-6)",
     {"reinbek-onquadric-ellipsoid", "reinbek-onquadric-hyp2", "reinbek-onquadric-hyp1",
      "reinbek-parallel-ellipsoid", "reinbek-parallel-hyp2", "reinbek-parallel-hyp1"}},
    {"11 antiderivative derivative table (seven identities <= 1e-7, all three families)",
     {"antiderivative-ellipsoid", "antiderivative-hyp2", "antiderivative-hyp1"}},
};

}  // namespace

int main() {
    CheckContext ctx;
    int failed = 0;
    for (const auto& crit : CRITERIA) {
        double worst_margin = 0;  // max residual / tolerance over the criterion
        bool pass = true;
        std::string detail;
        for (const auto& name : crit.checks) {
            const CheckReport r = run_check(name, ctx);
            bool ok = r.pass;
            // the Euclidean control must pass vacuously: no degenerate nodes
            if (name == "degenerate-line-euclidean-control") ok = ok && r.samples == 0;
            if (!ok) {
                pass = false;
                detail += " " + name;
            }
            if (r.tolerance > 0)
                worst_margin = std::max(worst_margin, r.max_residual / r.tolerance);
        }
        std::printf("[%s] %s (worst residual at %.2e of tolerance)%s%s\n",
                    pass ? "PASS" : "FAIL", crit.label, worst_margin,
                    pass ? "" : " -- failing:", detail.c_str());
        failed += !pass;
    }
    if (failed == 0)
        std::printf("acceptance: all %zu criteria pass\n", CRITERIA.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed, CRITERIA.size());
    return failed == 0 ? 0 : 1;
}
