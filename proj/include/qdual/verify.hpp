#ifndef QDUAL_VERIFY_HPP
#define QDUAL_VERIFY_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qdual/geometry.hpp"
#include "qdual/lorentz.hpp"

namespace qdual {

// Default tolerance ladder: exact identities, closed-form residuals,
// finite-difference residuals, quadrature comparisons.
constexpr double TOL_IDENTITY = 1e-11;
constexpr double TOL_CLOSED_FORM = 1e-8;
constexpr double TOL_FINITE_DIFF = 1e-6;
constexpr double TOL_QUADRATURE = 1e-5;
constexpr double FD_STEP = 1e-5;

/// Result of one verification check.  pass <=> max_residual <= tolerance.
/// samples == 0 marks a vacuous pass (e.g. no degenerate nodes to test).
struct CheckReport {
    std::string check;       // check name
    std::string anchor;      // the identity or claim being tested
    std::size_t samples = 0;
    double max_residual = 0;
    double tolerance = 0;
    bool pass = false;
    std::size_t masked = 0;  // nodes excluded from the statistics

    void finish() { pass = max_residual <= tolerance; }
    void record(double residual) {
        if (residual > max_residual) max_residual = residual;
        ++samples;
    }
};

using PointFn = std::function<Vec3(double, double)>;
using LorentzFn = std::function<LorentzNumber(double, double)>;

/// Central-difference jet of a point sampler (order 2 or 4 for the first
/// derivatives; second derivatives are always order 2).  Sampler errors
/// propagate; a masked stencil node raises StencilMasked.
SurfaceJet fd_jet(const PointFn& sampler, double u, double v,
                  double step = FD_STEP, int order = 2);

enum class CheckMode { Spacelike, Timelike };

/// Christoffel-pair criterion on two grids over a common lattice: tangents
/// parallel slot by slot, one scalar rho with x*_u = rho x_u and
/// x*_v = -rho x_v, and the mode's sign pattern (flip_signs inverts the
/// expected pattern, for negative controls).  Reports the worst normalized
/// residual over unmasked nodes.
CheckReport christoffel_pair_check(const SurfaceGrid& primal, const SurfaceGrid& dual,
                                   CheckMode mode, double tolerance = TOL_FINITE_DIFF,
                                   bool flip_signs = false);

/// Degeneracy propagation: every parameter line through a causally
/// degenerate node must carry a vanishing metric coefficient along its
/// whole length.  Vacuous pass (samples = 0) when the grid has no
/// degenerate node.
CheckReport degenerate_line_check(const SurfaceGrid& grid, double tolerance = TOL_CLOSED_FORM);

/// Para-complex Cauchy-Riemann residuals (Re f)_u - (Im f)_v and
/// (Im f)_u - (Re f)_v of a Lorentz-valued sampler by central differences
/// over a sample rectangle.
CheckReport para_cr_check(const LorentzFn& f, double u0, double u1, double v0, double v1,
                          int n = 12, double step = FD_STEP,
                          double tolerance = TOL_FINITE_DIFF);

/// Serialize reports to the JSON document consumed by the CLI:
/// {"seed": ..., "all_pass": ..., "checks": [{check, anchor, samples,
///  max_residual, tolerance, pass, masked}, ...]}.
std::string reports_to_json(const std::vector<CheckReport>& reports, unsigned long seed);

}  // namespace qdual

#endif
