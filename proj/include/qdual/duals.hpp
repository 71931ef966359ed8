#ifndef QDUAL_DUALS_HPP
#define QDUAL_DUALS_HPP

#include <array>
#include <functional>

#include "qdual/geometry.hpp"
#include "qdual/lorentz.hpp"
#include "qdual/quadrics.hpp"

namespace qdual {

/// Curvature-line parametrization of a Scherk saddle tower,
///   x* = (2/pq) Re( q artanh(1/(p sn_p)), arctan(q/(p cn_p)),
///                   p artanh((q/i) sn_p/cn_p) ),
/// p^2 + q^2 = 1, p, q in (0, 1).  Principal branches; grids unwrap.
Vec3 scherk_tower(Complex z, double p, double q);

/// Christoffel dual of the tri-axial ellipsoid: the affine image
/// (a, b, c)-scaling of the Scherk tower components.
Vec3 ellipsoid_dual(Complex z, const ModuliTriple& m);

/// Christoffel dual of the 2-sheeted hyperboloid (the affine image of a
/// maximal surface when m.ambient is MinkowskiZ; same closed form with the
/// Euclidean moduli otherwise).
Vec3 hyp2_dual(Complex z, const ModuliTriple& m);

/// Christoffel dual of the 1-sheeted hyperboloid, evaluated through the
/// Lorentz-analytic extensions of the real Jacobi functions.  Supports the
/// case I and case II modulus configurations; case III is the x2/x3 axis
/// exchange of case I and is rejected with CaseMismatch.
Vec3 hyp1_dual(const LorentzNumber& z, const ModuliTriple& m);

/// Position sampler of the family's Christoffel dual (principal branches).
std::function<Vec3(double, double)> dual_point_sampler(const ModuliTriple& m);

/// Per-component branch monodromy of the dual's closed form: the component
/// value is defined modulo this period (0 = single-valued).
std::array<double, 3> dual_monodromy_periods(const ModuliTriple& m);

/// The three closed-form antiderivatives of the Weierstrass integrands for
/// the family's differential equation, as functions of the parametrizing
/// function value y:
///   ellipsoid:  ( (2/p) artanh(2y/(p(1+y^2))),
///                 (2/pq) arctan(2iqy/(p(1-y^2))),
///                 (2/q) artanh(q(1+y^2)/(1-y^2)) )
///   hyp2:       (-(2/p) arctan(2y/(p(1-y^2))),
///                 (2/pq) artanh(2qy/(ip(1+y^2))),
///                 (2/q) artanh(q(1-y^2)/(1+y^2)) )
///   hyp1:       ( (2/p) arctan(2y/(p(1-y^2))),
///                 (2/pq) arctan(2qy/(p(1+y^2))),
///                -(2/q) artanh(q(1-y^2)/(1+y^2)) )
std::array<Complex, 3> weierstrass_antiderivatives(Complex y, double p2, Family family);

/// Left-hand side of the family's implicit representation, evaluated on the
/// homothety-normalized dual coordinates X_i = x*_i / a_i:
///   ellipsoid, p in (0,1):  q^2 cosh(p X1) + cos(pq X2)   - p^2 cosh(q X3)
///   hyp2, p in (0,1):       q^2 cos(p X1)  + cosh(pq X2)  - p^2 cosh(q X3)
///   hyp2, p > 1:            q^2 cos(p X1)  + cos(pq X2/i) - p^2 cos(q X3/i)
///   hyp1, p in (0,1):       q^2 cos(p X1)  + cos(pq X2)   - p^2 cosh(q X3)
///   hyp1, p imaginary:      q^2 cosh(pX1/i)+ cosh(pq X2/i)+ p^2 cosh(q X3)
/// Throws CaseMismatch when the family has no listed equation for the case.
double implicit_residual(Family family, const Vec3& X, double p2, double q2);

/// Divide a dual point componentwise by the family's scaled half-axes.
Vec3 normalize_dual_point(const ModuliTriple& m, const Vec3& x);

enum class PairMode { Spacelike, Timelike };

/// Which family's closed form applies, its moduli, and the gauge: the
/// dual is only determined up to translation, so comparisons anchor at a
/// base point z0 carrying the closed form's value there.  The pair mode
/// records the ambient's slot signs.
struct DualSurfaceSpec {
    ModuliTriple moduli;
    double u0 = 0, v0 = 0;
    Vec3 base_value;
    PairMode mode = PairMode::Spacelike;
};

/// Spec for the family's dual gauged at (u0, v0); the mode follows the
/// ambient (timelike for the 1-sheeted hyperboloid constructions).
DualSurfaceSpec make_dual_spec(const ModuliTriple& m, double u0, double v0);

/// Translate a grid (e.g. an integrator result gauged to zero at its origin)
/// so that its value at the gauge base point matches the closed form.
void apply_gauge(SurfaceGrid& grid, const DualSurfaceSpec& spec);

struct ChristoffelResult {
    SurfaceGrid dual;
    double closure_residual = 0;   // max loop integral over sampled rectangles
    double refinement_delta = 0;   // max change under quadrature refinement x2
    bool flagged = false;          // set when either residual exceeds 1e-7 scale
};

/// Dual surface by quadrature of the Christoffel system
///   x*_u = rho_u (alpha x)_u,   x*_v = -/+ rho_v (alpha x)_v
/// (minus for Spacelike, plus for Timelike), with rho_u = 2/(x_u, x_u) and
/// rho_v = 2/(x_v, x_v) taken from the unscaled conformal lift in the given
/// metric.  Gauge x*(z0) = 0 at the lattice origin.  Composite 4-point
/// Gauss panels per lattice cell; refinement and closure residuals are
/// reported and the run is flagged when they exceed tolerance.
ChristoffelResult christoffel_numeric(
    const std::function<SurfaceJet(double, double)>& unscaled,
    const std::function<SurfaceJet(double, double)>& scaled,
    const Lattice& lat, Ambient metric, PairMode mode);

/// Dual grid from the closed forms with per-component branch unwrapping
/// along rows/columns; jets by central differences.
SurfaceGrid build_dual_grid(const ModuliTriple& m, const Lattice& lat);

}  // namespace qdual

#endif
