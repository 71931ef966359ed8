#ifndef QDUAL_QUADRICS_HPP
#define QDUAL_QUADRICS_HPP

#include <array>
#include <functional>
#include <vector>

#include "qdual/elliptic.hpp"
#include "qdual/geometry.hpp"
#include "qdual/lorentz.hpp"

namespace qdual {

enum class Family { Ellipsoid, Hyperboloid2Sheet, Hyperboloid1Sheet };

/// A central quadric aligned to the coordinate axes: half-axes a, b, c > 0
/// plus the ambient signature.  The one-sheeted hyperboloid lives in
/// MinkowskiX (timelike first axis); the other families use Euclidean or
/// MinkowskiZ.
struct QuadricSpec {
    Family family = Family::Ellipsoid;
    double a = 1, b = 1, c = 1;
    Ambient ambient = Ambient::Euclidean;
};

/// Moduli (p, q, r) of a curvature-line parametrization, p^2 + q^2 = 1.
/// p^2, q^2, r^2 are real in every case; the case tag records the half-axis
/// ordering class:
///   I:   p, q in (0,1),      r in (0, 1/q)
///   II:  p imaginary, q > 1, r/i in (0, 1/q)
///   III: p > 1, q imaginary, r/i in (0, 1/p)
struct ModuliTriple {
    Complex p, q, r;
    ModulusCase case_tag = ModulusCase::I;
    Family family = Family::Ellipsoid;
    Ambient ambient = Ambient::Euclidean;
    double scale = 1.0;  // homothety factor: actual half-axes = scale * (a(m), 1, c(m))

    double p2() const { return p.real() * p.real() - p.imag() * p.imag(); }
    double q2() const { return q.real() * q.real() - q.imag() * q.imag(); }
    double r2() const { return r.real() * r.real() - r.imag() * r.imag(); }
};

/// Moduli from half-axes.  Throws DegenerateAxes when the formulas divide by
/// zero (coinciding relevant axes).  The Euclidean one-sheeted hyperboloid
/// requires b < c; the Minkowski one requires a strict ordering that puts it
/// in case I or II (case III is the x2/x3 axis exchange of case I).
ModuliTriple moduli_from_axes(const QuadricSpec& spec);

/// Half-axes (a, b, c) with the homothety normalization b = 1.
/// Throws DomainError when the moduli leave the admissible range.
std::array<double, 3> axes_from_moduli(const ModuliTriple& m);

/// Curvature-line parametrization of the ellipsoid
///   x = (a sn_p u dn_q v, -b cn_p u cn_q v, c dn_p u sn_q v),
/// entire in (u, v); jets are closed-form via the Jacobi derivative rules.
SurfaceJet ellipsoid_point(Complex z, const ModuliTriple& m);

/// Curvature-line parametrization of the 2-sheeted hyperboloid
///   x = (a cn_p u cn_q v, b sn_p u dn_q v, c) / (dn_p u sn_q v).
/// Throws PoleError when the denominator is below tolerance.
SurfaceJet hyp2_point(Complex z, const ModuliTriple& m);

/// Curvature-line parametrization of the 1-sheeted hyperboloid
///   x = (a cn_q u, -b sn_q v dn_q u, c cn_q v) / (sn_q u dn_q v),
/// z = u + jv para-complex.  Throws PoleError on a vanishing denominator.
SurfaceJet hyp1_point(const LorentzNumber& z, const ModuliTriple& m);

enum class LiftTarget { Sphere, Hyp2, Hyp1 };

/// Inverse stereographic lifts with unit axes: y -> S^2 (Euclidean),
/// y -> 2-sheeted hyperboloid (MinkowskiZ), y -> S^{1,1} (MinkowskiX, y a
/// Lorentz number passed as (re, im)).  Throws DomainError on the excluded
/// set |y| = 1 resp ||y||^2 = 1.
Vec3 inverse_stereographic(Complex y, LiftTarget target);
Vec3 inverse_stereographic(const LorentzNumber& y, LiftTarget target);

enum class BranchClass { Real, Imaginary, Unitary, Excluded };

/// One branch value of the parametrizing elliptic function.  For the
/// families over complex y the value is (re, im) complex; for the 1-sheeted
/// hyperboloid it is a Lorentz number (lorentz = true).
struct BranchValue {
    double re = 0, im = 0;
    bool lorentz = false;
    BranchClass cls = BranchClass::Real;
};

struct BranchCensus {
    std::vector<BranchValue> values;
    bool no_umbilics = false;  // set when the values are unitary or absent
};

/// Branch values y'=0 of the curvature-line net; their projections are the
/// umbilics.  Ellipsoid in MinkowskiZ uses the c -> ic variant; the
/// 1-sheeted hyperboloid yields 16 para-complex values of which the four
/// with ||y||^2 = 1 do not project and are flagged Excluded.
BranchCensus umbilic_branch_values(const QuadricSpec& spec);

/// Sign classification of E G - F^2 of the induced metric, with a relative
/// gate eps = 1e-9 (E^2 + F^2 + G^2).
CausalType causal_type(const SurfaceJet& jet, Ambient ambient);

/// Surface of revolution x = (r cos v, r sin v, h) and its Christoffel dual
/// x* = (-cos v / r, -sin v / r, int h'/r^2 du); the height integral is
/// accumulated numerically from u0.
struct RevolutionProfile {
    std::function<double(double)> r, h, dh;
    double u0 = 0;
};
std::pair<Vec3, Vec3> revolution_pair(const RevolutionProfile& prof, double u, double v);

/// Point sampler for the family's closed form (fixed moduli), used by grid
/// builders and finite-difference verification.
std::function<Vec3(double, double)> point_sampler(const ModuliTriple& m);

/// Closed-form jet sampler for the family.
std::function<SurfaceJet(double, double)> jet_sampler(const ModuliTriple& m);

/// Jet sampler of the same closed form with unit axes a = b = c = 1: the
/// conformal (para-conformal) lift whose metric feeds Christoffel integration.
std::function<SurfaceJet(double, double)> unit_lift_sampler(const ModuliTriple& m);

/// Sample the closed-form parametrization over a lattice; nodes whose
/// denominators fall inside the masking tolerance are masked as poles,
/// rank-deficient nodes as degenerate.  Causal labels use spec.ambient.
SurfaceGrid build_primal_grid(const ModuliTriple& m, const Lattice& lat);

/// Natural parameter periods (u and v directions) of the family's closed form.
std::pair<double, double> natural_periods(const ModuliTriple& m);

/// A pole-avoiding default parameter window per family and modulus case
/// (the entire fundamental domain for the ellipsoid).
struct ParamWindow {
    double u0, u1, v0, v1;
};
ParamWindow default_window(const ModuliTriple& m);

}  // namespace qdual

#endif
