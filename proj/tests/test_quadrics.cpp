#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qdual/quadrics.hpp"
#include "qdual/verify.hpp"

using namespace qdual;

namespace {
const double SQ15 = std::sqrt(1.5), SQ05 = std::sqrt(0.5);

QuadricSpec tri_ellipsoid() {
    return {Family::Ellipsoid, SQ15, 1.0, SQ05, Ambient::Euclidean};
}
}  // namespace

TEST_CASE("moduli from axes and back") {
    const ModuliTriple m = moduli_from_axes(tri_ellipsoid());
    CHECK(m.p.real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(m.q.real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(m.r.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.case_tag == ModulusCase::I);

    const auto axes = axes_from_moduli(m);
    CHECK(axes[0] == doctest::Approx(SQ15).epsilon(1e-14));
    CHECK(axes[1] == 1.0);
    CHECK(axes[2] == doctest::Approx(SQ05).epsilon(1e-14));
}

TEST_CASE("degenerate axes are rejected") {
    CHECK_THROWS_AS(moduli_from_axes({Family::Ellipsoid, 1.0, 1.0, 0.7, Ambient::Euclidean}),
                    DegenerateAxes);
    CHECK_THROWS_AS(moduli_from_axes({Family::Ellipsoid, 1.2, 0.8, 1.2, Ambient::Euclidean}),
                    DegenerateAxes);
    // Euclidean 1-sheeted hyperboloid needs b < c
    CHECK_THROWS_AS(moduli_from_axes({Family::Hyperboloid1Sheet, 1.0, 1.2, 0.8,
                                      Ambient::Euclidean}),
                    DomainError);
}

TEST_CASE("hyperboloid orderings yield the case table") {
    // c > a > b: case II (p imaginary, q > 1)
    const ModuliTriple m2 = moduli_from_axes({Family::Hyperboloid2Sheet, 1.0, 0.8, 1.5,
                                              Ambient::MinkowskiZ});
    CHECK(m2.case_tag == ModulusCase::II);
    CHECK(m2.p.real() == 0.0);
    CHECK(m2.q.real() > 1.0);
    CHECK(m2.r.real() == 0.0);  // r imaginary in case II

    // b > c > a: case III (p > 1, q imaginary)
    const ModuliTriple m3 = moduli_from_axes({Family::Hyperboloid2Sheet, 0.8, 1.6, 1.2,
                                              Ambient::MinkowskiZ});
    CHECK(m3.case_tag == ModulusCase::III);
    CHECK(m3.p.real() > 1.0);
    CHECK(m3.q.imag() != 0.0);
}

TEST_CASE("axes_from_moduli boundary behaviour") {
    // r -> 0 gives the unit sphere
    ModuliTriple m = moduli_from_axes(tri_ellipsoid());
    m.r = 0;
    const auto axes = axes_from_moduli(m);
    CHECK(axes[0] == 1.0);
    CHECK(axes[2] == 1.0);

    // r = 1/q hits c = 0
    ModuliTriple bad = moduli_from_axes(tri_ellipsoid());
    bad.r = 1.0 / bad.q.real();
    CHECK_THROWS_AS(axes_from_moduli(bad), DomainError);
}

TEST_CASE("ellipsoid point at distinguished parameters") {
    const ModuliTriple m = moduli_from_axes(tri_ellipsoid());
    const SurfaceJet a = ellipsoid_point(Complex(0, 0), m);
    CHECK(norm(a.x - Vec3{0, -1.0, 0}) < 1e-14);

    const double Kp = complete_K(m.p.real());
    const SurfaceJet b = ellipsoid_point(Complex(Kp, 0), m);
    CHECK(norm(b.x - Vec3{SQ15, 0, 0}) < 1e-13);
}

TEST_CASE("hyp2 point: apex and pole row") {
    const ModuliTriple m = moduli_from_axes({Family::Hyperboloid2Sheet, 1.5, 1.2, 0.9,
                                             Ambient::MinkowskiZ});
    const double Kq = complete_K(m.q.real());
    const SurfaceJet apex = hyp2_point(Complex(0, Kq), m);
    CHECK(norm(apex.x - Vec3{0, 0, 0.9 * 1.2 / 1.2}) < 1e-12);
    CHECK_THROWS_AS(hyp2_point(Complex(0.4, 0), m), PoleError);
}

TEST_CASE("hyp1 point: restriction to the real axis and null divisor") {
    const ModuliTriple m = moduli_from_axes({Family::Hyperboloid1Sheet, 1.5, 1.2, 0.9,
                                             Ambient::MinkowskiX});
    const double q2 = m.q2();
    for (double u : {0.35, 0.8}) {
        const SurfaceJet J = hyp1_point(LorentzNumber(u, 0), m);
        const JacobiTriple t = jacobi_sncndn(u, q2);
        CHECK(J.x.y == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(J.x.x == doctest::Approx(1.5 * t.cn / t.sn).epsilon(1e-12));
        CHECK(J.x.z == doctest::Approx(0.9 / t.sn).epsilon(1e-12));
        // 1 + (x1/a)^2 = (x3/c)^2 exactly on the v = 0 slice
        const double X = J.x.x / 1.5, Z = J.x.z / 0.9;
        CHECK(1 + X * X == doctest::Approx(Z * Z).epsilon(1e-12));
    }
    CHECK_THROWS_AS(hyp1_point(LorentzNumber(0, 0.2), m), NullDivisor);
}

TEST_CASE("inverse stereographic lifts") {
    CHECK(norm(inverse_stereographic(Complex(0, 0), LiftTarget::Sphere) - Vec3{0, 0, 1}) == 0);
    const Vec3 h2 = inverse_stereographic(Complex(0, 0), LiftTarget::Hyp2);
    CHECK(norm(h2 - Vec3{0, 0, 1}) == 0);
    CHECK(metric_dot(h2, h2, Ambient::MinkowskiZ) == doctest::Approx(-1.0));

    CHECK_THROWS_AS(inverse_stereographic(Complex(1, 0), LiftTarget::Hyp2), DomainError);
    CHECK_THROWS_AS(inverse_stereographic(LorentzNumber(1, 0), LiftTarget::Hyp1), DomainError);

    // light-cone values are fine for the Lorentz lift: ||1+j||^2 = 0 != 1
    const Vec3 h1 = inverse_stereographic(LorentzNumber(1, 1), LiftTarget::Hyp1);
    CHECK(metric_dot(h1, h1, Ambient::MinkowskiX) == doctest::Approx(1.0).epsilon(1e-13));

    oracles::Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        const Complex y(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const Vec3 s = inverse_stereographic(y, LiftTarget::Sphere);
        CHECK(dot(s, s) == doctest::Approx(1.0).epsilon(1e-13));
        if (std::abs(std::norm(y) - 1.0) > 1e-2) {
            const Vec3 h = inverse_stereographic(y, LiftTarget::Hyp2);
            CHECK(metric_dot(h, h, Ambient::MinkowskiZ) == doctest::Approx(-1.0).epsilon(1e-9));
        }
        const LorentzNumber w(rng.uniform(-2, 2), rng.uniform(-2, 2));
        if (std::abs(sq_modulus(w) - 1.0) > 1e-2) {
            const Vec3 h = inverse_stereographic(w, LiftTarget::Hyp1);
            CHECK(metric_dot(h, h, Ambient::MinkowskiX) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("branch value census classifications") {
    // a > b > c: all four real
    const BranchCensus ce = umbilic_branch_values(tri_ellipsoid());
    CHECK(ce.values.size() == 4);
    CHECK(!ce.no_umbilics);
    for (const auto& b : ce.values) CHECK(b.cls == BranchClass::Real);

    // Minkowski ellipsoid: real or imaginary, never unitary
    const BranchCensus cm =
        umbilic_branch_values({Family::Ellipsoid, 1.2, 1.0, 2.0, Ambient::MinkowskiZ});
    for (const auto& b : cm.values)
        CHECK((b.cls == BranchClass::Real || b.cls == BranchClass::Imaginary));

    // 1-sheeted hyperboloid, c > a > b: 16 values, 4 excluded
    const BranchCensus ch =
        umbilic_branch_values({Family::Hyperboloid1Sheet, 1.0, 0.8, 1.5, Ambient::MinkowskiX});
    CHECK(ch.values.size() == 16);
    int excl = 0;
    for (const auto& b : ch.values) excl += (b.cls == BranchClass::Excluded);
    CHECK(excl == 4);

    // a > b > c ordering admits no para-complex branch values
    const BranchCensus cn =
        umbilic_branch_values({Family::Hyperboloid1Sheet, 1.5, 1.2, 0.9, Ambient::MinkowskiX});
    CHECK(cn.no_umbilics);
    CHECK(cn.values.empty());

    // Euclidean 1-sheeted hyperboloid never has umbilics
    const BranchCensus cu =
        umbilic_branch_values({Family::Hyperboloid1Sheet, 1.0, 0.8, 1.2, Ambient::Euclidean});
    CHECK(cu.no_umbilics);
}

TEST_CASE("causal classification") {
    // Euclidean grids are spacelike throughout
    const ModuliTriple me = moduli_from_axes(tri_ellipsoid());
    const SurfaceGrid ge = build_primal_grid(me, Lattice(-1.5, 1.5, 17, -1.2, 1.2, 17));
    for (std::size_t k = 0; k < ge.causal.size(); ++k)
        if (ge.mask[k] == NodeState::Valid) CHECK(ge.causal[k] == CausalType::Spacelike);

    // Minkowski ellipsoid has all three types along a meridian
    const ModuliTriple mm =
        moduli_from_axes({Family::Ellipsoid, 1.2, 1.0, 2.0, Ambient::MinkowskiZ});
    const auto jets = jet_sampler(mm);
    const auto Tv = natural_periods(mm).second;
    int spacelike = 0, timelike = 0;
    for (int k = 0; k <= 120; ++k) {
        const CausalType t = causal_type(jets(0.3, Tv * k / 120.0), Ambient::MinkowskiZ);
        spacelike += t == CausalType::Spacelike;
        timelike += t == CausalType::Timelike;
    }
    CHECK(spacelike > 10);
    CHECK(timelike > 10);
}

TEST_CASE("revolution pair: catenoid") {
    RevolutionProfile prof{[](double u) { return 1.0 / std::cosh(u); },
                           [](double u) { return std::tanh(u); },
                           [](double u) { const double c = std::cosh(u); return 1.0 / (c * c); },
                           0.0};
    const auto [x, xd] = revolution_pair(prof, 0.8, 1.1);
    CHECK(x.z == doctest::Approx(std::tanh(0.8)).epsilon(1e-14));
    CHECK(xd.z == doctest::Approx(0.8).epsilon(1e-11));  // height is linear in u

    RevolutionProfile zero{[](double) { return 0.0; }, [](double) { return 0.0; },
                           [](double) { return 0.0; }, 0.0};
    CHECK_THROWS_AS(revolution_pair(zero, 0.1, 0.0), DomainError);
}

TEST_CASE("grid masking reports pole rows") {
    const ModuliTriple m = moduli_from_axes({Family::Hyperboloid2Sheet, 1.5, 1.2, 0.9,
                                             Ambient::MinkowskiZ});
    const double Tv = natural_periods(m).second;
    // a grid crossing v = 0 must mask that row
    const SurfaceGrid g = build_primal_grid(m, Lattice(-0.5, 0.5, 9, -0.2 * Tv, 0.2 * Tv, 9));
    CHECK(g.masked_count() > 0);
    bool has_valid = false;
    for (std::size_t k = 0; k < g.mask.size(); ++k) has_valid |= g.mask[k] == NodeState::Valid;
    CHECK(has_valid);
}

TEST_CASE("closed-form jets agree with finite differences everywhere") {
    oracles::Rng rng(12);
    const ModuliTriple m1 = moduli_from_axes(tri_ellipsoid());
    const ModuliTriple m2 = moduli_from_axes({Family::Hyperboloid2Sheet, 1.0, 0.8, 1.5,
                                              Ambient::MinkowskiZ});  // case II
    const ModuliTriple m3 = moduli_from_axes({Family::Hyperboloid1Sheet, 1.5, 1.2, 0.9,
                                              Ambient::MinkowskiX});
    for (const ModuliTriple* m : {&m1, &m2, &m3}) {
        const auto pts = point_sampler(*m);
        const auto jets = jet_sampler(*m);
        int n = 0;
        while (n < 25) {
            const double u = rng.uniform(0.25, 1.0), v = rng.uniform(0.3, 0.9);
            try {
                const SurfaceJet C = jets(u, v);
                const SurfaceJet F = fd_jet(pts, u, v, 1e-4, 4);
                const double s = 1 + norm(C.x_u) + norm(C.x_v);
                CHECK(norm(C.x_u - F.x_u) < 1e-6 * s);
                CHECK(norm(C.x_v - F.x_v) < 1e-6 * s);
                CHECK(norm(C.x_uv - F.x_uv) < 1e-4 * (1 + norm(C.x_uv)));
                ++n;
            } catch (const Error&) {
            }
        }
    }
}
