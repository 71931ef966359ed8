#include "qdual/quadrics.hpp"

#include <cmath>

#include "qdual/numerics.hpp"

namespace qdual {

namespace {

// One-axis Jacobi data: values plus first/second derivatives from the
// derivative rules sn' = cn dn, cn' = -sn dn, dn' = -p^2 sn cn.
struct Ax {
    double s, c, d, p2;
    double s1() const { return c * d; }
    double c1() const { return -s * d; }
    double d1() const { return -p2 * s * c; }
    double s2() const { return -s * (d * d + p2 * c * c); }
    double c2() const { return -c * (d * d - p2 * s * s); }
    double d2() const { return -p2 * d * (c * c - s * s); }
};

Ax ax(double t, double p2) {
    const JacobiTriple j = jacobi_sncndn(t, p2);
    return {j.sn, j.cn, j.dn, p2};
}

double sq(double x) { return x * x; }

void require_distinct(double x, double y, const char* what) {
    if (std::abs(x - y) <= 1e-12 * (std::abs(x) + std::abs(y)))
        throw DegenerateAxes(std::string("moduli_from_axes: coinciding half-axes (") + what + ")");
}

ModulusCase tag_from_p2(double p2) {
    if (p2 < 0) return ModulusCase::II;
    if (p2 > 1) return ModulusCase::III;
    return ModulusCase::I;
}

Complex sqrt_signed(double t) {
    return t >= 0 ? Complex(std::sqrt(t), 0) : Complex(0, std::sqrt(-t));
}

// Jet of a quotient x = N / D from the jets of numerator and denominator.
SurfaceJet quotient_jet(double u, double v, const Vec3 N[6], const double D[6]) {
    SurfaceJet J;
    J.u = u;
    J.v = v;
    const Vec3 x = N[0] / D[0];
    const Vec3 xu = (N[1] - x * D[1]) / D[0];
    const Vec3 xv = (N[2] - x * D[2]) / D[0];
    J.x = x;
    J.x_u = xu;
    J.x_v = xv;
    J.x_uu = (N[3] - xu * (2 * D[1]) - x * D[3]) / D[0];
    J.x_uv = (N[4] - xu * D[2] - xv * D[1] - x * D[4]) / D[0];
    J.x_vv = (N[5] - xv * (2 * D[2]) - x * D[5]) / D[0];
    return J;
}

SurfaceJet ellipsoid_jet(double u, double v, double p2, double q2,
                         double A, double B, double C) {
    const Ax U = ax(u, p2), V = ax(v, q2);
    SurfaceJet J;
    J.u = u;
    J.v = v;
    J.x = {A * U.s * V.d, -B * U.c * V.c, C * U.d * V.s};
    J.x_u = {A * U.s1() * V.d, -B * U.c1() * V.c, C * U.d1() * V.s};
    J.x_v = {A * U.s * V.d1(), -B * U.c * V.c1(), C * U.d * V.s1()};
    J.x_uu = {A * U.s2() * V.d, -B * U.c2() * V.c, C * U.d2() * V.s};
    J.x_uv = {A * U.s1() * V.d1(), -B * U.c1() * V.c1(), C * U.d1() * V.s1()};
    J.x_vv = {A * U.s * V.d2(), -B * U.c * V.c2(), C * U.d * V.s2()};
    return J;
}

SurfaceJet hyp2_jet(double u, double v, double p2, double q2,
                    double A, double B, double C, double pole_tol) {
    const Ax U = ax(u, p2), V = ax(v, q2);
    const double D0 = U.d * V.s;
    if (std::abs(D0) < pole_tol)
        throw PoleError("hyp2_point: dn_p u sn_q v vanishes");
    const Vec3 N[6] = {
        {A * U.c * V.c, B * U.s * V.d, C},
        {A * U.c1() * V.c, B * U.s1() * V.d, 0},
        {A * U.c * V.c1(), B * U.s * V.d1(), 0},
        {A * U.c2() * V.c, B * U.s2() * V.d, 0},
        {A * U.c1() * V.c1(), B * U.s1() * V.d1(), 0},
        {A * U.c * V.c2(), B * U.s * V.d2(), 0},
    };
    const double D[6] = {D0, U.d1() * V.s, U.d * V.s1(),
                         U.d2() * V.s, U.d1() * V.s1(), U.d * V.s2()};
    return quotient_jet(u, v, N, D);
}

SurfaceJet hyp1_jet(double u, double v, double q2,
                    double A, double B, double C, double pole_tol) {
    const Ax U = ax(u, q2), V = ax(v, q2);
    const double D0 = U.s * V.d;
    if (std::abs(D0) < pole_tol)
        throw NullDivisor("hyp1_point: sn_q u dn_q v vanishes");
    const Vec3 N[6] = {
        {A * U.c, -B * V.s * U.d, C * V.c},
        {A * U.c1(), -B * V.s * U.d1(), 0},
        {0, -B * V.s1() * U.d, C * V.c1()},
        {A * U.c2(), -B * V.s * U.d2(), 0},
        {0, -B * V.s1() * U.d1(), 0},
        {0, -B * V.s2() * U.d, C * V.c2()},
    };
    const double D[6] = {D0, U.s1() * V.d, U.s * V.d1(),
                         U.s2() * V.d, U.s1() * V.d1(), U.s * V.d2()};
    return quotient_jet(u, v, N, D);
}

constexpr double POINT_POLE_TOL = 1e-9;
constexpr double GRID_MASK_TOL = 1e-6;

}  // namespace

ModuliTriple moduli_from_axes(const QuadricSpec& spec) {
    const double a = spec.a, b = spec.b, c = spec.c;
    if (!(a > 0 && b > 0 && c > 0))
        throw DomainError("moduli_from_axes: half-axes must be positive");
    const double a2 = a * a, b2 = b * b, c2 = c * c;

    ModuliTriple m;
    m.family = spec.family;
    m.ambient = spec.ambient;
    m.scale = b;

    double p2 = 0, q2 = 0, r2 = 0;
    switch (spec.family) {
        case Family::Ellipsoid:
            if (spec.ambient == Ambient::Euclidean) {
                require_distinct(a2, b2, "a = b");
                require_distinct(a2, c2, "a = c");
                require_distinct(b2, c2, "b = c");
                p2 = (a2 - b2) / (a2 - c2);
                q2 = (b2 - c2) / (a2 - c2);
                r2 = (a2 - c2) / b2;
            } else {
                // Minkowski ellipsoid: c -> ic variant of the same quartic
                require_distinct(a2, b2, "a = b");
                p2 = (a2 - b2) / (a2 + c2);
                q2 = (b2 + c2) / (a2 + c2);
                r2 = (a2 + c2) / b2;
            }
            break;
        case Family::Hyperboloid2Sheet:
            if (spec.ambient == Ambient::MinkowskiZ) {
                require_distinct(a2, b2, "a = b");
                require_distinct(a2, c2, "a = c");
                require_distinct(b2, c2, "b = c");
                p2 = (a2 - b2) / (a2 - c2);
                q2 = (b2 - c2) / (a2 - c2);
                r2 = (a2 - c2) / b2;
            } else {
                require_distinct(a2, b2, "a = b");
                p2 = (a2 - b2) / (a2 + c2);
                q2 = (b2 + c2) / (a2 + c2);
                r2 = (a2 + c2) / b2;
            }
            break;
        case Family::Hyperboloid1Sheet:
            if (spec.ambient == Ambient::MinkowskiX) {
                require_distinct(a2, b2, "a = b");
                require_distinct(a2, c2, "a = c");
                require_distinct(b2, c2, "b = c");
                p2 = (a2 - b2) / (a2 - c2);
                q2 = (b2 - c2) / (a2 - c2);
                r2 = (a2 - c2) / b2;
            } else {
                require_distinct(b2, c2, "b = c");
                if (b2 > c2)
                    throw DomainError(
                        "moduli_from_axes: Euclidean 1-sheeted hyperboloid needs b < c "
                        "(exchange the x2 and x3 half-axes)");
                p2 = (a2 + b2) / (a2 + c2);
                q2 = (c2 - b2) / (a2 + c2);
                r2 = (a2 + c2) / b2;
            }
            break;
    }
    m.p = sqrt_signed(p2);
    m.q = sqrt_signed(q2);
    m.r = sqrt_signed(r2);
    m.case_tag = tag_from_p2(p2);
    return m;
}

std::array<double, 3> axes_from_moduli(const ModuliTriple& m) {
    const double rp = m.r2() * m.p2();
    const double rq = m.r2() * m.q2();
    double a2, c2;
    const bool flipped_lift =
        (m.family == Family::Ellipsoid && m.ambient != Ambient::Euclidean) ||
        (m.family == Family::Hyperboloid2Sheet && m.ambient == Ambient::Euclidean);
    if (m.family == Family::Hyperboloid1Sheet && m.ambient == Ambient::Euclidean) {
        a2 = rp - 1.0;
        c2 = rq + 1.0;
    } else if (flipped_lift) {
        a2 = 1.0 + rp;
        c2 = rq - 1.0;
    } else {
        a2 = 1.0 + rp;
        c2 = 1.0 - rq;
    }
    if (!(a2 > 0.0) || !(c2 > 0.0))
        throw DomainError("axes_from_moduli: moduli outside the admissible range");
    return {std::sqrt(a2), 1.0, std::sqrt(c2)};
}

SurfaceJet ellipsoid_point(Complex z, const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    SurfaceJet J = ellipsoid_jet(z.real(), z.imag(), m.p2(), m.q2(),
                                 s * axes[0], s * axes[1], s * axes[2]);
    return J;
}

SurfaceJet hyp2_point(Complex z, const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    return hyp2_jet(z.real(), z.imag(), m.p2(), m.q2(),
                    s * axes[0], s * axes[1], s * axes[2], POINT_POLE_TOL);
}

SurfaceJet hyp1_point(const LorentzNumber& z, const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    return hyp1_jet(z.re, z.im, m.q2(),
                    s * axes[0], s * axes[1], s * axes[2], POINT_POLE_TOL);
}

Vec3 inverse_stereographic(Complex y, LiftTarget target) {
    const double n2 = std::norm(y);
    switch (target) {
        case LiftTarget::Sphere:
            return Vec3{2 * y.real(), 2 * y.imag(), 1 - n2} / (1 + n2);
        case LiftTarget::Hyp2: {
            if (std::abs(1 - n2) < 1e-12)
                throw DomainError("inverse_stereographic: |y| = 1 is excluded");
            return Vec3{2 * y.real(), 2 * y.imag(), 1 + n2} / (1 - n2);
        }
        default:
            throw DomainError("inverse_stereographic: Hyp1 expects a Lorentz number");
    }
}

Vec3 inverse_stereographic(const LorentzNumber& y, LiftTarget target) {
    if (target != LiftTarget::Hyp1)
        throw DomainError("inverse_stereographic: Lorentz argument targets Hyp1");
    const double n2 = sq_modulus(y);
    if (std::abs(1 - n2) < 1e-12)
        throw DomainError("inverse_stereographic: ||y||^2 = 1 is excluded");
    return Vec3{2 * y.re, 2 * y.im, 1 + n2} / (1 - n2);
}

namespace {

BranchClass classify_complex(Complex y) {
    // Quartets are symmetric in both axes and the unit circle, so values are
    // real, purely imaginary, or unitary.  Unitary (no umbilics) wins when a
    // value is both, e.g. y = +-i.
    const double mag = std::abs(y);
    if (std::abs(mag - 1.0) <= 1e-9) return BranchClass::Unitary;
    if (std::abs(y.imag()) <= 1e-9 * mag) return BranchClass::Real;
    if (std::abs(y.real()) <= 1e-9 * mag) return BranchClass::Imaginary;
    return BranchClass::Unitary;
}

void push_complex_quadruple(BranchCensus& out, Complex y2) {
    const Complex y = std::sqrt(y2);
    for (const Complex v : {y, -y}) {
        BranchValue b;
        b.re = v.real();
        b.im = v.imag();
        b.lorentz = false;
        b.cls = classify_complex(v);
        out.values.push_back(b);
    }
}

}  // namespace

BranchCensus umbilic_branch_values(const QuadricSpec& spec) {
    const double a2 = sq(spec.a), b2 = sq(spec.b), c2 = sq(spec.c);
    BranchCensus out;

    if (spec.family == Family::Hyperboloid1Sheet) {
        if (spec.ambient == Ambient::Euclidean) {
            out.no_umbilics = true;  // the Euclidean equation has no branch values
            return out;
        }
        // Branch values exist in L only when (1 +/- q)/p is imaginary,
        // i.e. orderings c > a > b or b > a > c (case II moduli).
        const ModuliTriple m = moduli_from_axes(spec);
        if (m.case_tag != ModulusCase::II) {
            out.no_umbilics = true;
            return out;
        }
        const double q = std::sqrt(m.q2());
        const double pi0 = std::sqrt(-m.p2());  // p = i pi0, so ip = -pi0
        for (const double s : {1.0, -1.0}) {
            for (const double t : {1.0, -1.0}) {
                const LorentzNumber vals[4] = {
                    {-s * (q + t) / pi0, 0},            // +/-(q +/- 1)/(ip)
                    {-s * q / pi0, -s * t / pi0},       // +/-(q +/- j)/(ip)
                    {0, -s * (q + t) / pi0},            // +/- j(q +/- 1)/(ip)
                    {-s * t / pi0, -s * q / pi0},       // +/- j(q +/- j)/(ip)
                };
                for (const auto& w : vals) {
                    BranchValue b;
                    b.re = w.re;
                    b.im = w.im;
                    b.lorentz = true;
                    const double n2 = sq_modulus(w);
                    if (std::abs(n2 - 1.0) <= 1e-9)
                        b.cls = BranchClass::Excluded;  // does not project
                    else if (w.im == 0)
                        b.cls = BranchClass::Real;
                    else if (w.re == 0)
                        b.cls = BranchClass::Imaginary;
                    else
                        b.cls = BranchClass::Unitary;   // ||y||^2 = -1 quartet
                    out.values.push_back(b);
                }
            }
        }
        return out;
    }

    // Complex-variable families: four values, a symmetric quartet.
    Complex sa, sb;
    const bool euclidean_radicals =
        (spec.family == Family::Ellipsoid && spec.ambient == Ambient::Euclidean) ||
        (spec.family == Family::Hyperboloid2Sheet && spec.ambient == Ambient::MinkowskiZ);
    if (euclidean_radicals) {
        sa = sqrt_signed(a2 - c2);
        sb = sqrt_signed(b2 - c2);
    } else {
        sa = sqrt_signed(a2 + c2);
        sb = sqrt_signed(b2 + c2);
    }
    const double denom = a2 - b2;
    const double sgn = (spec.family == Family::Ellipsoid) ? 1.0 : -1.0;
    push_complex_quadruple(out, sgn * (sa + sb) * (sa + sb) / denom);
    push_complex_quadruple(out, sgn * (sa - sb) * (sa - sb) / denom);
    bool all_unitary = true;
    for (const auto& b : out.values)
        all_unitary = all_unitary && (b.cls == BranchClass::Unitary);
    out.no_umbilics = all_unitary;
    return out;
}

CausalType causal_type(const SurfaceJet& jet, Ambient ambient) {
    const double E = metric_dot(jet.x_u, jet.x_u, ambient);
    const double F = metric_dot(jet.x_u, jet.x_v, ambient);
    const double G = metric_dot(jet.x_v, jet.x_v, ambient);
    const double disc = E * G - F * F;
    const double eps = 1e-9 * (E * E + F * F + G * G);
    if (disc > eps) return CausalType::Spacelike;
    if (disc < -eps) return CausalType::Timelike;
    return CausalType::Degenerate;
}

std::pair<Vec3, Vec3> revolution_pair(const RevolutionProfile& prof, double u, double v) {
    const double r = prof.r(u), h = prof.h(u);
    if (std::abs(r) < 1e-12) throw DomainError("revolution_pair: profile radius vanishes");
    const double cv = std::cos(v), sv = std::sin(v);
    const Vec3 x{r * cv, r * sv, h};
    const double height = integrate_adaptive(
        [&](double t) { return prof.dh(t) / sq(prof.r(t)); }, prof.u0, u, 1e-13);
    const Vec3 xd{-cv / r, -sv / r, height};
    return {x, xd};
}

namespace {

SurfaceJet family_jet(const ModuliTriple& m, double u, double v,
                      double A, double B, double C, double pole_tol) {
    switch (m.family) {
        case Family::Ellipsoid:
            return ellipsoid_jet(u, v, m.p2(), m.q2(), A, B, C);
        case Family::Hyperboloid2Sheet:
            return hyp2_jet(u, v, m.p2(), m.q2(), A, B, C, pole_tol);
        default:
            return hyp1_jet(u, v, m.q2(), A, B, C, pole_tol);
    }
}

}  // namespace

std::function<Vec3(double, double)> point_sampler(const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    return [m, axes, s](double u, double v) {
        return family_jet(m, u, v, s * axes[0], s * axes[1], s * axes[2],
                          POINT_POLE_TOL).x;
    };
}

std::function<SurfaceJet(double, double)> jet_sampler(const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    return [m, axes, s](double u, double v) {
        return family_jet(m, u, v, s * axes[0], s * axes[1], s * axes[2],
                          POINT_POLE_TOL);
    };
}

std::function<SurfaceJet(double, double)> unit_lift_sampler(const ModuliTriple& m) {
    return [m](double u, double v) {
        return family_jet(m, u, v, 1.0, 1.0, 1.0, POINT_POLE_TOL);
    };
}

SurfaceGrid build_primal_grid(const ModuliTriple& m, const Lattice& lat) {
    SurfaceGrid g;
    g.lattice = lat;
    g.ambient = m.ambient;
    g.jets.resize(lat.size());
    g.mask.assign(lat.size(), NodeState::Valid);
    g.causal.assign(lat.size(), CausalType::NotApplicable);

    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            const std::size_t idx = g.index(i, j);
            try {
                SurfaceJet jet = family_jet(m, lat.u(i), lat.v(j),
                                            s * axes[0], s * axes[1], s * axes[2],
                                            GRID_MASK_TOL);
                if (!finite(jet.x) || !finite(jet.x_u) || !finite(jet.x_v)) {
                    g.mask[idx] = NodeState::Pole;
                    continue;
                }
                const double tangent_scale = dot(jet.x_u, jet.x_u) + dot(jet.x_v, jet.x_v);
                if (norm(cross(jet.x_u, jet.x_v)) < 1e-10 * tangent_scale) {
                    g.mask[idx] = NodeState::Degenerate;
                    continue;
                }
                g.jets[idx] = jet;
                g.causal[idx] = causal_type(jet, m.ambient);
            } catch (const Error&) {
                g.mask[idx] = NodeState::Pole;
            }
        }
    }
    return g;
}

std::pair<double, double> natural_periods(const ModuliTriple& m) {
    if (m.family == Family::Hyperboloid1Sheet)
        return {period_u(m.q2()), period_u(m.q2())};
    return {period_u(m.p2()), period_u(m.q2())};
}

ParamWindow default_window(const ModuliTriple& m) {
    const auto [Tu, Tv] = natural_periods(m);
    switch (m.family) {
        case Family::Ellipsoid:
            return {-Tu / 2, Tu / 2, -Tv / 2, Tv / 2};
        case Family::Hyperboloid2Sheet: {
            // poles at sn_q v = 0; case III additionally at dn_p u = 0
            const double mv = 0.08 * Tv / 2;
            if (m.case_tag == ModulusCase::III) {
                const double mu = 0.08 * Tu / 4;
                return {-Tu / 4 + mu, Tu / 4 - mu, mv, Tv / 2 - mv};
            }
            return {-Tu / 4, Tu / 4, mv, Tv / 2 - mv};
        }
        default: {
            // poles at sn_q u = 0; case II additionally at dn_q v = 0; the
            // dual branch points sit where u +- v hits Tu/4
            const double mu = 0.10 * Tu / 4;
            const double vmax = 0.12 * Tu / 4;
            return {mu, Tu / 4 - mu - vmax, -vmax, vmax};
        }
    }
}

}  // namespace qdual
