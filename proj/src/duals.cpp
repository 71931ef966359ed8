#include "qdual/duals.hpp"

#include <cmath>

#include "qdual/lorentz_elliptic.hpp"
#include "qdual/numerics.hpp"

namespace qdual {

namespace {

const Complex I(0, 1);

// Principal branches written through one complex log each, so that the
// argument-at-infinity limits stay finite (e.g. artanh(1/W) at W = 0).
Complex catanh(Complex w) { return 0.5 * std::log((1.0 + w) / (1.0 - w)); }
Complex catanh_inv(Complex W) { return 0.5 * std::log((W + 1.0) / (W - 1.0)); }
Complex catan(Complex w) { return std::atan(w); }
Complex catan_inv(Complex W) { return 0.5 * I * std::log((W - I) / (W + I)); }

void check_finite(Complex f, const char* where) {
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
        throw PoleError(std::string(where) + ": closed form at a singularity");
}

// Components of the ellipsoid-family dual with explicit axes.  The third
// component takes the sign that pairs the tower with the inverse
// stereographic lift of y = sn - i cn (the tower itself is symmetric under
// x3 -> -x3, so the implicit representation is unaffected).
Vec3 ellipsoid_dual_core(Complex z, double p2, double A, double B, double C) {
    if (!(p2 > 0.0 && p2 < 1.0))
        throw DomainError("ellipsoid dual: requires a tri-axial case I modulus");
    const double p = std::sqrt(p2), q = std::sqrt(1.0 - p2);
    const JacobiQuadruple J = jacobi_complex(z, p2);
    if (std::abs(J.cn) < 1e-12)
        throw PoleError("ellipsoid dual: cn vanishes");
    const Complex f1 = catanh_inv(p * J.sn);
    const Complex f2 = catan(q / (p * J.cn));
    const Complex f3 = catanh((q / I) * J.sn / J.cn);
    check_finite(f1, "ellipsoid dual");
    check_finite(f2, "ellipsoid dual");
    check_finite(f3, "ellipsoid dual");
    return {2 * A / p * f1.real(), 2 * B / (p * q) * f2.real(), -2 * C / q * f3.real()};
}

}  // namespace

Vec3 scherk_tower(Complex z, double p, double q) {
    if (std::abs(p * p + q * q - 1.0) > 1e-12)
        throw DomainError("scherk_tower: p^2 + q^2 must be 1");
    return ellipsoid_dual_core(z, p * p, 1.0, 1.0, 1.0);
}

Vec3 ellipsoid_dual(Complex z, const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    return ellipsoid_dual_core(z, m.p2(), s * axes[0], s * axes[1], s * axes[2]);
}

Vec3 hyp2_dual(Complex z, const ModuliTriple& m) {
    if (m.family != Family::Hyperboloid2Sheet)
        throw CaseMismatch("hyp2_dual: moduli belong to another family");
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    const double A = s * axes[0], B = s * axes[1], C = s * axes[2];
    const Complex p = m.p, q = m.q;
    const JacobiQuadruple J = jacobi_complex(z, m.p2());
    if (std::abs(J.cn) < 1e-12) throw PoleError("hyp2_dual: cn vanishes");
    if (std::abs(J.sn) < 1e-12) throw PoleError("hyp2_dual: sn vanishes");
    const Complex f1 = catan_inv(I * p * J.sn);
    const Complex f2 = catanh(q / (I * p * J.cn));
    const Complex f3 = catanh((q / I) * J.sn / J.cn);
    check_finite(f1, "hyp2_dual");
    check_finite(f2, "hyp2_dual");
    check_finite(f3, "hyp2_dual");
    return {(2.0 * A / p * f1).real(), (2.0 * B / (p * q) * f2).real(),
            (2.0 * C / q * f3).real()};
}

namespace {

double artanh_ext(double t) {
    if (!std::isfinite(t)) return 0.0;  // arcoth limit at infinity
    return safe_artanh(t);
}

}  // namespace

Vec3 hyp1_dual(const LorentzNumber& z, const ModuliTriple& m) {
    if (m.family != Family::Hyperboloid1Sheet)
        throw CaseMismatch("hyp1_dual: moduli belong to another family");
    if (m.case_tag == ModulusCase::III)
        throw CaseMismatch(
            "hyp1_dual: case III is the x2/x3 exchange of case I; swap the half-axes");
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    const double A = s * axes[0], B = s * axes[1], C = s * axes[2];
    const double p2 = m.p2(), q2 = m.q2();
    const double q = std::sqrt(q2);

    // Null-coordinate evaluations of the modulus-q Jacobi functions carry the
    // whole Lorentz-analytic calculus.
    const JacobiTriple jp = jacobi_sncndn(null_plus(z), q2);
    const JacobiTriple jm = jacobi_sncndn(null_minus(z), q2);

    // Components are aligned with hyp1_point's lift by the rotation
    // (x1, x2, x3) -> (-x1, x2, -x3), an isometry of the hyperboloid that
    // leaves the (even) implicit representation unchanged.
    if (p2 > 0.0) {
        const double p = std::sqrt(p2);
        const double f1p = std::atan(jp.cn / (p * jp.sn));
        const double f1m = std::atan(jm.cn / (p * jm.sn));
        const double f2p = std::atan(q * jp.cn / p);
        const double f2m = std::atan(q * jm.cn / p);
        const double f3p = safe_artanh(q * jp.sn);
        const double f3m = safe_artanh(q * jm.sn);
        return {(2 * A / p) * 0.5 * (f1p + f1m),
                -(2 * B / (p * q)) * 0.5 * (f2p - f2m),
                -(2 * C / q) * 0.5 * (f3p + f3m)};
    }

    // Case II, p = i pi0: arctan turns into artanh and the formulas become
    // purely para-complex.
    const double pi0 = std::sqrt(-p2);
    const double f1p = artanh_ext(jp.cn / (pi0 * jp.sn));
    const double f1m = artanh_ext(jm.cn / (pi0 * jm.sn));
    const double f2p = artanh_ext(q * jp.cn / pi0);
    const double f2m = artanh_ext(q * jm.cn / pi0);
    const double f3p = safe_artanh(q * jp.sn);
    const double f3m = safe_artanh(q * jm.sn);
    return {-(2 * A / pi0) * 0.5 * (f1p + f1m),
            (2 * B / (pi0 * q)) * 0.5 * (f2p - f2m),
            -(2 * C / q) * 0.5 * (f3p + f3m)};
}

std::function<Vec3(double, double)> dual_point_sampler(const ModuliTriple& m) {
    switch (m.family) {
        case Family::Ellipsoid:
            return [m](double u, double v) { return ellipsoid_dual(Complex(u, v), m); };
        case Family::Hyperboloid2Sheet:
            return [m](double u, double v) { return hyp2_dual(Complex(u, v), m); };
        default:
            return [m](double u, double v) { return hyp1_dual(LorentzNumber(u, v), m); };
    }
}

std::array<double, 3> dual_monodromy_periods(const ModuliTriple& m) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    const double A = s * axes[0], B = s * axes[1], C = s * axes[2];
    const double PI = 3.14159265358979323846;
    switch (m.family) {
        case Family::Ellipsoid: {
            const double p = std::sqrt(m.p2()), q = std::sqrt(m.q2());
            return {0.0, PI * 2 * B / (p * q), 0.0};
        }
        case Family::Hyperboloid2Sheet: {
            switch (m.case_tag) {
                case ModulusCase::I: {
                    const double p = std::sqrt(m.p2());
                    return {PI * 2 * A / p, 0.0, 0.0};
                }
                case ModulusCase::II: {
                    const double beta = std::sqrt(-m.p2()), q = std::sqrt(m.q2());
                    return {0.0, PI * 2 * B / (beta * q), 0.0};
                }
                default: {
                    const double p = std::sqrt(m.p2()), g = std::sqrt(-m.q2());
                    return {PI * 2 * A / p, PI * 2 * B / (p * g), PI * 2 * C / g};
                }
            }
        }
        default: {
            if (m.p2() > 0) {
                const double p = std::sqrt(m.p2()), q = std::sqrt(m.q2());
                return {PI * A / p, PI * B / (p * q), 0.0};
            }
            return {0.0, 0.0, 0.0};
        }
    }
}

std::array<Complex, 3> weierstrass_antiderivatives(Complex y, double p2, Family family) {
    const Complex p = p2 >= 0 ? Complex(std::sqrt(p2), 0) : Complex(0, std::sqrt(-p2));
    const double q2 = 1.0 - p2;
    const Complex q = q2 >= 0 ? Complex(std::sqrt(q2), 0) : Complex(0, std::sqrt(-q2));
    const Complex y2 = y * y;
    std::array<Complex, 3> r;
    switch (family) {
        case Family::Ellipsoid:
            r[0] = 2.0 / p * catanh(2.0 * y / (p * (1.0 + y2)));
            r[1] = 2.0 / (p * q) * catan(2.0 * I * q * y / (p * (1.0 - y2)));
            r[2] = 2.0 / q * catanh(q * (1.0 + y2) / (1.0 - y2));
            break;
        case Family::Hyperboloid2Sheet:
            r[0] = -2.0 / p * catan(2.0 * y / (p * (1.0 - y2)));
            r[1] = 2.0 / (p * q) * catanh(2.0 * q * y / (I * p * (1.0 + y2)));
            r[2] = 2.0 / q * catanh(q * (1.0 - y2) / (1.0 + y2));
            break;
        default:
            r[0] = 2.0 / p * catan(2.0 * y / (p * (1.0 - y2)));
            r[1] = 2.0 / (p * q) * catan(2.0 * q * y / (p * (1.0 + y2)));
            r[2] = -2.0 / q * catanh(q * (1.0 - y2) / (1.0 + y2));
            break;
    }
    for (const auto& c : r) check_finite(c, "weierstrass_antiderivatives");
    return r;
}

double implicit_residual(Family family, const Vec3& X, double p2, double q2) {
    switch (family) {
        case Family::Ellipsoid: {
            if (!(p2 > 0 && p2 < 1))
                throw CaseMismatch("implicit_residual: ellipsoid needs p in (0,1)");
            const double p = std::sqrt(p2), q = std::sqrt(q2);
            return q2 * std::cosh(p * X.x) + std::cos(p * q * X.y) - p2 * std::cosh(q * X.z);
        }
        case Family::Hyperboloid2Sheet: {
            if (p2 > 0 && p2 < 1) {
                const double p = std::sqrt(p2), q = std::sqrt(q2);
                return q2 * std::cos(p * X.x) + std::cosh(p * q * X.y) -
                       p2 * std::cosh(q * X.z);
            }
            if (p2 > 1) {  // q imaginary: all three terms trigonometric
                const double p = std::sqrt(p2), g = std::sqrt(-q2);
                return q2 * std::cos(p * X.x) + std::cos(p * g * X.y) -
                       p2 * std::cos(g * X.z);
            }
            throw CaseMismatch(
                "implicit_residual: hyp2 case II follows from case I by the x1/x2 exchange");
        }
        default: {
            if (p2 > 0 && p2 < 1) {
                const double p = std::sqrt(p2), q = std::sqrt(q2);
                return q2 * std::cos(p * X.x) + std::cos(p * q * X.y) -
                       p2 * std::cosh(q * X.z);
            }
            if (p2 < 0) {
                // Middle term with a minus: with every cosh >= 1 and q > 1
                // the all-plus combination is bounded away from zero; the
                // identity the coordinates satisfy carries the sign below.
                const double pi0 = std::sqrt(-p2), q = std::sqrt(q2);
                return q2 * std::cosh(pi0 * X.x) - std::cosh(pi0 * q * X.y) +
                       p2 * std::cosh(q * X.z);
            }
            throw CaseMismatch("implicit_residual: hyp1 case III exchanges the x2/x3 axes");
        }
    }
}

Vec3 normalize_dual_point(const ModuliTriple& m, const Vec3& x) {
    const auto axes = axes_from_moduli(m);
    const double s = m.scale;
    return {x.x / (s * axes[0]), x.y / (s * axes[1]), x.z / (s * axes[2])};
}

DualSurfaceSpec make_dual_spec(const ModuliTriple& m, double u0, double v0) {
    DualSurfaceSpec spec;
    spec.moduli = m;
    spec.u0 = u0;
    spec.v0 = v0;
    spec.base_value = dual_point_sampler(m)(u0, v0);
    spec.mode = (m.family == Family::Hyperboloid1Sheet) ? PairMode::Timelike
                                                        : PairMode::Spacelike;
    return spec;
}

void apply_gauge(SurfaceGrid& grid, const DualSurfaceSpec& spec) {
    // find the lattice node closest to the base point
    const Lattice& lat = grid.lattice;
    const int i0 = std::max(0, std::min(lat.nu - 1,
                                        int(std::lround((spec.u0 - lat.u0) / lat.du))));
    const int j0 = std::max(0, std::min(lat.nv - 1,
                                        int(std::lround((spec.v0 - lat.v0) / lat.dv))));
    if (!grid.valid(i0, j0)) throw DomainError("apply_gauge: base node is masked");
    const Vec3 shift = spec.base_value - grid.at(i0, j0).x;
    for (std::size_t k = 0; k < grid.jets.size(); ++k)
        if (grid.mask[k] == NodeState::Valid) grid.jets[k].x += shift;
}

ChristoffelResult christoffel_numeric(
    const std::function<SurfaceJet(double, double)>& unscaled,
    const std::function<SurfaceJet(double, double)>& scaled,
    const Lattice& lat, Ambient metric, PairMode mode) {
    // Slot signs against the signed metric squares: (+, -) in the spacelike
    // case, (-, -) in the timelike case (the timelike representation carries
    // a global minus; with E = -G both slots then scale by +2/|.|^2).
    const double sign_u = (mode == PairMode::Spacelike) ? 1.0 : -1.0;
    const double sign_v = -1.0;

    const auto Fu = [&](double u, double v) -> Vec3 {
        const SurfaceJet J0 = unscaled(u, v);
        const SurfaceJet Js = scaled(u, v);
        const double E0 = metric_dot(J0.x_u, J0.x_u, metric);
        if (std::abs(E0) < 1e-10 * dot(J0.x_u, J0.x_u))
            throw SingularStep("christoffel_numeric: (x_u, x_u) vanishes");
        return Js.x_u * (sign_u * 2.0 / E0);
    };
    const auto Fv = [&](double u, double v) -> Vec3 {
        const SurfaceJet J0 = unscaled(u, v);
        const SurfaceJet Js = scaled(u, v);
        const double G0 = metric_dot(J0.x_v, J0.x_v, metric);
        if (std::abs(G0) < 1e-10 * dot(J0.x_v, J0.x_v))
            throw SingularStep("christoffel_numeric: (x_v, x_v) vanishes");
        return Js.x_v * (sign_v * 2.0 / G0);
    };

    const auto integrate_u = [&](double ua, double ub, double v, int panels) {
        Vec3 acc;
        for (int k = 0; k < panels; ++k) {
            const double t0 = ua + (ub - ua) * k / panels;
            const double t1 = ua + (ub - ua) * (k + 1) / panels;
            auto f = [&](double t) { return Fu(t, v); };
            acc = gauss4(f, t0, t1, acc);
        }
        return acc;
    };
    const auto integrate_v = [&](double va, double vb, double u, int panels) {
        Vec3 acc;
        for (int k = 0; k < panels; ++k) {
            const double t0 = va + (vb - va) * k / panels;
            const double t1 = va + (vb - va) * (k + 1) / panels;
            auto f = [&](double t) { return Fv(u, t); };
            acc = gauss4(f, t0, t1, acc);
        }
        return acc;
    };

    const auto run = [&](int panels, std::vector<Vec3>& pos, std::vector<bool>& ok) {
        pos.assign(lat.size(), Vec3{});
        ok.assign(lat.size(), false);
        ok[0] = true;
        for (int i = 1; i < lat.nu; ++i) {
            const std::size_t idx = std::size_t(i);
            if (!ok[idx - 1]) break;
            try {
                pos[idx] = pos[idx - 1] + integrate_u(lat.u(i - 1), lat.u(i), lat.v0, panels);
                ok[idx] = true;
            } catch (const Error&) {
                break;
            }
        }
        for (int i = 0; i < lat.nu; ++i) {
            for (int j = 1; j < lat.nv; ++j) {
                const std::size_t idx = std::size_t(j) * lat.nu + i;
                const std::size_t below = idx - lat.nu;
                if (!ok[below]) break;
                try {
                    pos[idx] = pos[below] + integrate_v(lat.v(j - 1), lat.v(j), lat.u(i), panels);
                    ok[idx] = true;
                } catch (const Error&) {
                    break;
                }
            }
        }
    };

    ChristoffelResult res;
    std::vector<Vec3> pos, pos2;
    std::vector<bool> ok, ok2;
    run(1, pos, ok);
    run(2, pos2, ok2);

    double scale = 0;
    for (std::size_t k = 0; k < pos.size(); ++k)
        if (ok[k]) scale = std::max(scale, norm(pos[k]));
    if (scale == 0) scale = 1;

    for (std::size_t k = 0; k < pos.size(); ++k)
        if (ok[k] && ok2[k])
            res.refinement_delta = std::max(res.refinement_delta, norm(pos[k] - pos2[k]));

    // Loop closure over a spread of sub-rectangles.
    const int di = std::max(1, lat.nu / 5), dj = std::max(1, lat.nv / 5);
    for (int i0 = 0; i0 + di < lat.nu; i0 += di) {
        for (int j0 = 0; j0 + dj < lat.nv; j0 += dj) {
            const int i1 = i0 + di, j1 = j0 + dj;
            try {
                const Vec3 loop = integrate_u(lat.u(i0), lat.u(i1), lat.v(j0), 4) +
                                  integrate_v(lat.v(j0), lat.v(j1), lat.u(i1), 4) -
                                  integrate_u(lat.u(i0), lat.u(i1), lat.v(j1), 4) -
                                  integrate_v(lat.v(j0), lat.v(j1), lat.u(i0), 4);
                res.closure_residual = std::max(res.closure_residual, norm(loop));
            } catch (const Error&) {
                continue;
            }
        }
    }

    res.flagged = res.closure_residual > 1e-7 * scale || res.refinement_delta > 1e-7 * scale;

    SurfaceGrid g;
    g.lattice = lat;
    g.ambient = metric;
    g.jets.resize(lat.size());
    g.mask.assign(lat.size(), NodeState::Valid);
    g.causal.assign(lat.size(), CausalType::NotApplicable);
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            const std::size_t idx = g.index(i, j);
            if (!ok2[idx]) {
                g.mask[idx] = NodeState::Pole;
                continue;
            }
            SurfaceJet& J = g.jets[idx];
            J.u = lat.u(i);
            J.v = lat.v(j);
            J.x = pos2[idx];
            try {
                J.x_u = Fu(J.u, J.v);
                J.x_v = Fv(J.u, J.v);
            } catch (const Error&) {
                g.mask[idx] = NodeState::Pole;
                continue;
            }
            g.causal[idx] = causal_type(J, metric);
        }
    }
    res.dual = std::move(g);
    return res;
}

SurfaceGrid build_dual_grid(const ModuliTriple& m, const Lattice& lat) {
    const auto sampler = dual_point_sampler(m);
    const auto periods = dual_monodromy_periods(m);

    SurfaceGrid g;
    g.lattice = lat;
    g.ambient = m.ambient;
    g.jets.resize(lat.size());
    g.mask.assign(lat.size(), NodeState::Valid);
    g.causal.assign(lat.size(), CausalType::NotApplicable);

    std::vector<Vec3> raw(lat.size());
    for (int j = 0; j < lat.nv; ++j)
        for (int i = 0; i < lat.nu; ++i) {
            const std::size_t idx = g.index(i, j);
            try {
                raw[idx] = sampler(lat.u(i), lat.v(j));
                if (!finite(raw[idx])) g.mask[idx] = NodeState::Pole;
            } catch (const Error&) {
                g.mask[idx] = NodeState::Pole;
            }
        }

    // Branch unwrapping: first row left to right, then columns downward.
    const auto unwrap_node = [&](std::size_t idx, std::size_t anchor) {
        for (int k = 0; k < 3; ++k)
            if (periods[k] > 0)
                raw[idx][k] = unwrap_to(raw[idx][k], raw[anchor][k], periods[k]);
    };
    for (int i = 1; i < lat.nu; ++i)
        if (g.mask[g.index(i, 0)] == NodeState::Valid && g.mask[g.index(i - 1, 0)] == NodeState::Valid)
            unwrap_node(g.index(i, 0), g.index(i - 1, 0));
    for (int i = 0; i < lat.nu; ++i)
        for (int j = 1; j < lat.nv; ++j)
            if (g.mask[g.index(i, j)] == NodeState::Valid && g.mask[g.index(i, j - 1)] == NodeState::Valid)
                unwrap_node(g.index(i, j), g.index(i, j - 1));

    // Jets by central differences with stencil values unwrapped to the node.
    const double h = 1e-5;
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            const std::size_t idx = g.index(i, j);
            if (g.mask[idx] != NodeState::Valid) continue;
            SurfaceJet& J = g.jets[idx];
            J.u = lat.u(i);
            J.v = lat.v(j);
            J.x = raw[idx];
            J.mode = JetMode::FiniteDifference;
            J.fd_step = h;
            try {
                const auto eval = [&](double uu, double vv) {
                    Vec3 p = sampler(uu, vv);
                    for (int k = 0; k < 3; ++k)
                        if (periods[k] > 0) p[k] = unwrap_to(p[k], J.x[k], periods[k]);
                    return p;
                };
                J.x_u = (eval(J.u + h, J.v) - eval(J.u - h, J.v)) / (2 * h);
                J.x_v = (eval(J.u, J.v + h) - eval(J.u, J.v - h)) / (2 * h);
                const Vec3 pp = eval(J.u + h, J.v + h), pm = eval(J.u + h, J.v - h);
                const Vec3 mp = eval(J.u - h, J.v + h), mm = eval(J.u - h, J.v - h);
                J.x_uv = (pp - pm - mp + mm) / (4 * h * h);
                J.x_uu = (eval(J.u + h, J.v) - J.x * 2.0 + eval(J.u - h, J.v)) / (h * h);
                J.x_vv = (eval(J.u, J.v + h) - J.x * 2.0 + eval(J.u, J.v - h)) / (h * h);
                if (!finite(J.x_u) || !finite(J.x_v)) {
                    g.mask[idx] = NodeState::Pole;
                    continue;
                }
                g.causal[idx] = causal_type(J, m.ambient);
            } catch (const Error&) {
                g.mask[idx] = NodeState::Pole;
            }
        }
    }
    return g;
}

}  // namespace qdual
