#include "qdual/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "qdual/duals.hpp"
#include "qdual/elliptic.hpp"
#include "qdual/lorentz_elliptic.hpp"
#include "qdual/numerics.hpp"
#include "qdual/quadrics.hpp"
#include "qdual/reinbek.hpp"

namespace qdual {

namespace {

const double PI = 3.14159265358979323846;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
};

// ---------------------------------------------------------------- fixtures

QuadricSpec fixture(const std::string& id) {
    if (id == "ellipsoid-e")
        return {Family::Ellipsoid, std::sqrt(1.5), 1.0, std::sqrt(0.5), Ambient::Euclidean};
    if (id == "ellipsoid-m")
        return {Family::Ellipsoid, 1.2, 1.0, 2.0, Ambient::MinkowskiZ};
    if (id == "hyp2-m-i")
        return {Family::Hyperboloid2Sheet, 1.5, 1.2, 0.9, Ambient::MinkowskiZ};
    if (id == "hyp2-m-ii")
        return {Family::Hyperboloid2Sheet, 1.0, 0.8, 1.5, Ambient::MinkowskiZ};
    if (id == "hyp2-m-iii")
        return {Family::Hyperboloid2Sheet, 0.8, 1.6, 1.2, Ambient::MinkowskiZ};
    if (id == "hyp2-e")
        return {Family::Hyperboloid2Sheet, 1.5, 1.2, 0.9, Ambient::Euclidean};
    if (id == "hyp1-m-i")
        return {Family::Hyperboloid1Sheet, 1.5, 1.2, 0.9, Ambient::MinkowskiX};
    if (id == "hyp1-m-ii")
        return {Family::Hyperboloid1Sheet, 1.0, 0.8, 1.5, Ambient::MinkowskiX};
    if (id == "hyp1-e")
        return {Family::Hyperboloid1Sheet, 1.0, 0.8, 1.2, Ambient::Euclidean};
    throw DomainError("unknown fixture " + id);
}

using Window = ParamWindow;

Window canonical_window(const ModuliTriple& m) { return default_window(m); }

Lattice window_lattice(const Window& w, int nu, int nv) {
    return Lattice(w.u0, w.u1, nu, w.v0, w.v1, nv);
}

const ModuliTriple& fixture_moduli(const std::string& id) {
    static std::map<std::string, ModuliTriple> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, moduli_from_axes(fixture(id))).first;
    return it->second;
}

const SurfaceGrid& fixture_primal(const std::string& id, int n = 64) {
    static std::map<std::string, SurfaceGrid> cache;
    const std::string key = id + ":" + std::to_string(n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const ModuliTriple& m = fixture_moduli(id);
        it = cache.emplace(key, build_primal_grid(m, window_lattice(canonical_window(m), n, n))).first;
    }
    return it->second;
}

const SurfaceGrid& fixture_dual(const std::string& id, int n = 32) {
    static std::map<std::string, SurfaceGrid> cache;
    const std::string key = id + ":" + std::to_string(n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const ModuliTriple& m = fixture_moduli(id);
        it = cache.emplace(key, build_dual_grid(m, window_lattice(canonical_window(m), n, n))).first;
    }
    return it->second;
}

// quadric membership residual of a point, on homothety-scaled axes
double membership_residual(const ModuliTriple& m, const Vec3& x) {
    const auto axes = axes_from_moduli(m);
    const double A = m.scale * axes[0], B = m.scale * axes[1], C = m.scale * axes[2];
    const double X = x.x / A, Y = x.y / B, Z = x.z / C;
    switch (m.family) {
        case Family::Ellipsoid:
            return X * X + Y * Y + Z * Z - 1.0;
        case Family::Hyperboloid2Sheet:
            return X * X + Y * Y - Z * Z + 1.0;
        default:
            return 1.0 + X * X - Y * Y - Z * Z;
    }
}

// ------------------------------------------------------------ check kinds

using Maker = CheckReport (*)(const CheckContext&);

struct Entry {
    std::string name;
    Maker make;
};

std::vector<Entry>& registry() {
    static std::vector<Entry> entries;
    return entries;
}

// ---------------------------------------------------------------- elliptic

CheckReport chk_jacobi_pythagorean(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "sn^2 + cn^2 = 1 and dn^2 + p^2 sn^2 = 1";
    r.tolerance = 1e-12;
    Rng rng(ctx.seed);
    for (double p : {0.3, 1.0 / std::sqrt(2.0), 0.95}) {
        const double K = complete_K(p);
        for (int k = 0; k < 1000; ++k) {
            const double u = rng.uniform(-2 * K, 2 * K);
            const JacobiReal j = jacobi_real(u, p);
            r.record(std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
            r.record(std::abs(j.dn * j.dn + p * p * j.sn * j.sn - 1.0));
        }
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_amplitude_oracle(const CheckContext&) {
    CheckReport r;
    r.anchor = "am' = dn against direct integration of the amplitude equation";
    r.tolerance = 1e-8;
    for (double p : {0.3, 1.0 / std::sqrt(2.0), 0.95}) {
        const double K = complete_K(p);
        // classic RK4 on am' = sqrt(1 - p^2 sin^2 am), independent of the AGM
        const auto rhs = [p](double phi) {
            const double s = p * std::sin(phi);
            return std::sqrt(1.0 - s * s);
        };
        const int steps = 20000;
        double phi = 0.0, u = 0.0;
        const double h = 2.0 * K / steps;
        for (int i = 0; i < steps; ++i) {
            if (i % 250 == 0 && i > 0)
                r.record(std::abs(jacobi_real(u, p).am - phi));
            const double k1 = rhs(phi), k2 = rhs(phi + 0.5 * h * k1);
            const double k3 = rhs(phi + 0.5 * h * k2), k4 = rhs(phi + h * k3);
            phi += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
            u += h;
        }
        r.record(std::abs(jacobi_real(2 * K, p).am - phi));
    }
    r.finish();
    return r;
}

CheckReport chk_complete_elliptic_integral(const CheckContext&) {
    CheckReport r;
    r.anchor = "K(p) by AGM against adaptive quadrature of the defining integral";
    r.tolerance = 1e-12;
    for (double p : {0.05, 0.3, 0.5, 1.0 / std::sqrt(2.0), 0.8, 0.95}) {
        const double quad = integrate_adaptive(
            [p](double th) {
                const double s = p * std::sin(th);
                return 1.0 / std::sqrt(1.0 - s * s);
            },
            0.0, PI / 2, 1e-15);
        r.record(std::abs(complete_K(p) - quad) / quad);
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_imaginary_argument(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "sn_p(iz) = i sn_q z/cn_q z, cn_p(iz) = 1/cn_q z, dn_p(iz) = dn_q z/cn_q z";
    r.tolerance = 1e-10;
    Rng rng(ctx.seed + 1);
    const double p = 0.6, q = 0.8, Kq = complete_K(q);
    const Complex I(0, 1);
    for (int k = 0; k < 100; ++k) {
        const double v = rng.uniform(-0.9 * Kq, 0.9 * Kq);
        const JacobiQuadruple J = jacobi_complex(Complex(0, v), p * p);
        const JacobiReal j = jacobi_real(v, q);
        r.record(std::abs(J.sn - I * j.sn / j.cn) / (1 + std::abs(J.sn)));
        r.record(std::abs(J.cn - Complex(1.0 / j.cn)) / (1 + std::abs(J.cn)));
        r.record(std::abs(J.dn - Complex(j.dn / j.cn)) / (1 + std::abs(J.dn)));
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_double_periodicity(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "period lattice spanned by 4K_p and 4i K_q";
    r.tolerance = 1e-10;
    Rng rng(ctx.seed + 2);
    const double p = 0.6, q = 0.8;
    const double Kp = complete_K(p), Kq = complete_K(q);
    for (int k = 0; k < 100; ++k) {
        const Complex z(rng.uniform(-Kp, Kp), rng.uniform(-0.7 * Kq, 0.7 * Kq));
        const JacobiQuadruple a = jacobi_complex(z, p * p);
        const JacobiQuadruple b = jacobi_complex(z + Complex(4 * Kp, 0), p * p);
        const JacobiQuadruple c = jacobi_complex(z + Complex(0, 4 * Kq), p * p);
        for (const JacobiQuadruple* w : {&b, &c}) {
            r.record(std::abs(w->sn - a.sn) / (1 + std::abs(a.sn)));
            r.record(std::abs(w->cn - a.cn) / (1 + std::abs(a.cn)));
            r.record(std::abs(w->dn - a.dn) / (1 + std::abs(a.dn)));
        }
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_complex_pythagorean(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "both Pythagorean laws at complex arguments";
    r.tolerance = 1e-11;
    Rng rng(ctx.seed + 3);
    for (double p2 : {0.36, 0.5625}) {
        const double p = std::sqrt(p2), q = std::sqrt(1 - p2);
        const double Kp = complete_K(p), Kq = complete_K(q);
        int n = 0;
        while (n < 500) {
            const Complex z(rng.uniform(-2 * Kp, 2 * Kp), rng.uniform(-0.85 * Kq, 0.85 * Kq));
            try {
                const JacobiQuadruple J = jacobi_complex(z, p2);
                const double s = 1 + std::norm(J.sn) + std::norm(J.cn) + std::norm(J.dn);
                r.record(std::abs(J.sn * J.sn + J.cn * J.cn - 1.0) / s);
                r.record(std::abs(J.dn * J.dn + p2 * J.sn * J.sn - 1.0) / s);
                ++n;
            } catch (const PoleError&) {
                ++r.masked;
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_complex_ode(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "sn'^2 = (1-sn^2)(1-p^2 sn^2) and companions, by central differences";
    r.tolerance = 1e-6;
    Rng rng(ctx.seed + 4);
    const double h = 1e-4;
    for (double p2 : {0.36, 0.64}) {
        const double q2 = 1 - p2;
        for (int k = 0; k < 60; ++k) {
            const Complex z(rng.uniform(-2, 2), rng.uniform(-0.7, 0.7));
            try {
                const auto at = [&](Complex w) { return jacobi_complex(w, p2); };
                const auto d1 = [&](auto get) {
                    return (get(at(z - Complex(2 * h, 0))) - get(at(z + Complex(2 * h, 0))) +
                            8.0 * (get(at(z + Complex(h, 0))) - get(at(z - Complex(h, 0))))) /
                           (12 * h);
                };
                const JacobiQuadruple J = at(z);
                const Complex snp = d1([](const JacobiQuadruple& j) { return j.sn; });
                const Complex cnp = d1([](const JacobiQuadruple& j) { return j.cn; });
                const Complex dnp = d1([](const JacobiQuadruple& j) { return j.dn; });
                const Complex sn2 = J.sn * J.sn, cn2 = J.cn * J.cn, dn2 = J.dn * J.dn;
                const double s = 1 + std::norm(J.sn) + std::norm(J.cn) + std::norm(J.dn);
                r.record(std::abs(snp * snp - (1.0 - sn2) * (1.0 - p2 * sn2)) / (s * s));
                r.record(std::abs(cnp * cnp - (1.0 - cn2) * (q2 + p2 * cn2)) / (s * s));
                r.record(std::abs(dnp * dnp - (dn2 - 1.0) * (q2 - dn2)) / (s * s));
            } catch (const PoleError&) {
                ++r.masked;
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_amplitude_exponential(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "e^{i am(u+iv)} = (cn_p u cn_q v + i sn_p u dn_q v)/(1 + dn_p u sn_q v)";
    r.tolerance = 1e-10;
    Rng rng(ctx.seed + 5);
    const double p = 0.6, q = 0.8;
    const double Kp = complete_K(p), Kq = complete_K(q);
    const Complex I(0, 1);
    for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(-2 * Kp, 2 * Kp), v = rng.uniform(-0.8 * Kq, 0.8 * Kq);
        const JacobiQuadruple J = jacobi_complex(Complex(u, v), p * p);
        const JacobiReal ju = jacobi_real(u, p), jv = jacobi_real(v, q);
        const Complex rhs = (ju.cn * jv.cn + I * (ju.sn * jv.dn)) / (1.0 + ju.dn * jv.sn);
        r.record(std::abs(std::exp(I * J.am) - rhs) / (1 + std::abs(rhs)));
    }
    r.finish();
    return r;
}

CheckReport chk_jacobi_converted_moduli(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "reciprocal and imaginary modulus conversions preserve reality and both laws";
    r.tolerance = 1e-11;
    Rng rng(ctx.seed + 6);
    for (double p2 : {2.4, -0.288}) {
        for (int k = 0; k < 200; ++k) {
            const double u = rng.uniform(-3, 3);
            const JacobiTriple t = jacobi_sncndn(u, p2);
            r.record(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0));
            r.record(std::abs(t.dn * t.dn + p2 * t.sn * t.sn - 1.0));
        }
        for (int k = 0; k < 100; ++k) {
            const Complex z(rng.uniform(-1.2, 1.2), rng.uniform(-0.35, 0.35));
            try {
                const JacobiQuadruple J = jacobi_complex(z, p2);
                const double s = 1 + std::norm(J.sn) + std::norm(J.cn) + std::norm(J.dn);
                r.record(std::abs(J.sn * J.sn + J.cn * J.cn - 1.0) / s);
                r.record(std::abs(J.dn * J.dn + p2 * J.sn * J.sn - 1.0) / s);
            } catch (const PoleError&) {
                ++r.masked;
            }
        }
    }
    r.finish();
    return r;
}

// ------------------------------------------------------------- paracomplex

CheckReport chk_lorentz_ring(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "associativity and distributivity of the Lorentz-number algebra";
    r.tolerance = 1e-14;
    Rng rng(ctx.seed + 10);
    for (int k = 0; k < 1000; ++k) {
        const LorentzNumber a(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const LorentzNumber b(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const LorentzNumber c(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const double s = 64.0;  // |components| <= 2 throughout
        const LorentzNumber d1 = (a * b) * c - a * (b * c);
        const LorentzNumber d2 = a * (b + c) - (a * b + a * c);
        r.record((std::abs(d1.re) + std::abs(d1.im)) / s);
        r.record((std::abs(d2.re) + std::abs(d2.im)) / s);
    }
    r.finish();
    return r;
}

CheckReport chk_lorentz_modulus(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "a conj(a) is real and equals ||a||^2";
    r.tolerance = 1e-14;
    Rng rng(ctx.seed + 11);
    for (int k = 0; k < 1000; ++k) {
        const LorentzNumber a(rng.uniform(-3, 3), rng.uniform(-3, 3));
        const LorentzNumber m = a * conj(a);
        const double s = 1 + a.re * a.re + a.im * a.im;
        r.record(std::abs(m.im) / s);
        r.record(std::abs(m.re - sq_modulus(a)) / s);
    }
    r.finish();
    return r;
}

CheckReport chk_l_extend_restriction(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "restriction of the analytic extension to the real axis";
    r.tolerance = 1e-14;
    Rng rng(ctx.seed + 12);
    const auto f = [](double t) { return std::sin(t) * std::exp(0.2 * t); };
    for (int k = 0; k < 200; ++k) {
        const double u = rng.uniform(-2, 2);
        const LorentzNumber w = l_extend(f, LorentzNumber(u, 0));
        r.record(std::abs(w.re - f(u)));
        r.record(std::abs(w.im));
    }
    r.finish();
    return r;
}

CheckReport chk_l_extend_homomorphism(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "extension of products and compositions";
    r.tolerance = 1e-12;
    Rng rng(ctx.seed + 13);
    const auto f = [](double t) { return std::sin(t); };
    const auto g = [](double t) { return 1.0 + 0.5 * std::cos(t); };
    const auto fg = [&](double t) { return f(t) * g(t); };
    const auto fog = [&](double t) { return f(g(t)); };
    for (int k = 0; k < 300; ++k) {
        const LorentzNumber z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const LorentzNumber d1 = l_extend(fg, z) - l_extend(f, z) * l_extend(g, z);
        const LorentzNumber d2 = l_extend(fog, z) - l_extend(f, l_extend(g, z));
        r.record(std::abs(d1.re) + std::abs(d1.im));
        r.record(std::abs(d2.re) + std::abs(d2.im));
    }
    r.finish();
    return r;
}

CheckReport chk_l_extend_derivative(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "para-complex derivative of the extension equals the extension of f'";
    r.tolerance = 1e-6;
    Rng rng(ctx.seed + 14);
    const auto f = [](double t) { return std::sin(t) * std::exp(0.3 * t); };
    const auto fp = [](double t) {
        return std::exp(0.3 * t) * (std::cos(t) + 0.3 * std::sin(t));
    };
    const double h = FD_STEP;
    for (int k = 0; k < 200; ++k) {
        const LorentzNumber z(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
        const auto F = [&](double uu, double vv) { return l_extend(f, LorentzNumber(uu, vv)); };
        const LorentzNumber du = (F(z.re + h, z.im) - F(z.re - h, z.im)) * (1 / (2 * h));
        const LorentzNumber dv = (F(z.re, z.im + h) - F(z.re, z.im - h)) * (1 / (2 * h));
        const LorentzNumber d = (du + lorentz_j() * dv) * 0.5 - l_extend(fp, z);
        r.record(std::abs(d.re) + std::abs(d.im));
    }
    r.finish();
    return r;
}

CheckReport chk_para_cr_extension(const CheckContext&) {
    CheckReport r = para_cr_check(
        [](double u, double v) {
            return l_extend([](double t) { return std::exp(t); }, LorentzNumber(u, v));
        },
        -1.0, 1.0, -1.0, 1.0);
    r.anchor = "(Re f)_u = (Im f)_v, (Im f)_u = (Re f)_v for the exp extension";
    return r;
}

CheckReport chk_para_cr_j_multiple(const CheckContext&) {
    CheckReport r = para_cr_check(
        [](double u, double v) {
            return lorentz_j() *
                   l_extend([](double t) { return std::sin(t); }, LorentzNumber(u, v));
        },
        -1.0, 1.0, -1.0, 1.0);
    r.anchor = "j f is para-holomorphic when f is";
    return r;
}

CheckReport chk_para_cr_negative(const CheckContext&) {
    CheckReport inner = para_cr_check(
        [](double u, double) { return LorentzNumber(u, 0); }, -1.0, 1.0, -1.0, 1.0);
    CheckReport r;
    r.anchor = "f(u+jv) = u violates the para Cauchy-Riemann equations";
    r.tolerance = 0.5;
    r.samples = inner.samples;
    r.max_residual = inner.pass ? 1.0 : 0.0;  // must fail
    r.finish();
    return r;
}

// --------------------------------------------------------------- lelliptic

CheckReport chk_l_jacobi_pythagorean(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "L-Jacobi Pythagorean laws in the fundamental domain";
    r.tolerance = 1e-11;
    Rng rng(ctx.seed + 20);
    const double p = 0.7;
    const double K = complete_K(p);
    for (int k = 0; k < 1000; ++k) {
        const double up = rng.uniform(-2 * K, 2 * K), um = rng.uniform(-2 * K, 2 * K);
        const LorentzNumber z = from_null(up, um);
        const LJacobi J = l_jacobi(z, p);
        const LorentzNumber e1 = J.sn * J.sn + J.cn * J.cn - 1.0;
        const LorentzNumber e2 = J.dn * J.dn + (p * p) * (J.sn * J.sn) - 1.0;
        r.record(std::abs(e1.re) + std::abs(e1.im));
        r.record(std::abs(e2.re) + std::abs(e2.im));
    }
    r.finish();
    return r;
}

CheckReport chk_l_jacobi_ode(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "L-Jacobi components satisfy the real differential equations";
    r.tolerance = 1e-6;
    Rng rng(ctx.seed + 21);
    const double p = 0.7, p2 = p * p, q2 = 1 - p2;
    const double h = FD_STEP;
    for (int k = 0; k < 150; ++k) {
        const LorentzNumber z(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
        const auto at = [&](double uu, double vv) { return l_jacobi(LorentzNumber(uu, vv), p); };
        const auto deriv = [&](auto get) {
            const LorentzNumber du = (get(at(z.re + h, z.im)) - get(at(z.re - h, z.im))) * (1 / (2 * h));
            const LorentzNumber dv = (get(at(z.re, z.im + h)) - get(at(z.re, z.im - h))) * (1 / (2 * h));
            return (du + lorentz_j() * dv) * 0.5;
        };
        const LJacobi J = at(z.re, z.im);
        const LorentzNumber snp = deriv([](const LJacobi& j) { return j.sn; });
        const LorentzNumber cnp = deriv([](const LJacobi& j) { return j.cn; });
        const LorentzNumber dnp = deriv([](const LJacobi& j) { return j.dn; });
        const LorentzNumber sn2 = J.sn * J.sn, cn2 = J.cn * J.cn, dn2 = J.dn * J.dn;
        const LorentzNumber e1 = snp * snp - (1.0 - sn2) * (1.0 - p2 * sn2);
        const LorentzNumber e2 = cnp * cnp - (1.0 - cn2) * (q2 + p2 * cn2);
        const LorentzNumber e3 = dnp * dnp - (dn2 - 1.0) * (q2 - dn2);
        for (const auto& e : {e1, e2, e3}) r.record(std::abs(e.re) + std::abs(e.im));
    }
    r.finish();
    return r;
}

CheckReport chk_l_jacobi_periodicity(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "fundamental domain {u+jv : -2K <= u +- v <= 2K}";
    r.tolerance = 1e-10;
    Rng rng(ctx.seed + 22);
    const double p = 0.7, K = complete_K(p);
    for (int k = 0; k < 200; ++k) {
        const LorentzNumber z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const LJacobi a = l_jacobi(z, p);
        for (const LorentzNumber T : { LorentzNumber(2 * K, 2 * K), LorentzNumber(2 * K, -2 * K) }) {
            const LJacobi b = l_jacobi(z + T, p);
            const LorentzNumber ds = b.sn - a.sn, dc = b.cn - a.cn, dd = b.dn - a.dn;
            r.record(std::abs(ds.re) + std::abs(ds.im));
            r.record(std::abs(dc.re) + std::abs(dc.im));
            r.record(std::abs(dd.re) + std::abs(dd.im));
        }
    }
    r.finish();
    return r;
}

CheckReport chk_y_hyp1_restriction(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "y(u) = (1 - sn_q u)/cn_q u = cn_q u/(1 + sn_q u) on the real axis";
    r.tolerance = 1e-13;
    Rng rng(ctx.seed + 23);
    const double q = 0.66;
    for (int k = 0; k < 200; ++k) {
        const double u = rng.uniform(-1.2, 1.2);
        const JacobiTriple j = jacobi_sncndn(u, q * q);
        const LorentzNumber y = y_hyp1(LorentzNumber(u, 0), q);
        r.record(std::abs(y.im));
        r.record(std::abs(y.re - (1 - j.sn) / j.cn));
        r.record(std::abs(y.re - j.cn / (1 + j.sn)));
    }
    r.finish();
    return r;
}

CheckReport chk_y_hyp1_ode(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "y'^2 = {p^2(1+y^4) + 2(1+q^2) y^2}/4 and the -y, +-jy symmetries";
    r.tolerance = 1e-6;
    Rng rng(ctx.seed + 24);
    const double q = 0.66, q2 = q * q, p2 = 1 - q2;
    const double h = FD_STEP;
    for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(-0.5, 0.5);
        try {
            const auto yfun = [&](double uu, double vv) { return y_hyp1(LorentzNumber(uu, vv), q); };
            const LorentzNumber du = (yfun(u + h, v) - yfun(u - h, v)) * (1 / (2 * h));
            const LorentzNumber dv = (yfun(u, v + h) - yfun(u, v - h)) * (1 / (2 * h));
            const LorentzNumber yp = (du + lorentz_j() * dv) * 0.5;
            const LorentzNumber y = yfun(u, v);
            // -y and +-jy carry derivatives -y' resp +-j y', whose squares all
            // equal y'^2; each symmetry image solves the same equation.
            for (const LorentzNumber& w : {y, -y, lorentz_j() * y, -lorentz_j() * y}) {
                const LorentzNumber w2 = w * w, w4 = w2 * w2;
                const LorentzNumber res =
                    yp * yp * 4.0 - (w4 + 1.0) * p2 - w2 * (2.0 * (1.0 + q2));
                r.record(std::abs(res.re) + std::abs(res.im));
            }
        } catch (const Error&) {
            ++r.masked;
        }
    }
    r.finish();
    return r;
}

CheckReport chk_para_cr_y_hyp1(const CheckContext&) {
    CheckReport r = para_cr_check(
        [](double u, double v) { return y_hyp1(LorentzNumber(u, v), 0.66); },
        -0.8, 0.8, -0.4, 0.4);
    r.anchor = "para Cauchy-Riemann equations for the para-holomorphic solution";
    return r;
}

}  // namespace

// registration and dispatch follow in part two of this file
namespace {

// ---------------------------------------------------------------- quadrics

CheckReport surface_check(const std::string& id, int kind /*0 mem, 1 orth, 2 conj*/) {
    const ModuliTriple& m = fixture_moduli(id);
    const SurfaceGrid& g = fixture_primal(id);
    CheckReport r;
    r.tolerance = kind == 0 ? 1e-10 : (kind == 1 ? 1e-8 : 1e-6);
    r.anchor = kind == 0   ? "quadric membership of the closed-form parametrization"
               : kind == 1 ? "(x_u, x_v) = 0 in the ambient metric"
                           : "det(x_uv, x_u, x_v) = 0 (conjugate parameters)";
    for (int j = 0; j < g.lattice.nv; ++j) {
        for (int i = 0; i < g.lattice.nu; ++i) {
            if (!g.valid(i, j)) {
                ++r.masked;
                continue;
            }
            const SurfaceJet& J = g.at(i, j);
            if (kind == 0) {
                r.record(std::abs(membership_residual(m, J.x)));
            } else if (kind == 1) {
                const double F = metric_dot(J.x_u, J.x_v, m.ambient);
                r.record(std::abs(F) / (norm(J.x_u) * norm(J.x_v)));
            } else {
                const double d = det3(J.x_uv, J.x_u, J.x_v);
                r.record(std::abs(d) / ((1 + norm(J.x_uv)) * norm(J.x_u) * norm(J.x_v)));
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_surface_realness(const CheckContext&) {
    CheckReport r;
    r.anchor = "(x', x') is real-valued along the parametrizations";
    r.tolerance = 1e-8;
    for (const char* id : {"ellipsoid-e", "hyp2-m-i", "hyp1-m-i"}) {
        const ModuliTriple& m = fixture_moduli(id);
        const SurfaceGrid& g = fixture_primal(id);
        for (int j = 0; j < g.lattice.nv; j += 3) {
            for (int i = 0; i < g.lattice.nu; i += 3) {
                if (!g.valid(i, j)) {
                    ++r.masked;
                    continue;
                }
                const SurfaceJet& J = g.at(i, j);
                // Im (x_z, x_z) = -F/2 (complex), j-part (x_z, x_z) = F/2 (para)
                const double F = metric_dot(J.x_u, J.x_v, m.ambient);
                r.record(0.5 * std::abs(F) / (1 + dot(J.x_u, J.x_u) + dot(J.x_v, J.x_v)));
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_umbilic_branch_ellipsoid(const CheckContext&) {
    CheckReport r;
    r.anchor = "four real branch values ((1+q)/p)^{+-1} with both signs";
    r.tolerance = 1e-12;
    const QuadricSpec s = fixture("ellipsoid-e");
    const ModuliTriple m = fixture_moduli("ellipsoid-e");
    const double p = std::sqrt(m.p2()), q = std::sqrt(m.q2());
    const BranchCensus c = umbilic_branch_values(s);
    if (c.values.size() != 4 || c.no_umbilics) {
        r.record(1.0);
        r.finish();
        return r;
    }
    std::vector<double> want = {(1 + q) / p, -(1 + q) / p, (1 - q) / p, -(1 - q) / p};
    std::vector<double> got;
    for (const auto& b : c.values) {
        if (b.cls != BranchClass::Real) r.record(1.0);
        got.push_back(b.re);
    }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 4; ++i) r.record(std::abs(got[i] - want[i]));
    // the set is closed under inversion: (1-q)/p = p/(1+q)
    r.record(std::abs((1 - q) / p - p / (1 + q)));
    r.finish();
    return r;
}

CheckReport chk_umbilic_branch_hyp1(const CheckContext&) {
    CheckReport r;
    r.anchor = "16 para-complex branch values, the four with ||y||^2 = 1 excluded";
    r.tolerance = 1e-12;
    const QuadricSpec s = fixture("hyp1-m-ii");  // c > a > b
    const BranchCensus c = umbilic_branch_values(s);
    int excluded = 0, real_cnt = 0, imag_cnt = 0;
    for (const auto& b : c.values) {
        excluded += (b.cls == BranchClass::Excluded);
        real_cnt += (b.cls == BranchClass::Real);
        imag_cnt += (b.cls == BranchClass::Imaginary);
        if (b.cls == BranchClass::Excluded)
            r.record(std::abs(b.re * b.re - b.im * b.im - 1.0));
    }
    r.record(c.values.size() == 16 ? 0.0 : 1.0);
    r.record(excluded == 4 ? 0.0 : 1.0);
    r.record(real_cnt == 4 ? 0.0 : 1.0);
    r.record(imag_cnt == 4 ? 0.0 : 1.0);
    r.finish();
    return r;
}

CheckReport chk_umbilic_unitary(const CheckContext&) {
    CheckReport r;
    r.anchor = "coinciding axes push the branch values onto the unit circle: no umbilics";
    r.tolerance = 1e-9;
    const QuadricSpec s{Family::Ellipsoid, 1.0, 1.3, 1.0, Ambient::Euclidean};
    // a = c needs no tri-axial moduli; the census works straight from the axes
    BranchCensus c;
    try {
        c = umbilic_branch_values(s);
    } catch (const Error&) {
        r.record(1.0);
        r.finish();
        return r;
    }
    r.record(c.no_umbilics ? 0.0 : 1.0);
    for (const auto& b : c.values) r.record(std::abs(std::hypot(b.re, b.im) - 1.0));
    // hyperboloid case (iii) likewise has unitary values
    const BranchCensus h = umbilic_branch_values(fixture("hyp2-m-iii"));
    r.record(h.no_umbilics ? 0.0 : 1.0);
    r.finish();
    return r;
}

CheckReport chk_umbilic_ordering_chain(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "umbilics of the Minkowski ellipsoid sit inside the spacelike caps";
    r.tolerance = 0.0;
    Rng rng(ctx.seed + 30);
    for (int k = 0; k < 200; ++k) {
        const double b = rng.uniform(0.3, 2.0);
        const double a = b + rng.uniform(0.05, 2.0);
        const double c = rng.uniform(0.3, 2.5);
        const double sa = std::sqrt(a * a + c * c), sb = std::sqrt(b * b + c * c);
        const double d = std::sqrt(a * a - b * b);
        const double v1 = ((sa - sb) / d) * ((sa - sb) / d);
        const double v2 = ((sa - c) / a) * ((sa - c) / a);
        const double v3 = ((sa + c) / a) * ((sa + c) / a);
        const double v4 = ((sa + sb) / d) * ((sa + sb) / d);
        const bool ok = v1 < v2 && v2 < 1.0 && 1.0 < v3 && v3 < v4;
        r.record(ok ? 0.0 : 1.0);
    }
    r.finish();
    return r;
}

CheckReport chk_umbilic_net_degeneracy(const CheckContext&) {
    CheckReport r;
    r.anchor = "x_u and x_v vanish at the branch parameter point (net singularity)";
    r.tolerance = 1e-6;
    const ModuliTriple& m = fixture_moduli("ellipsoid-e");
    const double Kp = complete_K(std::sqrt(m.p2()));
    const double Kq = complete_K(std::sqrt(m.q2()));
    const auto sampler = point_sampler(m);
    // finite-difference jet within a 1e-4 neighbourhood of the umbilic
    const SurfaceJet J = fd_jet(sampler, Kp, Kq, 1e-5, 2);
    const double scale = 1 + norm(J.x);
    r.record(norm(cross(J.x_u, J.x_v)) / (scale * scale));
    r.record(norm(J.x_u) / scale * 1e-2);  // tangents themselves collapse
    r.record(norm(J.x_v) / scale * 1e-2);
    r.finish();
    return r;
}

// Bisect G(u, .) = 0 between v_lo and v_hi (fixed u).
double bisect_degenerate_v(const ModuliTriple& m, double u, double v_lo, double v_hi) {
    const auto jets = jet_sampler(m);
    const auto Gat = [&](double v) {
        const SurfaceJet J = jets(u, v);
        return metric_dot(J.x_v, J.x_v, m.ambient);
    };
    double lo = v_lo, hi = v_hi, flo = Gat(lo), fhi = Gat(hi);
    if (flo * fhi > 0) throw DomainError("bisect_degenerate_v: no sign change");
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi), fm = Gat(mid);
        if (flo * fm <= 0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    (void)fhi;
    return 0.5 * (lo + hi);
}

CheckReport degenerate_line_fixture(const std::string& id, double v_lo_frac, double v_hi_frac) {
    const ModuliTriple& m = fixture_moduli(id);
    const auto [Tu, Tv] = natural_periods(m);
    const Window w = canonical_window(m);
    (void)w;
    const double v_lo = v_lo_frac * Tv, v_hi = v_hi_frac * Tv;

    // Locate the zero of G per u-line; the locations must agree (the
    // degenerate set is a parameter line), then sweep |G| along it.
    const double u_lo = (m.family == Family::Ellipsoid) ? -Tu / 4 : 0.1 * Tu / 4;
    const double u_hi = (m.family == Family::Ellipsoid) ? Tu / 4 : 0.9 * Tu / 4;
    const double v_star = bisect_degenerate_v(m, 0.5 * (u_lo + u_hi), v_lo, v_hi);
    CheckReport r;
    r.anchor = "degenerate metric propagates along the parameter curve through the node";
    r.tolerance = 1e-8;
    for (int i = 0; i <= 16; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / 16.0;
        const double vi = bisect_degenerate_v(m, u, v_lo, v_hi);
        r.record(std::abs(vi - v_star) / Tv);
    }
    // grid with a row exactly on the degenerate line
    const Lattice lat(u_lo, u_hi, 33, v_star - 0.1 * Tv, v_star + 0.1 * Tv, 33);
    SurfaceGrid g = build_primal_grid(m, lat);
    // overwrite the middle row onto the curve exactly
    const int jmid = 16;
    const auto jets = jet_sampler(m);
    for (int i = 0; i < lat.nu; ++i) {
        SurfaceJet J = jets(lat.u(i), v_star);
        g.jets[g.index(i, jmid)] = J;
        g.mask[g.index(i, jmid)] = NodeState::Valid;
        g.causal[g.index(i, jmid)] = causal_type(J, m.ambient);
    }
    CheckReport line = degenerate_line_check(g);
    if (line.samples == 0) r.record(1.0);  // a degenerate node must be present
    r.record(line.max_residual);
    r.masked += line.masked;
    r.samples += line.samples;
    r.finish();
    return r;
}

CheckReport chk_degenerate_line_ellipsoid(const CheckContext&) {
    return degenerate_line_fixture("ellipsoid-m", 0.12, 0.22);
}

CheckReport chk_degenerate_line_hyp2(const CheckContext&) {
    return degenerate_line_fixture("hyp2-m-ii", 0.05, 0.22);
}

CheckReport chk_degenerate_line_control(const CheckContext&) {
    // Euclidean grids have no degenerate nodes: vacuous pass with samples = 0
    const CheckReport inner = degenerate_line_check(fixture_primal("ellipsoid-e"));
    CheckReport r;
    r.anchor = "definite metric: no degenerate nodes to propagate";
    r.tolerance = 0.5;
    r.max_residual = (inner.samples == 0 && inner.pass) ? 0.0 : 1.0;
    r.finish();
    return r;
}

CheckReport chk_degenerate_line_power(const CheckContext&) {
    // synthetic grid with one isolated degenerate node: the check must fail
    SurfaceGrid g;
    g.lattice = Lattice(0, 1, 9, 0, 1, 9);
    g.ambient = Ambient::MinkowskiZ;
    g.jets.resize(g.lattice.size());
    g.mask.assign(g.lattice.size(), NodeState::Valid);
    g.causal.assign(g.lattice.size(), CausalType::NotApplicable);
    for (int j = 0; j < 9; ++j) {
        for (int i = 0; i < 9; ++i) {
            SurfaceJet& J = g.jets[g.index(i, j)];
            J.u = g.lattice.u(i);
            J.v = g.lattice.v(j);
            const double slope = (i == 4 && j == 4) ? 1.0 : 0.5;
            J.x_u = {1, 0, slope};
            J.x_v = {0, 1, 0};
            g.causal[g.index(i, j)] = causal_type(J, g.ambient);
        }
    }
    const CheckReport inner = degenerate_line_check(g);
    CheckReport r;
    r.anchor = "an isolated degenerate node is detected as a violation";
    r.tolerance = 0.5;
    r.samples = inner.samples;
    r.max_residual = (!inner.pass && inner.samples > 0) ? 0.0 : 1.0;
    r.finish();
    return r;
}

CheckReport chk_causal_decomposition(const CheckContext&) {
    CheckReport r;
    r.anchor = "Minkowski ellipsoid: two spacelike caps and a timelike belt";
    r.tolerance = 0.5;
    const ModuliTriple& m = fixture_moduli("ellipsoid-m");
    const auto jets = jet_sampler(m);
    const auto [Tu, Tv] = natural_periods(m);
    (void)Tu;
    int spacelike = 0, timelike = 0, transitions = 0;
    CausalType prev = CausalType::NotApplicable;
    for (int k = 0; k <= 200; ++k) {
        const double v = -Tv / 2 + Tv * k / 200.0;
        const CausalType t = causal_type(jets(0.37, v), Ambient::MinkowskiZ);
        spacelike += (t == CausalType::Spacelike);
        timelike += (t == CausalType::Timelike);
        if (prev != CausalType::NotApplicable && t != prev && t != CausalType::Degenerate &&
            prev != CausalType::Degenerate)
            ++transitions;
        prev = t;
    }
    r.record(spacelike > 20 ? 0.0 : 1.0);
    r.record(timelike > 20 ? 0.0 : 1.0);
    r.record(transitions == 4 ? 0.0 : 1.0);  // belt crossed twice per period
    // Euclidean control: all spacelike
    const SurfaceGrid& ge = fixture_primal("ellipsoid-e");
    for (std::size_t k = 0; k < ge.causal.size(); k += 7)
        if (ge.mask[k] == NodeState::Valid)
            r.record(ge.causal[k] == CausalType::Spacelike ? 0.0 : 1.0);
    r.finish();
    return r;
}

RevolutionProfile catenoid_profile() {
    return {[](double u) { return 1.0 / std::cosh(u); },
            [](double u) { return std::tanh(u); },
            [](double u) { const double c = std::cosh(u); return 1.0 / (c * c); },
            0.0};
}

CheckReport chk_revolution_catenoid(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "catenoid dual height integral h'/r^2 integrates to u - u0";
    r.tolerance = 1e-10;
    Rng rng(ctx.seed + 31);
    const RevolutionProfile prof = catenoid_profile();
    for (int k = 0; k < 60; ++k) {
        const double u = rng.uniform(-1.5, 1.5), v = rng.uniform(0, 2 * PI);
        const auto [x, xd] = revolution_pair(prof, u, v);
        r.record(std::abs(xd.z - u));
        // 2 pi periodicity in v
        const auto [x2, xd2] = revolution_pair(prof, u, v + 2 * PI);
        r.record(norm(x - x2));
        (void)xd2;
    }
    r.finish();
    return r;
}

CheckReport chk_revolution_christoffel(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "x*_z = x_zbar / r^2 for the surface of revolution";
    r.tolerance = 1e-8;
    Rng rng(ctx.seed + 32);
    const RevolutionProfile prof = catenoid_profile();
    const auto xf = [&](double u, double v) { return revolution_pair(prof, u, v).first; };
    const auto xd = [&](double u, double v) { return revolution_pair(prof, u, v).second; };
    for (int k = 0; k < 40; ++k) {
        const double u = rng.uniform(-1.2, 1.2), v = rng.uniform(0, 2 * PI);
        const SurfaceJet P = fd_jet(xf, u, v, 1e-5, 4);
        const SurfaceJet D = fd_jet(xd, u, v, 1e-5, 4);
        const double r2 = 1.0 / std::cosh(u);  // r(u)
        const double rr = r2 * r2;
        // x*_u = x_u / r^2 and x*_v = -x_v / r^2
        r.record(norm(D.x_u - P.x_u / rr) / (1 + norm(P.x_u) / rr));
        r.record(norm(D.x_v + P.x_v / rr) / (1 + norm(P.x_v) / rr));
    }
    r.finish();
    return r;
}

}  // namespace

// part three: dual-layer checks, reinbek, verify self-tests, registration
namespace {

// ------------------------------------------------------------------ duals

// Implicit representations hold for the branch of the dual over one cell of
// the parametrizing function; for the 1-sheeted hyperboloid this keeps the
// null coordinates u +- v within a single monotonicity interval.
Window implicit_window(const ModuliTriple& m) {
    if (m.family != Family::Hyperboloid1Sheet) return canonical_window(m);
    const double T4 = natural_periods(m).first / 4;
    return {0.08 * T4, 0.80 * T4, -0.06 * T4, 0.06 * T4};
}

CheckReport implicit_check(const std::string& id, const char* anchor) {
    const ModuliTriple& m = fixture_moduli(id);
    const Lattice lat = window_lattice(implicit_window(m), 64, 64);
    const auto dual = dual_point_sampler(m);
    CheckReport r;
    r.anchor = anchor;
    r.tolerance = 1e-8;
    const double q_abs = std::sqrt(std::abs(m.q2()));
    const double p_abs = std::sqrt(std::abs(m.p2()));
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            try {
                const Vec3 X = normalize_dual_point(m, dual(lat.u(i), lat.v(j)));
                // large arguments push cosh towards 1e5 and the residual into
                // cancellation noise; such near-pole nodes are reported as
                // masked, like the mesh layer does
                const double amax = std::max({p_abs * std::abs(X.x),
                                              p_abs * q_abs * std::abs(X.y),
                                              q_abs * std::abs(X.z)});
                if (amax > 8.0) {
                    ++r.masked;
                    continue;
                }
                r.record(std::abs(implicit_residual(m.family, X, m.p2(), m.q2())));
            } catch (const Error&) {
                ++r.masked;
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_scherk_implicit(const CheckContext&) {
    // unit-axes tower over the ellipsoid window
    const ModuliTriple& m = fixture_moduli("ellipsoid-e");
    const double p = std::sqrt(m.p2()), q = std::sqrt(m.q2());
    const Window w = canonical_window(m);
    const Lattice lat = window_lattice(w, 64, 64);
    CheckReport r;
    r.anchor = "q^2 cosh(p x1) + cos(pq x2) - p^2 cosh(q x3) = 0";
    r.tolerance = 1e-8;
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            try {
                const Vec3 x = scherk_tower(Complex(lat.u(i), lat.v(j)), p, q);
                r.record(std::abs(implicit_residual(Family::Ellipsoid, x, p * p, q * q)));
            } catch (const Error&) {
                ++r.masked;
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_implicit_origin(const CheckContext&) {
    CheckReport r;
    r.anchor = "value 2q^2 at the origin and sensitivity to off-surface points";
    r.tolerance = 1e-12;
    const double p2 = 0.36, q2 = 0.64;
    r.record(std::abs(implicit_residual(Family::Ellipsoid, {0, 0, 0}, p2, q2) - 2 * q2));
    // a point pushed off the tower must be detected
    const double p = std::sqrt(p2), q = std::sqrt(q2);
    const Vec3 on = scherk_tower(Complex(0.6, 0.4), p, q);
    const double off = std::abs(implicit_residual(Family::Ellipsoid,
                                                  on + Vec3{0.1, 0, 0}, p2, q2));
    r.record(off > 1e-3 ? 0.0 : 1.0);
    r.finish();
    return r;
}

CheckReport pair_fixture(const std::string& id, CheckMode mode, bool flip) {
    const SurfaceGrid& primal = fixture_primal(id, 32);
    const SurfaceGrid& dual = fixture_dual(id, 32);
    CheckReport r = christoffel_pair_check(primal, dual, mode, TOL_FINITE_DIFF, flip);
    return r;
}

CheckReport chk_pair_ellipsoid(const CheckContext& c) {
    CheckReport r = pair_fixture("ellipsoid-e", CheckMode::Spacelike, c.pair_sign_flip);
    r.anchor = "ellipsoid and its dual: parallel tangents, one scalar";
    return r;
}
CheckReport chk_pair_hyp2_minkowski(const CheckContext& c) {
    CheckReport r = pair_fixture("hyp2-m-i", CheckMode::Spacelike, c.pair_sign_flip);
    r.anchor = "2-sheeted hyperboloid (Minkowski) and the maximal-surface dual";
    return r;
}
CheckReport chk_pair_hyp2_euclidean(const CheckContext& c) {
    CheckReport r = pair_fixture("hyp2-e", CheckMode::Spacelike, c.pair_sign_flip);
    r.anchor = "2-sheeted hyperboloid (Euclidean) and its dual";
    return r;
}
CheckReport chk_pair_hyp1_minkowski(const CheckContext& c) {
    CheckReport r = pair_fixture("hyp1-m-i", CheckMode::Timelike, c.pair_sign_flip);
    r.anchor = "1-sheeted hyperboloid and the timelike-minimal dual";
    return r;
}
CheckReport chk_pair_hyp1_euclidean(const CheckContext& c) {
    CheckReport r = pair_fixture("hyp1-e", CheckMode::Timelike, c.pair_sign_flip);
    r.anchor = "Euclidean 1-sheeted hyperboloid and its dual";
    return r;
}

CheckReport chk_pair_catenoid(const CheckContext& c) {
    const RevolutionProfile prof = catenoid_profile();
    const Lattice lat(-1.2, 1.2, 25, 0.3, 5.8, 25);
    const auto xf = [&](double u, double v) { return revolution_pair(prof, u, v).first; };
    const auto xd = [&](double u, double v) { return revolution_pair(prof, u, v).second; };
    SurfaceGrid gp, gd;
    for (SurfaceGrid* g : {&gp, &gd}) {
        g->lattice = lat;
        g->ambient = Ambient::Euclidean;
        g->jets.resize(lat.size());
        g->mask.assign(lat.size(), NodeState::Valid);
        g->causal.assign(lat.size(), CausalType::Spacelike);
    }
    for (int j = 0; j < lat.nv; ++j)
        for (int i = 0; i < lat.nu; ++i) {
            gp.jets[gp.index(i, j)] = fd_jet(xf, lat.u(i), lat.v(j), 1e-5, 4);
            gd.jets[gd.index(i, j)] = fd_jet(xd, lat.u(i), lat.v(j), 1e-5, 4);
        }
    CheckReport r = christoffel_pair_check(gp, gd, CheckMode::Spacelike, TOL_FINITE_DIFF,
                                           c.pair_sign_flip);
    r.anchor = "the catenoid is the dual of the sphere of revolution";
    return r;
}

CheckReport chk_pair_negative_control(const CheckContext&) {
    const SurfaceGrid& primal = fixture_primal("ellipsoid-e", 32);
    const CheckReport inner =
        christoffel_pair_check(primal, primal, CheckMode::Spacelike, TOL_FINITE_DIFF, false);
    CheckReport r;
    r.anchor = "a surface paired with itself violates the v-slot sign";
    r.tolerance = 0.5;
    r.samples = inner.samples;
    r.max_residual = inner.pass ? 1.0 : 0.0;
    r.finish();
    return r;
}

struct OracleRun {
    double worst = 0, closure = 0, refine = 0, scale = 1;
};

OracleRun dual_oracle_run(const std::string& id, PairMode mode) {
    const ModuliTriple& m = fixture_moduli(id);
    Window w;
    if (m.family == Family::Ellipsoid) {
        // one quarter cell, clear of the umbilic at (K_p, K_q) and of the
        // branch lines through sn = 0, cn = 0
        const double Kp = complete_K(std::sqrt(m.p2()));
        const double Kq = complete_K(std::sqrt(m.q2()));
        w = {0.15 * Kp, 0.80 * Kp, 0.10 * Kq, 0.72 * Kq};
    } else {
        const Window cw = canonical_window(m);
        const double du = (cw.u1 - cw.u0), dv = (cw.v1 - cw.v0);
        w = {cw.u0 + 0.15 * du, cw.u1 - 0.15 * du, cw.v0 + 0.15 * dv, cw.v1 - 0.15 * dv};
    }
    const Lattice lat(w.u0, w.u1, 32, w.v0, w.v1, 32);
    const Ambient metric = (m.family == Family::Ellipsoid && m.ambient == Ambient::Euclidean)
                               ? Ambient::Euclidean
                               : (m.family == Family::Hyperboloid1Sheet ? Ambient::MinkowskiX
                                                                        : Ambient::MinkowskiZ);
    ChristoffelResult res =
        christoffel_numeric(unit_lift_sampler(m), jet_sampler(m), lat, metric, mode);
    // translate the zero-gauged integral onto the closed form's gauge
    const DualSurfaceSpec spec = make_dual_spec(m, lat.u0, lat.v0);
    apply_gauge(res.dual, spec);
    const auto dual = dual_point_sampler(m);
    OracleRun out;
    out.closure = res.closure_residual;
    out.refine = res.refinement_delta;
    for (int j = 0; j < lat.nv; ++j)
        for (int i = 0; i < lat.nu; ++i) {
            if (!res.dual.valid(i, j)) continue;
            const Vec3 cf = dual(lat.u(i), lat.v(j));
            out.scale = std::max(out.scale, norm(cf - spec.base_value));
            out.worst = std::max(out.worst, norm(cf - res.dual.at(i, j).x));
        }
    return out;
}

const OracleRun& oracle_memo(const std::string& id, PairMode mode) {
    static std::map<std::string, OracleRun> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, dual_oracle_run(id, mode)).first;
    return it->second;
}

CheckReport oracle_check(const std::string& id, PairMode mode, const char* anchor) {
    const OracleRun& run = oracle_memo(id, mode);
    CheckReport r;
    r.anchor = anchor;
    r.tolerance = 1e-5;
    r.record(run.worst / run.scale);
    r.finish();
    return r;
}

CheckReport chk_oracle_ellipsoid(const CheckContext&) {
    return oracle_check("ellipsoid-e", PairMode::Spacelike,
                        "closed-form dual against Christoffel quadrature (ellipsoid)");
}
CheckReport chk_oracle_hyp2m(const CheckContext&) {
    return oracle_check("hyp2-m-i", PairMode::Spacelike,
                        "closed-form dual against Christoffel quadrature (hyp2, Minkowski)");
}
CheckReport chk_oracle_hyp2e(const CheckContext&) {
    return oracle_check("hyp2-e", PairMode::Spacelike,
                        "closed-form dual against Christoffel quadrature (hyp2, Euclidean)");
}
CheckReport chk_oracle_hyp1m(const CheckContext&) {
    return oracle_check("hyp1-m-i", PairMode::Timelike,
                        "closed-form dual against Christoffel quadrature (hyp1, Minkowski)");
}
CheckReport chk_oracle_hyp1e(const CheckContext&) {
    return oracle_check("hyp1-e", PairMode::Timelike,
                        "closed-form dual against Christoffel quadrature (hyp1, Euclidean)");
}

CheckReport chk_path_independence(const CheckContext&) {
    CheckReport r;
    r.anchor = "loop integrals of the Christoffel system close";
    r.tolerance = 1e-7;
    for (const char* id : {"ellipsoid-e", "hyp2-m-i", "hyp1-m-i"}) {
        const PairMode mode = std::string(id) == "hyp1-m-i" ? PairMode::Timelike
                                                            : PairMode::Spacelike;
        const OracleRun& run = oracle_memo(id, mode);
        r.record(run.closure / run.scale);
    }
    r.finish();
    return r;
}

CheckReport chk_step_stability(const CheckContext&) {
    CheckReport r;
    r.anchor = "quadrature refinement x2 leaves the dual unchanged";
    r.tolerance = 1e-7;
    for (const char* id : {"ellipsoid-e", "hyp2-m-i", "hyp1-m-i"}) {
        const PairMode mode = std::string(id) == "hyp1-m-i" ? PairMode::Timelike
                                                            : PairMode::Spacelike;
        const OracleRun& run = oracle_memo(id, mode);
        r.record(run.refine / run.scale);
    }
    r.finish();
    return r;
}

CheckReport chk_dual_of_dual(const CheckContext&) {
    CheckReport r;
    r.anchor = "the dual of the dual returns the surface up to translation and scale";
    r.tolerance = 1e-4;
    const ModuliTriple& m = fixture_moduli("ellipsoid-e");
    const double p = std::sqrt(m.p2()), q = std::sqrt(m.q2());
    const Window w = canonical_window(m);
    const double du = (w.u1 - w.u0), dv = (w.v1 - w.v0);
    const Lattice lat(w.u0 + 0.3 * du, w.u0 + 0.65 * du, 25, w.v0 + 0.55 * dv,
                      w.v0 + 0.9 * dv, 25);
    const auto unit_pts = [&](double uu, double vv) {
        return scherk_tower(Complex(uu, vv), p, q);
    };
    const auto dual_pts = dual_point_sampler(m);
    const auto unit_jets = [&](double uu, double vv) { return fd_jet(unit_pts, uu, vv, 1e-5, 4); };
    const auto scaled_jets = [&](double uu, double vv) { return fd_jet(dual_pts, uu, vv, 1e-5, 4); };
    const ChristoffelResult res =
        christoffel_numeric(unit_jets, scaled_jets, lat, Ambient::Euclidean, PairMode::Spacelike);
    const auto primal = point_sampler(m);
    const Vec3 p0 = primal(lat.u0, lat.v0);
    double num = 0, den = 0;
    for (int j = 0; j < lat.nv; ++j)
        for (int i = 0; i < lat.nu; ++i) {
            if (!res.dual.valid(i, j)) continue;
            const Vec3 dp = primal(lat.u(i), lat.v(j)) - p0;
            const Vec3 dx = res.dual.at(i, j).x;
            num += dot(dp, dx);
            den += dot(dx, dx);
        }
    const double s = num / den;
    double scale = 1;
    for (int j = 0; j < lat.nv; ++j)
        for (int i = 0; i < lat.nu; ++i) {
            if (!res.dual.valid(i, j)) continue;
            const Vec3 dp = primal(lat.u(i), lat.v(j)) - p0;
            scale = std::max(scale, norm(dp));
            r.record(norm(dp - res.dual.at(i, j).x * s));
        }
    r.max_residual /= scale;
    r.finish();
    return r;
}

CheckReport chk_conformality_transfer(const CheckContext&) {
    CheckReport r;
    r.anchor = "induced dual metric equals rho^2 times the primal metric, v-sign flipped";
    r.tolerance = 1e-6;
    for (const char* id : {"ellipsoid-e", "hyp2-m-i"}) {
        const ModuliTriple& m = fixture_moduli(id);
        const SurfaceGrid& gp = fixture_primal(id, 32);
        const SurfaceGrid& gd = fixture_dual(id, 32);
        for (int j = 0; j < gp.lattice.nv; j += 2)
            for (int i = 0; i < gp.lattice.nu; i += 2) {
                if (!gp.valid(i, j) || !gd.valid(i, j)) {
                    ++r.masked;
                    continue;
                }
                const SurfaceJet& P = gp.at(i, j);
                const SurfaceJet& D = gd.at(i, j);
                const double rho = dot(D.x_u, P.x_u) / dot(P.x_u, P.x_u);
                const double E = metric_dot(P.x_u, P.x_u, m.ambient);
                const double F = metric_dot(P.x_u, P.x_v, m.ambient);
                const double G = metric_dot(P.x_v, P.x_v, m.ambient);
                const double Ed = metric_dot(D.x_u, D.x_u, m.ambient);
                const double Fd = metric_dot(D.x_u, D.x_v, m.ambient);
                const double Gd = metric_dot(D.x_v, D.x_v, m.ambient);
                const double s = rho * rho * (std::abs(E) + std::abs(G)) + 1e-300;
                r.record(std::abs(Ed - rho * rho * E) / s);
                r.record(std::abs(Gd - rho * rho * G) / s);
                r.record(std::abs(Fd + rho * rho * F) / s);
            }
    }
    r.finish();
    return r;
}

CheckReport laplace_like_check(const std::string& id, bool wave, const char* anchor) {
    const ModuliTriple& m = fixture_moduli(id);
    const auto dual = dual_point_sampler(m);
    const auto periods = dual_monodromy_periods(m);
    const Window w = canonical_window(m);
    CheckReport r;
    r.anchor = anchor;
    r.tolerance = 1e-5;
    const double h = 0.02;
    const int N = 9;
    for (int j = 2; j < N - 2; ++j) {
        for (int i = 2; i < N - 2; ++i) {
            const double u = w.u0 + (w.u1 - w.u0) * (0.25 + 0.5 * i / (N - 1.0));
            const double v = w.v0 + (w.v1 - w.v0) * (0.25 + 0.5 * j / (N - 1.0));
            try {
                const Vec3 center = dual(u, v);
                const auto at = [&](double uu, double vv) {
                    Vec3 p = dual(uu, vv);
                    for (int k = 0; k < 3; ++k)
                        if (periods[k] > 0) p[k] = unwrap_to(p[k], center[k], periods[k]);
                    return p;
                };
                // 4th-order second differences
                const auto d2 = [&](bool along_u) {
                    const auto val = [&](int s) {
                        return along_u ? at(u + s * h, v) : at(u, v + s * h);
                    };
                    return (val(-2) * (-1.0) + val(-1) * 16.0 + center * (-30.0) + val(1) * 16.0 +
                            val(2) * (-1.0)) / (12 * h * h);
                };
                const Vec3 fuu = d2(true), fvv = d2(false);
                const Vec3 res = wave ? fuu - fvv : fuu + fvv;
                r.record(norm(res) / (1 + norm(fuu) + norm(fvv)));
            } catch (const Error&) {
                ++r.masked;
            }
        }
    }
    r.finish();
    return r;
}

CheckReport chk_dual_harmonicity(const CheckContext&) {
    return laplace_like_check("hyp2-m-i", false,
                              "maximal-surface dual components are harmonic");
}

CheckReport chk_dual_wave(const CheckContext&) {
    return laplace_like_check("hyp1-m-i", true,
                              "timelike minimal dual components solve the wave equation");
}

CheckReport chk_hyp2_dual_period(const CheckContext&) {
    CheckReport r;
    r.anchor = "case (iii) dual carries a translational period";
    r.tolerance = 1e-8;
    const ModuliTriple& m = fixture_moduli("hyp2-m-iii");
    const auto [Tu, Tv] = natural_periods(m);
    const auto periods = dual_monodromy_periods(m);
    const auto dual = dual_point_sampler(m);
    // continue the dual along a horizontal line (v fixed inside (0, Tv/2))
    // over two full u-periods, unwrapping the branch monodromies
    const double v = 0.35 * Tv / 2;
    const int N = 720, per_T = N / 2;
    std::vector<Vec3> vals(N + 1);
    vals[0] = dual(0.0, v);
    for (int k = 1; k <= N; ++k) {
        Vec3 p = dual(2.0 * Tu * k / N, v);
        for (int c = 0; c < 3; ++c)
            if (periods[c] > 0) p[c] = unwrap_to(p[c], vals[k - 1][c], periods[c]);
        vals[k] = p;
    }
    const Vec3 d0 = vals[per_T] - vals[0];
    const double mag = norm(d0);
    for (int k = 0; k + per_T <= N; k += 6)
        r.record(norm(vals[k + per_T] - vals[k] - d0) / (1 + mag));
    if (mag < 1e-6) r.record(1.0);  // the translation must be nonzero
    r.finish();
    return r;
}

CheckReport antiderivative_check(Family family, double p2, const char* anchor,
                                 const CheckContext& ctx) {
    CheckReport r;
    r.anchor = anchor;
    r.tolerance = 1e-7;
    Rng rng(ctx.seed + 40);
    const Complex p = p2 >= 0 ? Complex(std::sqrt(p2), 0) : Complex(0, std::sqrt(-p2));
    const double q2 = 1 - p2;
    const Complex q = q2 >= 0 ? Complex(std::sqrt(q2), 0) : Complex(0, std::sqrt(-q2));
    const Complex I(0, 1);
    const double h = 1e-3;

    // the seven tabulated derivative identities, as (function, derivative) pairs
    using Fn = std::function<Complex(Complex)>;
    const auto den_m = [&](Complex y) {  // (1-y^2)^2 - q^2 (1+y^2)^2
        const Complex y2 = y * y;
        return (1.0 - y2) * (1.0 - y2) - q * q * (1.0 + y2) * (1.0 + y2);
    };
    const auto den_p = [&](Complex y) {  // (1+y^2)^2 - q^2 (1-y^2)^2
        const Complex y2 = y * y;
        return (1.0 + y2) * (1.0 + y2) - q * q * (1.0 - y2) * (1.0 - y2);
    };
    const std::pair<Fn, Fn> identities[7] = {
        {[&](Complex y) { return std::atanh(2.0 * y / (p * (1.0 + y * y))); },
         [&](Complex y) { return 2.0 * p * (1.0 - y * y) / den_m(y); }},
        {[&](Complex y) { return std::atan(2.0 * y / (p * (1.0 - y * y))); },
         [&](Complex y) { return 2.0 * p * (1.0 + y * y) / den_p(y); }},
        {[&](Complex y) { return std::atanh(2.0 * q * y / (p * (1.0 - y * y))); },
         [&](Complex y) { return 2.0 * p * q * (1.0 + y * y) / den_m(y); }},
        {[&](Complex y) { return std::atan(2.0 * q * y / (p * (1.0 + y * y))); },
         [&](Complex y) { return 2.0 * p * q * (1.0 - y * y) / den_p(y); }},
        {[&](Complex y) { return std::atanh(q * (1.0 + y * y) / (1.0 - y * y)); },
         [&](Complex y) { return 4.0 * y * q / den_m(y); }},
        {[&](Complex y) { return std::atanh(q * (1.0 - y * y) / (1.0 + y * y)); },
         [&](Complex y) { return -4.0 * y * q / den_p(y); }},
        {[&](Complex y) { return std::atan(2.0 * I * q * y / (p * (1.0 - y * y))); },
         [&](Complex y) { return I * 2.0 * p * q * (1.0 + y * y) / den_m(y); }},
    };
    (void)family;

    int n = 0;
    while (n < 100) {
        const Complex y(rng.uniform(-0.85, 0.85), rng.uniform(-0.85, 0.85));
        // keep the sample clear of the branch points of the table entries
        const Complex y2 = y * y;
        if (std::abs(den_m(y)) < 0.2 || std::abs(den_p(y)) < 0.2 ||
            std::abs(1.0 - y2) < 0.2 || std::abs(1.0 + y2) < 0.2 || std::abs(y) < 0.05)
            continue;
        bool used = false;
        for (const auto& [f, df] : identities) {
            try {
                const Complex d = rng.uniform(0, 1) > 0.5 ? Complex(1, 0.3) : Complex(0.6, -1);
                const Complex dir = d / std::abs(d);
                const Complex fd =
                    (f(y - 2.0 * h * dir) - f(y + 2.0 * h * dir) +
                     8.0 * (f(y + h * dir) - f(y - h * dir))) / (12 * h * dir);
                const Complex want = df(y);
                if (!std::isfinite(fd.real()) || !std::isfinite(want.real())) continue;
                const double resid = std::abs(fd - want) / (1 + std::abs(want));
                if (resid < 10.0) {  // O(1/h) outliers are stencils across a branch cut
                    r.record(resid);
                    used = true;
                } else {
                    ++r.masked;
                }
            } catch (const Error&) {
                ++r.masked;
            }
        }
        if (used) ++n;
    }
    r.finish();
    return r;
}

CheckReport chk_antiderivative_ellipsoid(const CheckContext& c) {
    return antiderivative_check(Family::Ellipsoid, 0.5,
                                "antiderivative table, ellipsoid moduli", c);
}
CheckReport chk_antiderivative_hyp2(const CheckContext& c) {
    return antiderivative_check(Family::Hyperboloid2Sheet, 0.5625,
                                "antiderivative table, 2-sheeted hyperboloid moduli", c);
}
CheckReport chk_antiderivative_hyp1(const CheckContext& c) {
    return antiderivative_check(Family::Hyperboloid1Sheet, 0.4375,
                                "antiderivative table, 1-sheeted hyperboloid moduli", c);
}

CheckReport chk_weierstrass_composition(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "antiderivatives composed with y = sn - i cn reproduce the tower";
    r.tolerance = 1e-10;
    Rng rng(ctx.seed + 41);
    const double p2 = 0.5;
    const double p = std::sqrt(p2), q = std::sqrt(1 - p2);
    const Complex I(0, 1);
    int n = 0;
    while (n < 100) {
        const Complex z(rng.uniform(-1.5, 1.5), rng.uniform(-1.0, 1.0));
        try {
            const JacobiQuadruple J = jacobi_complex(z, p2);
            const Complex y = J.sn - I * J.cn;
            const auto Z = weierstrass_antiderivatives(y, p2, Family::Ellipsoid);
            const Vec3 tower = scherk_tower(z, p, q);
            r.record(std::abs(Z[0].real() - tower.x));
            r.record(std::abs(Z[1].real() - tower.y));
            r.record(std::abs(-Z[2].real() - tower.z));
            ++n;
        } catch (const Error&) {
            ++r.masked;
        }
    }
    r.finish();
    return r;
}

CheckReport chk_weierstrass_origin(const CheckContext&) {
    CheckReport r;
    r.anchor = "value (0, 0, (2/q) artanh q) at y = 0";
    r.tolerance = 1e-14;
    const double p2 = 0.36, q = std::sqrt(1 - p2);
    const auto Z = weierstrass_antiderivatives(Complex(0, 0), p2, Family::Ellipsoid);
    r.record(std::abs(Z[0]));
    r.record(std::abs(Z[1]));
    r.record(std::abs(Z[2] - Complex(2.0 / q * std::atanh(q))));
    r.finish();
    return r;
}

// ---------------------------------------------------------------- reinbek

struct ReinbekFixture {
    ReinbekFamily family;
    double a, b, c;
    double t1_lo, t1_hi, t2_lo, t2_hi;
};

ReinbekFixture reinbek_fixture(ReinbekFamily fam) {
    switch (fam) {
        case ReinbekFamily::Ellipsoid:
            return {fam, 1.6, 1.2, 0.9, 1.45, 2.55, 0.82, 1.43};
        case ReinbekFamily::Hyp2:
            return {fam, 1.5, 1.0, 0.8, 1.01, 2.24, -3.0, -0.65};
        default:
            return {fam, 1.2, 0.7, 1.1, -1.20, -0.50, -3.0, -1.22};
    }
}

double reinbek_quadric_residual(const ReinbekFixture& f, const Vec3& x) {
    const double X = x.x / f.a, Y = x.y / f.b, Z = x.z / f.c;
    switch (f.family) {
        case ReinbekFamily::Ellipsoid:
            return X * X + Y * Y + Z * Z - 1.0;
        case ReinbekFamily::Hyp2:
            return X * X + Y * Y - Z * Z - 1.0;
        default:
            return X * X - Y * Y - Z * Z - 1.0;
    }
}

CheckReport reinbek_onquadric(ReinbekFamily fam, const CheckContext& ctx, const char* anchor) {
    CheckReport r;
    r.anchor = anchor;
    r.tolerance = 1e-10;
    const ReinbekFixture f = reinbek_fixture(fam);
    Rng rng(ctx.seed + 50);
    for (int k = 0; k < 100; ++k) {
        EllipticCoordinates tc;
        tc.family = fam;
        tc.t1 = rng.uniform(f.t1_lo, f.t1_hi);
        tc.t2 = rng.uniform(f.t2_lo, f.t2_hi);
        const auto [x, xd] = reinbek_pair(tc, f.a, f.b, f.c);
        (void)xd;
        r.record(std::abs(reinbek_quadric_residual(f, x)));
    }
    r.finish();
    return r;
}

CheckReport reinbek_parallel(ReinbekFamily fam, const CheckContext& ctx, const char* anchor) {
    CheckReport r;
    r.anchor = anchor;
    r.tolerance = 1e-6;
    const ReinbekFixture f = reinbek_fixture(fam);
    Rng rng(ctx.seed + 51);
    const double h1 = 1e-6 * (f.t1_hi - f.t1_lo), h2 = 1e-6 * (f.t2_hi - f.t2_lo);
    int n = 0;
    while (n < 100) {
        EllipticCoordinates tc;
        tc.family = fam;
        tc.t1 = rng.uniform(f.t1_lo + 0.02, f.t1_hi - 0.02);
        tc.t2 = rng.uniform(f.t2_lo + 0.02, f.t2_hi - 0.02);
        try {
            const auto at = [&](double t1, double t2) {
                EllipticCoordinates c2 = tc;
                c2.t1 = t1;
                c2.t2 = t2;
                return reinbek_pair(c2, f.a, f.b, f.c);
            };
            const auto [xp1, dp1] = at(tc.t1 + h1, tc.t2);
            const auto [xm1, dm1] = at(tc.t1 - h1, tc.t2);
            const auto [xp2, dp2] = at(tc.t1, tc.t2 + h2);
            const auto [xm2, dm2] = at(tc.t1, tc.t2 - h2);
            const Vec3 xt1 = (xp1 - xm1) / (2 * h1), xdt1 = (dp1 - dm1) / (2 * h1);
            const Vec3 xt2 = (xp2 - xm2) / (2 * h2), xdt2 = (dp2 - dm2) / (2 * h2);
            const double c1 = norm(cross(xt1, xdt1)) / (norm(xt1) * norm(xdt1));
            const double c2 = norm(cross(xt2, xdt2)) / (norm(xt2) * norm(xdt2));
            r.record(c1);
            r.record(c2);
            // opposite relative orientation in exactly one slot
            const double r1 = dot(xdt1, xt1) / dot(xt1, xt1);
            const double r2 = dot(xdt2, xt2) / dot(xt2, xt2);
            r.record(r1 * r2 < 0 ? 0.0 : 1.0);
            ++n;
        } catch (const Error&) {
            ++r.masked;
        }
    }
    r.finish();
    return r;
}

CheckReport chk_reinbek_orthogonal_conjugate(const CheckContext& ctx) {
    CheckReport r;
    r.anchor = "elliptic coordinates are orthogonal conjugate parameters";
    r.tolerance = 1e-6;
    Rng rng(ctx.seed + 52);
    const ReinbekFixture f = reinbek_fixture(ReinbekFamily::Ellipsoid);
    const double h1 = 2e-5, h2 = 2e-5;
    int n = 0;
    while (n < 100) {
        EllipticCoordinates tc;
        tc.family = f.family;
        tc.t1 = rng.uniform(f.t1_lo + 0.05, f.t1_hi - 0.05);
        tc.t2 = rng.uniform(f.t2_lo + 0.05, f.t2_hi - 0.05);
        try {
            const auto at = [&](double t1, double t2) {
                EllipticCoordinates c2 = tc;
                c2.t1 = t1;
                c2.t2 = t2;
                return reinbek_pair(c2, f.a, f.b, f.c).first;
            };
            const Vec3 x0 = at(tc.t1, tc.t2);
            const Vec3 xt1 = (at(tc.t1 + h1, tc.t2) - at(tc.t1 - h1, tc.t2)) / (2 * h1);
            const Vec3 xt2 = (at(tc.t1, tc.t2 + h2) - at(tc.t1, tc.t2 - h2)) / (2 * h2);
            const Vec3 x12 = (at(tc.t1 + h1, tc.t2 + h2) - at(tc.t1 + h1, tc.t2 - h2) -
                              at(tc.t1 - h1, tc.t2 + h2) + at(tc.t1 - h1, tc.t2 - h2)) /
                             (4 * h1 * h2);
            (void)x0;
            r.record(std::abs(dot(xt1, xt2)) / (norm(xt1) * norm(xt2)));
            r.record(std::abs(det3(x12, xt1, xt2)) /
                     ((1 + norm(x12)) * norm(xt1) * norm(xt2)));
            ++n;
        } catch (const Error&) {
            ++r.masked;
        }
    }
    r.finish();
    return r;
}

CheckReport chk_reinbek_onquadric_ellipsoid(const CheckContext& c) {
    return reinbek_onquadric(ReinbekFamily::Ellipsoid, c,
                             "elliptic-coordinate ellipsoid lies on its quadric");
}
CheckReport chk_reinbek_onquadric_hyp2(const CheckContext& c) {
    return reinbek_onquadric(ReinbekFamily::Hyp2, c,
                             "elliptic-coordinate hyperboloid (one timelike axis) on-quadric");
}
CheckReport chk_reinbek_onquadric_hyp1(const CheckContext& c) {
    return reinbek_onquadric(ReinbekFamily::Hyp1, c,
                             "elliptic-coordinate hyperboloid (two minus signs) on-quadric");
}
CheckReport chk_reinbek_parallel_ellipsoid(const CheckContext& c) {
    return reinbek_parallel(ReinbekFamily::Ellipsoid, c,
                            "dual tangents parallel slot by slot (ellipsoid)");
}
CheckReport chk_reinbek_parallel_hyp2(const CheckContext& c) {
    return reinbek_parallel(ReinbekFamily::Hyp2, c,
                            "dual tangents parallel slot by slot (hyp2 item)");
}
CheckReport chk_reinbek_parallel_hyp1(const CheckContext& c) {
    return reinbek_parallel(ReinbekFamily::Hyp1, c,
                            "dual tangents parallel slot by slot (hyp1 item)");
}

// ------------------------------------------------------------- verify self

CheckReport chk_fd_jet_polynomial(const CheckContext&) {
    CheckReport r;
    r.anchor = "central differences are exact on low-degree polynomials";
    r.tolerance = 1e-9;
    const auto f = [](double u, double v) { return Vec3{u, v, 1 + 2 * u - 3 * v + u * v}; };
    const SurfaceJet J = fd_jet(f, 0.3, -0.7, 1e-3, 2);
    r.record(norm(J.x_u - Vec3{1, 0, 2 - 0.7}));
    r.record(norm(J.x_v - Vec3{0, 1, -3 + 0.3}));
    r.record(norm(J.x_uv - Vec3{0, 0, 1}));
    r.record(norm(J.x_uu));
    r.record(norm(J.x_vv));
    r.finish();
    return r;
}

CheckReport chk_fd_jet_closed_form(const CheckContext&) {
    CheckReport r;
    r.anchor = "closed-form jets agree with finite differences";
    r.tolerance = 1e-6;
    const ModuliTriple& m = fixture_moduli("ellipsoid-e");
    const auto pts = point_sampler(m);
    const auto jets = jet_sampler(m);
    for (auto [u, v] : {std::pair{0.4, 0.3}, {1.0, -0.8}, {-1.3, 0.6}}) {
        const SurfaceJet C = jets(u, v);
        const SurfaceJet F = fd_jet(pts, u, v, 1e-4, 4);
        r.record(norm(C.x_u - F.x_u));
        r.record(norm(C.x_v - F.x_v));
        r.record(norm(C.x_uv - F.x_uv));
        r.record(norm(C.x_uu - F.x_uu));
    }
    r.finish();
    return r;
}

CheckReport chk_fd_jet_order(const CheckContext&) {
    CheckReport r;
    r.anchor = "halving the step reduces the error about fourfold (second order)";
    r.tolerance = 0.5;
    const ModuliTriple& m = fixture_moduli("ellipsoid-e");
    const auto pts = point_sampler(m);
    const auto jets = jet_sampler(m);
    double ratio_worst = 0;
    for (auto [u, v] : {std::pair{0.5, 0.4}, {-0.9, 0.7}}) {
        const SurfaceJet truth = jets(u, v);
        const double h = 2e-3;
        const SurfaceJet a = fd_jet(pts, u, v, h, 2);
        const SurfaceJet b = fd_jet(pts, u, v, h / 2, 2);
        const double ea = norm(a.x_u - truth.x_u) + norm(a.x_v - truth.x_v);
        const double eb = norm(b.x_u - truth.x_u) + norm(b.x_v - truth.x_v);
        const double ratio = ea / eb;
        ratio_worst = std::max(ratio_worst, std::abs(ratio - 4.0) / 4.0);
    }
    r.record(ratio_worst);
    r.finish();
    return r;
}

// -------------------------------------------------------------- registry

void register_all() {
    auto& reg = registry();
    if (!reg.empty()) return;
    const auto add = [&](const char* name, Maker fn) { reg.push_back({name, fn}); };

    add("jacobi-pythagorean", chk_jacobi_pythagorean);
    add("jacobi-amplitude-oracle", chk_jacobi_amplitude_oracle);
    add("complete-elliptic-integral", chk_complete_elliptic_integral);
    add("jacobi-imaginary-argument", chk_jacobi_imaginary_argument);
    add("jacobi-double-periodicity", chk_jacobi_double_periodicity);
    add("jacobi-complex-pythagorean", chk_jacobi_complex_pythagorean);
    add("jacobi-complex-ode", chk_jacobi_complex_ode);
    add("jacobi-amplitude-exponential", chk_jacobi_amplitude_exponential);
    add("jacobi-converted-moduli", chk_jacobi_converted_moduli);

    add("lorentz-ring-axioms", chk_lorentz_ring);
    add("lorentz-modulus", chk_lorentz_modulus);
    add("l-extend-restriction", chk_l_extend_restriction);
    add("l-extend-homomorphism", chk_l_extend_homomorphism);
    add("l-extend-derivative", chk_l_extend_derivative);
    add("para-cr-extension", chk_para_cr_extension);
    add("para-cr-j-multiple", chk_para_cr_j_multiple);
    add("para-cr-negative-control", chk_para_cr_negative);

    add("l-jacobi-pythagorean", chk_l_jacobi_pythagorean);
    add("l-jacobi-ode", chk_l_jacobi_ode);
    add("l-jacobi-periodicity", chk_l_jacobi_periodicity);
    add("y-hyp1-restriction", chk_y_hyp1_restriction);
    add("y-hyp1-ode", chk_y_hyp1_ode);
    add("para-cr-y-hyp1", chk_para_cr_y_hyp1);

    add("ellipsoid-membership", [](const CheckContext&) { return surface_check("ellipsoid-e", 0); });
    add("ellipsoid-orthogonality", [](const CheckContext&) { return surface_check("ellipsoid-e", 1); });
    add("ellipsoid-conjugacy", [](const CheckContext&) { return surface_check("ellipsoid-e", 2); });
    add("hyp2-membership", [](const CheckContext&) { return surface_check("hyp2-m-i", 0); });
    add("hyp2-orthogonality", [](const CheckContext&) { return surface_check("hyp2-m-i", 1); });
    add("hyp2-conjugacy", [](const CheckContext&) { return surface_check("hyp2-m-i", 2); });
    add("hyp1-membership", [](const CheckContext&) { return surface_check("hyp1-m-i", 0); });
    add("hyp1-orthogonality", [](const CheckContext&) { return surface_check("hyp1-m-i", 1); });
    add("hyp1-conjugacy", [](const CheckContext&) { return surface_check("hyp1-m-i", 2); });
    add("mink-ellipsoid-membership", [](const CheckContext&) { return surface_check("ellipsoid-m", 0); });
    add("mink-ellipsoid-orthogonality", [](const CheckContext&) { return surface_check("ellipsoid-m", 1); });
    add("mink-ellipsoid-conjugacy", [](const CheckContext&) { return surface_check("ellipsoid-m", 2); });
    add("surface-realness", chk_surface_realness);

    add("umbilic-branch-ellipsoid", chk_umbilic_branch_ellipsoid);
    add("umbilic-branch-hyp1-census", chk_umbilic_branch_hyp1);
    add("umbilic-unitary-no-umbilics", chk_umbilic_unitary);
    add("umbilic-ordering-chain", chk_umbilic_ordering_chain);
    add("umbilic-net-degeneracy", chk_umbilic_net_degeneracy);

    add("degenerate-line-mink-ellipsoid", chk_degenerate_line_ellipsoid);
    add("degenerate-line-hyp2", chk_degenerate_line_hyp2);
    add("degenerate-line-euclidean-control", chk_degenerate_line_control);
    add("degenerate-line-power", chk_degenerate_line_power);
    add("causal-decomposition", chk_causal_decomposition);

    add("revolution-catenoid", chk_revolution_catenoid);
    add("revolution-christoffel", chk_revolution_christoffel);

    add("scherk-implicit", chk_scherk_implicit);
    add("hyp2-implicit-case-i", [](const CheckContext&) {
        return implicit_check("hyp2-m-i", "q^2 cos(p x1) + cosh(pq x2) - p^2 cosh(q x3) = 0");
    });
    add("hyp2-implicit-case-iii", [](const CheckContext&) {
        return implicit_check("hyp2-m-iii", "q^2 cos(p x1) + cos(pq x2/i) - p^2 cos(q x3/i) = 0");
    });
    add("hyp1-implicit-case-i", [](const CheckContext&) {
        return implicit_check("hyp1-m-i", "q^2 cos(p x1) + cos(pq x2) - p^2 cosh(q x3) = 0");
    });
    add("hyp1-implicit-case-ii", [](const CheckContext&) {
        return implicit_check("hyp1-m-ii",
                              "q^2 cosh(p x1/i) - cosh(pq x2/i) + p^2 cosh(q x3) = 0");
    });
    add("implicit-origin", chk_implicit_origin);

    add("pair-ellipsoid", chk_pair_ellipsoid);
    add("pair-hyp2-minkowski", chk_pair_hyp2_minkowski);
    add("pair-hyp2-euclidean", chk_pair_hyp2_euclidean);
    add("pair-hyp1-minkowski", chk_pair_hyp1_minkowski);
    add("pair-hyp1-euclidean", chk_pair_hyp1_euclidean);
    add("pair-catenoid", chk_pair_catenoid);
    add("pair-negative-control", chk_pair_negative_control);

    add("dual-oracle-ellipsoid", chk_oracle_ellipsoid);
    add("dual-oracle-hyp2-minkowski", chk_oracle_hyp2m);
    add("dual-oracle-hyp2-euclidean", chk_oracle_hyp2e);
    add("dual-oracle-hyp1-minkowski", chk_oracle_hyp1m);
    add("dual-oracle-hyp1-euclidean", chk_oracle_hyp1e);
    add("dual-path-independence", chk_path_independence);
    add("dual-step-stability", chk_step_stability);
    add("dual-of-dual", chk_dual_of_dual);
    add("conformality-transfer", chk_conformality_transfer);
    add("dual-harmonicity", chk_dual_harmonicity);
    add("dual-wave-equation", chk_dual_wave);
    add("hyp2-dual-period-case-iii", chk_hyp2_dual_period);

    add("antiderivative-ellipsoid", chk_antiderivative_ellipsoid);
    add("antiderivative-hyp2", chk_antiderivative_hyp2);
    add("antiderivative-hyp1", chk_antiderivative_hyp1);
    add("weierstrass-composition", chk_weierstrass_composition);
    add("weierstrass-origin", chk_weierstrass_origin);

    add("reinbek-onquadric-ellipsoid", chk_reinbek_onquadric_ellipsoid);
    add("reinbek-onquadric-hyp2", chk_reinbek_onquadric_hyp2);
    add("reinbek-onquadric-hyp1", chk_reinbek_onquadric_hyp1);
    add("reinbek-parallel-ellipsoid", chk_reinbek_parallel_ellipsoid);
    add("reinbek-parallel-hyp2", chk_reinbek_parallel_hyp2);
    add("reinbek-parallel-hyp1", chk_reinbek_parallel_hyp1);
    add("reinbek-orthogonal-conjugate", chk_reinbek_orthogonal_conjugate);

    add("fd-jet-polynomial", chk_fd_jet_polynomial);
    add("fd-jet-closed-form", chk_fd_jet_closed_form);
    add("fd-jet-order", chk_fd_jet_order);
}

}  // namespace

std::vector<std::string> check_names() {
    register_all();
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const auto& e : registry()) names.push_back(e.name);
    return names;
}

CheckReport run_check(const std::string& name, const CheckContext& ctx) {
    register_all();
    for (const auto& e : registry()) {
        if (e.name == name) {
            CheckReport r = e.make(ctx);
            r.check = name;
            return r;
        }
    }
    throw DomainError("unknown check: " + name);
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const CheckContext& ctx) {
    register_all();
    std::vector<CheckReport> out;
    if (names.empty()) {
        for (const auto& e : registry()) {
            CheckReport r = e.make(ctx);
            r.check = e.name;
            out.push_back(std::move(r));
        }
        return out;
    }
    for (const auto& n : names) out.push_back(run_check(n, ctx));
    return out;
}

}  // namespace qdual
