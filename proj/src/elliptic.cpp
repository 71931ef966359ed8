#include "qdual/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdual {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr int AGM_MAX = 32;

double clamp1(double x) { return std::max(-1.0, std::min(1.0, x)); }

// Descending-Landen evaluation of the amplitude on [0, K].
double am_agm(double u, double p) {
    double a[AGM_MAX], c[AGM_MAX];
    double an = 1.0, bn = std::sqrt((1.0 - p) * (1.0 + p)), cn = p;
    int n = 0;
    a[0] = an;
    c[0] = cn;
    while (std::abs(cn) > 1e-16 * an && n + 1 < AGM_MAX) {
        const double am = 0.5 * (an + bn);
        const double gm = std::sqrt(an * bn);
        cn = 0.5 * (an - bn);
        an = am;
        bn = gm;
        ++n;
        a[n] = an;
        c[n] = cn;
    }
    double phi = std::ldexp(an * u, n);
    for (int k = n; k >= 1; --k)
        phi = 0.5 * (phi + std::asin(clamp1(c[k] / a[k] * std::sin(phi))));
    return phi;
}

}  // namespace

double complete_K(double p) {
    if (!(p >= 0.0) || p >= 1.0)
        throw DomainError("complete_K: modulus must satisfy 0 <= p < 1");
    double a = 1.0, b = std::sqrt((1.0 - p) * (1.0 + p));
    for (int i = 0; i < AGM_MAX && std::abs(a - b) > 1e-17 * a; ++i) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return PI / (2.0 * a);
}

JacobiReal jacobi_real(double u, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("jacobi_real: modulus must lie in [0, 1]");
    JacobiReal r;
    if (p < 1e-15) {
        r.am = u;
        r.sn = std::sin(u);
        r.cn = std::cos(u);
        r.dn = 1.0;
        return r;
    }
    if (1.0 - p < 1e-15) {      // p = 1: gudermannian limit, no real period
        r.sn = std::tanh(u);
        r.cn = r.dn = 1.0 / std::cosh(u);
        r.am = std::asin(r.sn);
        return r;
    }

    // Quarter-period reductions keep the AGM recursion on [0, K], where the
    // principal arcsin branch is the right one.
    const double K = complete_K(p);
    const double k4 = std::floor(u / (4.0 * K));
    double ur = u - 4.0 * K * k4;
    double am_shift = 2.0 * PI * k4;
    double s_sign = 1.0, c_sign = 1.0;
    bool reflect = false;
    if (ur >= 2.0 * K) {        // am(u + 2K) = am(u) + pi
        ur -= 2.0 * K;
        am_shift += PI;
        s_sign = -s_sign;
        c_sign = -c_sign;
    }
    if (ur > K) {               // am(2K - u) = pi - am(u)
        ur = 2.0 * K - ur;
        reflect = true;
    }

    const double phi = am_agm(ur, p);
    const double sn = std::sin(phi);
    const double cn = reflect ? -std::cos(phi) : std::cos(phi);
    r.sn = s_sign * sn;
    r.cn = c_sign * cn;
    r.dn = std::sqrt(std::max(0.0, 1.0 - p * p * r.sn * r.sn));
    r.am = am_shift + (reflect ? PI - phi : phi);
    return r;
}

JacobiTriple jacobi_sncndn(double u, double p2) {
    JacobiTriple t;
    if (p2 >= 0.0 && p2 <= 1.0) {
        const JacobiReal r = jacobi_real(u, std::sqrt(p2));
        t.sn = r.sn;
        t.cn = r.cn;
        t.dn = r.dn;
        return t;
    }
    if (p2 > 1.0) {
        // Reciprocal modulus: sn_M(u) = sn_{1/M}(Mu)/M, cn_M = dn_{1/M}(Mu),
        // dn_M = cn_{1/M}(Mu) with M = sqrt(p2).
        const double M = std::sqrt(p2);
        const JacobiReal r = jacobi_real(M * u, 1.0 / M);
        t.sn = r.sn / M;
        t.cn = r.dn;
        t.dn = r.cn;
        return t;
    }
    // Imaginary modulus p = i*beta: evaluate at p' = beta/sqrt(1+beta^2),
    // argument u/q' with q' = 1/sqrt(1+beta^2).
    const double denom = std::sqrt(1.0 - p2);  // sqrt(1 + beta^2)
    const double pp = std::sqrt(-p2) / denom;
    const double qp = 1.0 / denom;
    const JacobiReal r = jacobi_real(u / qp, pp);
    t.sn = qp * r.sn / r.dn;
    t.cn = r.cn / r.dn;
    t.dn = 1.0 / r.dn;
    return t;
}

double period_u(double p2) {
    if (p2 >= 0.0 && p2 < 1.0) return 4.0 * complete_K(std::sqrt(p2));
    if (p2 >= 1.0) {
        if (p2 == 1.0) return std::numeric_limits<double>::infinity();
        const double M = std::sqrt(p2);
        return 4.0 * complete_K(1.0 / M) / M;
    }
    const double denom = std::sqrt(1.0 - p2);
    return 4.0 * complete_K(std::sqrt(-p2) / denom) / denom;
}

EllipticModulus EllipticModulus::from_p2(double p_squared) {
    EllipticModulus m;
    const double q_squared = 1.0 - p_squared;
    m.p = p_squared >= 0 ? Complex(std::sqrt(p_squared), 0)
                         : Complex(0, std::sqrt(-p_squared));
    m.q = q_squared >= 0 ? Complex(std::sqrt(q_squared), 0)
                         : Complex(0, std::sqrt(-q_squared));
    if (p_squared < 0)
        m.case_tag = ModulusCase::II;
    else if (p_squared > 1)
        m.case_tag = ModulusCase::III;
    else
        m.case_tag = ModulusCase::I;
    return m;
}

EllipticModulus EllipticModulus::from_p(Complex p) {
    const double scale = std::abs(p);
    if (scale == 0.0) return from_p2(0.0);
    if (std::abs(p.imag()) <= 1e-12 * scale) return from_p2(p.real() * p.real());
    if (std::abs(p.real()) <= 1e-12 * scale) return from_p2(-p.imag() * p.imag());
    throw DomainError("EllipticModulus: p must be real or purely imaginary");
}

ModulusConversion modulus_convert(Complex z, Complex p) {
    const double scale = std::abs(p);
    if (scale == 0.0) return {ConversionKind::None, z, 0.0, 1.0};
    ModulusConversion mc;
    if (std::abs(p.imag()) <= 1e-12 * scale) {
        const double pr = std::abs(p.real());
        if (pr < 1.0) {
            mc.kind = ConversionKind::None;
            mc.p_prime = pr;
            mc.scale = 1.0;
        } else {
            mc.kind = ConversionKind::Reciprocal;
            mc.p_prime = 1.0 / pr;
            mc.scale = pr;
        }
    } else if (std::abs(p.real()) <= 1e-12 * scale) {
        const double beta = std::abs(p.imag());
        const double denom = std::sqrt(1.0 + beta * beta);
        mc.kind = ConversionKind::Imaginary;
        mc.p_prime = beta / denom;
        mc.scale = denom;  // z' = z * sqrt(1 + beta^2) = z / q'
    } else {
        throw DomainError("modulus_convert: p must be real or purely imaginary");
    }
    mc.z_prime = z * mc.scale;
    return mc;
}

namespace {

// sn, cn, dn at complex argument for real modulus p in [0,1]: argument-sum
// assembly from the real functions of u (modulus p) and v (modulus q).
struct BaseEval {
    Complex sn, cn, dn;
    double delta;     // assembly denominator, vanishes at lattice poles
    JacobiReal tu, tv;
};

BaseEval base_complex(double u, double v, double p) {
    BaseEval e;
    const double p2 = p * p;
    const double q = std::sqrt(std::max(0.0, 1.0 - p2));
    e.tu = jacobi_real(u, p);
    e.tv = jacobi_real(v, q);
    const double s = e.tu.sn, c = e.tu.cn, d = e.tu.dn;
    const double s1 = e.tv.sn, c1 = e.tv.cn, d1 = e.tv.dn;
    e.delta = c1 * c1 + p2 * s * s * s1 * s1;
    if (e.delta < 1e-18)
        throw PoleError("jacobi_complex: argument within guard radius of a lattice pole");
    const Complex I(0, 1);
    e.sn = (s * d1 + I * (c * d * s1 * c1)) / e.delta;
    e.cn = (c * c1 - I * (s * d * s1 * d1)) / e.delta;
    e.dn = (d * c1 * d1 - I * (p2 * s * c * s1)) / e.delta;
    return e;
}

// e^{i am} at one point; used to continue am off the real axis.
Complex am_exponential(double u, double v, double p) {
    const BaseEval e = base_complex(u, v, p);
    return e.cn + Complex(0, 1) * e.sn;
}

// Continue arg(e^{i am}) along the straight segment between two parameter
// points, starting from a known angle at the first.
double continue_arg(double u0, double v0, double u1, double v1, double p,
                    double theta0, int steps) {
    Complex prev = am_exponential(u0, v0, p);
    double theta = theta0;
    for (int k = 1; k <= steps; ++k) {
        const double t = double(k) / steps;
        const Complex cur = am_exponential(u0 + (u1 - u0) * t, v0 + (v1 - v0) * t, p);
        if (!(std::abs(cur) > 1e-9 && std::abs(cur) < 1e9))
            throw PoleError("jacobi_complex: amplitude continuation crosses a pole");
        theta += std::arg(cur / prev);
        prev = cur;
    }
    return theta;
}

Complex am_complex(double u, double v, double p) {
    const JacobiReal ru = jacobi_real(u, p);
    if (v == 0.0) return Complex(ru.am, 0);
    const double q = std::sqrt(std::max(0.0, 1.0 - p * p));
    const double Kq = (q < 1.0) ? complete_K(q) : PI / 2;
    const int steps = 2 + int(std::ceil(std::abs(v) / (0.25 * Kq)));
    double theta;
    try {
        theta = continue_arg(u, 0.0, u, v, p, ru.am, steps);
    } catch (const PoleError&) {
        // Straight path grazes a pole column: dog-leg through u + eps.
        const double Kp = complete_K(p);
        const double eps = 0.25 * Kp;
        const JacobiReal rs = jacobi_real(u + eps, p);
        double th = continue_arg(u + eps, 0.0, u + eps, v, p, rs.am, steps);
        theta = continue_arg(u + eps, v, u, v, p, th, steps);
    }
    const Complex Y = am_exponential(u, v, p);
    return Complex(theta, -std::log(std::abs(Y)));
}

JacobiQuadruple complex_impl(Complex z, double p2);

JacobiQuadruple assemble_base(Complex z, double p) {
    JacobiQuadruple J;
    if (p < 1e-15) {
        J.sn = std::sin(z);
        J.cn = std::cos(z);
        J.dn = 1.0;
        J.am = z;
        return J;
    }
    const BaseEval e = base_complex(z.real(), z.imag(), p);
    J.sn = e.sn;
    J.cn = e.cn;
    J.dn = e.dn;
    J.am = am_complex(z.real(), z.imag(), p);
    return J;
}

JacobiQuadruple complex_impl(Complex z, double p2) {
    if (p2 >= 0.0 && p2 <= 1.0) return assemble_base(z, std::sqrt(p2));

    // normalize to a real modulus and reassemble the triple
    const Complex p = p2 > 1.0 ? Complex(std::sqrt(p2), 0) : Complex(0, std::sqrt(-p2));
    const ModulusConversion mc = modulus_convert(z, p);
    const JacobiQuadruple inner = complex_impl(mc.z_prime, mc.p_prime * mc.p_prime);
    JacobiQuadruple J;
    J.am = std::numeric_limits<double>::quiet_NaN();  // fixed up by the caller
    if (mc.kind == ConversionKind::Reciprocal) {
        J.sn = inner.sn / mc.scale;
        J.cn = inner.dn;
        J.dn = inner.cn;
        return J;
    }
    if (std::abs(inner.dn) < 1e-9)
        throw PoleError("jacobi_complex: imaginary-modulus conversion at a dn zero");
    const double qp = 1.0 / mc.scale;
    J.sn = qp * inner.sn / inner.dn;
    J.cn = inner.cn / inner.dn;
    J.dn = 1.0 / inner.dn;
    return J;
}

// am for converted moduli: continue -i log(cn + i sn) from 0 along the real
// axis and then vertically, re-evaluating the converted functions.
Complex am_converted(Complex z, double p2) {
    const auto W = [&](double uu, double vv) {
        const JacobiQuadruple q = complex_impl(Complex(uu, vv), p2);
        return q.cn + Complex(0, 1) * q.sn;
    };
    const double u = z.real(), v = z.imag();
    const double Tu = period_u(p2);
    const int su = 2 + int(std::ceil(std::abs(u) / (0.05 * Tu)));
    const int sv = 2 + int(std::ceil(std::abs(v) / (0.05 * Tu)));
    double theta = 0.0;
    Complex prev = W(0, 0);
    for (int k = 1; k <= su; ++k) {
        const Complex cur = W(u * k / su, 0);
        theta += std::arg(cur / prev);
        prev = cur;
    }
    for (int k = 1; k <= sv; ++k) {
        const Complex cur = W(u, v * k / sv);
        if (!(std::abs(cur) > 1e-9 && std::abs(cur) < 1e9))
            throw PoleError("jacobi_complex: amplitude continuation crosses a pole");
        theta += std::arg(cur / prev);
        prev = cur;
    }
    return Complex(theta, -std::log(std::abs(prev)));
}

}  // namespace

JacobiQuadruple jacobi_complex(Complex z, double p2) {
    JacobiQuadruple J = complex_impl(z, p2);
    if (!(p2 >= 0.0 && p2 <= 1.0)) J.am = am_converted(z, p2);
    return J;
}

JacobiQuadruple jacobi_complex(Complex z, const EllipticModulus& m) {
    return jacobi_complex(z, m.p2());
}

}  // namespace qdual
