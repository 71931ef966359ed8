#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "qdual/elliptic.hpp"

using namespace qdual;
using std::abs;

namespace {
const double PI = 3.14159265358979323846;
const double INV_SQRT2 = 0.7071067811865476;
}  // namespace

TEST_CASE("complete_K special and frozen values") {
    CHECK(complete_K(0.0) == doctest::Approx(PI / 2).epsilon(1e-15));
    // frozen from the defining integral, evaluated by adaptive quadrature
    CHECK(complete_K(INV_SQRT2) == doctest::Approx(1.8540746773013719).epsilon(1e-14));
    CHECK(complete_K(0.5) == doctest::Approx(1.6857503548125963).epsilon(1e-14));
    CHECK_THROWS_AS(complete_K(1.0), DomainError);
    CHECK_THROWS_AS(complete_K(1.5), DomainError);
    CHECK_THROWS_AS(complete_K(-0.2), DomainError);
}

TEST_CASE("complete_K agrees with the quadrature oracle") {
    for (double p : {0.05, 0.3, 0.5, INV_SQRT2, 0.8, 0.95}) {
        CHECK(complete_K(p) == doctest::Approx(oracles::K_quadrature(p)).epsilon(1e-13));
    }
}

TEST_CASE("jacobi_real at distinguished points") {
    const JacobiReal r0 = jacobi_real(0.0, 0.7);
    CHECK(r0.sn == 0.0);
    CHECK(r0.cn == 1.0);
    CHECK(r0.dn == 1.0);
    CHECK(r0.am == 0.0);

    // p = 0 reduces to circular functions
    const JacobiReal rc = jacobi_real(1.234, 0.0);
    CHECK(rc.sn == doctest::Approx(std::sin(1.234)).epsilon(1e-15));
    CHECK(rc.cn == doctest::Approx(std::cos(1.234)).epsilon(1e-15));
    CHECK(rc.dn == 1.0);
    CHECK(rc.am == doctest::Approx(1.234).epsilon(1e-15));

    // u = K_p: sn = 1, cn = 0, dn = q, am = pi/2
    const double K = complete_K(0.8);
    const JacobiReal rk = jacobi_real(K, 0.8);
    CHECK(rk.sn == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(abs(rk.cn) < 1e-13);
    CHECK(rk.dn == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(rk.am == doctest::Approx(PI / 2).epsilon(1e-13));

    // p = 1: hyperbolic limit
    const JacobiReal rh = jacobi_real(0.9, 1.0);
    CHECK(rh.sn == doctest::Approx(std::tanh(0.9)).epsilon(1e-15));
    CHECK(rh.cn == doctest::Approx(1.0 / std::cosh(0.9)).epsilon(1e-15));
}

TEST_CASE("jacobi_real frozen reference samples") {
    // frozen from an independent implementation of the defining ODE
    const JacobiReal a = jacobi_real(0.7, 0.6);
    CHECK(a.sn == doctest::Approx(0.6299171153234867).epsilon(1e-13));
    CHECK(a.cn == doctest::Approx(0.7766623641084568).epsilon(1e-13));
    CHECK(a.dn == doctest::Approx(0.9258258983286833).epsilon(1e-13));
    CHECK(a.am == doctest::Approx(0.6814464878851569).epsilon(1e-13));

    const JacobiReal b = jacobi_real(1.3, 0.8);
    CHECK(b.sn == doctest::Approx(0.9055026584496213).epsilon(1e-13));
    CHECK(b.cn == doctest::Approx(0.4243405890798904).epsilon(1e-13));
    CHECK(b.dn == doctest::Approx(0.6893776604634267).epsilon(1e-13));

    const JacobiReal c = jacobi_real(2.5, 0.3);
    CHECK(c.sn == doctest::Approx(0.6526933290826794).epsilon(1e-13));
    CHECK(c.cn == doctest::Approx(-0.7576222133563463).epsilon(1e-13));

    const JacobiReal d = jacobi_real(-1.1, 0.95);
    CHECK(d.sn == doctest::Approx(-0.8102898213541442).epsilon(1e-13));
    CHECK(d.cn == doctest::Approx(0.586029355416492).epsilon(1e-13));
    CHECK(d.dn == doctest::Approx(0.6383149229670312).epsilon(1e-13));
}

TEST_CASE("amplitude matches the ODE oracle on [0, 2K]") {
    for (double p : {0.3, INV_SQRT2, 0.95}) {
        const double K = complete_K(p);
        for (int i = 1; i <= 8; ++i) {
            const double u = 2.0 * K * i / 8;
            CHECK(jacobi_real(u, p).am == doctest::Approx(oracles::am_ode(u, p)).epsilon(1e-9));
        }
    }
}

TEST_CASE("pythagorean laws at random real arguments") {
    oracles::Rng rng(101);
    for (double p : {0.3, INV_SQRT2, 0.95}) {
        const double K = complete_K(p);
        for (int k = 0; k < 300; ++k) {
            const double u = rng.uniform(-2 * K, 2 * K);
            const JacobiReal r = jacobi_real(u, p);
            CHECK(abs(r.sn * r.sn + r.cn * r.cn - 1.0) <= 1e-12);
            CHECK(abs(r.dn * r.dn + p * p * r.sn * r.sn - 1.0) <= 1e-12);
            CHECK(r.cn == doctest::Approx(std::cos(r.am)).epsilon(1e-12));
            CHECK(r.sn == doctest::Approx(std::sin(r.am)).epsilon(1e-12));
        }
    }
}

TEST_CASE("periodicity and amplitude quasi-periodicity") {
    const double p = 0.6, K = complete_K(p);
    oracles::Rng rng(55);
    for (int k = 0; k < 50; ++k) {
        const double u = rng.uniform(-K, K);
        const JacobiReal r = jacobi_real(u, p);
        const JacobiReal rp = jacobi_real(u + 4 * K, p);
        CHECK(rp.sn == doctest::Approx(r.sn).epsilon(1e-12));
        CHECK(rp.cn == doctest::Approx(r.cn).epsilon(1e-12));
        CHECK(rp.dn == doctest::Approx(r.dn).epsilon(1e-12));
        CHECK(rp.am == doctest::Approx(r.am + 2 * PI).epsilon(1e-12));
    }
}

TEST_CASE("jacobi_complex restricts to jacobi_real on the real axis") {
    const double p = 0.75;
    for (double u : {-1.7, 0.0, 0.4, 2.9}) {
        const JacobiQuadruple J = jacobi_complex(Complex(u, 0), p * p);
        const JacobiReal r = jacobi_real(u, p);
        CHECK(abs(J.sn - Complex(r.sn)) < 1e-14);
        CHECK(abs(J.cn - Complex(r.cn)) < 1e-14);
        CHECK(abs(J.dn - Complex(r.dn)) < 1e-14);
        CHECK(abs(J.am - Complex(r.am)) < 1e-14);
    }
}

TEST_CASE("imaginary argument conversion formulas") {
    const double p = 0.6, q = 0.8;
    oracles::Rng rng(77);
    const double Kq = complete_K(q);
    for (int k = 0; k < 100; ++k) {
        const double v = rng.uniform(-0.9 * Kq, 0.9 * Kq);
        const JacobiQuadruple J = jacobi_complex(Complex(0, v), p * p);
        const JacobiReal r = jacobi_real(v, q);
        const Complex I(0, 1);
        CHECK(abs(J.sn - I * r.sn / r.cn) <= 1e-10 * (1 + abs(J.sn)));
        CHECK(abs(J.cn - Complex(1.0 / r.cn)) <= 1e-10 * (1 + abs(J.cn)));
        CHECK(abs(J.dn - Complex(r.dn / r.cn)) <= 1e-10 * (1 + abs(J.dn)));
    }
}

TEST_CASE("exponential of the complex amplitude") {
    // e^{i am(u+iv)} = (cn_p u cn_q v + i sn_p u dn_q v) / (1 + dn_p u sn_q v)
    const double p = 0.6, q = 0.8;
    const double Kp = complete_K(p), Kq = complete_K(q);
    oracles::Rng rng(78);
    for (int k = 0; k < 60; ++k) {
        const double u = rng.uniform(-2 * Kp, 2 * Kp);
        const double v = rng.uniform(-0.8 * Kq, 0.8 * Kq);
        const JacobiQuadruple J = jacobi_complex(Complex(u, v), p * p);
        const JacobiReal ru = jacobi_real(u, p);
        const JacobiReal rv = jacobi_real(v, q);
        const Complex I(0, 1);
        const Complex rhs = (ru.cn * rv.cn + I * (ru.sn * rv.dn)) / (1.0 + ru.dn * rv.sn);
        CHECK(abs(std::exp(I * J.am) - rhs) <= 1e-10 * (1 + abs(rhs)));
        // and the quadruple's own consistency cn + i sn = e^{i am}
        CHECK(abs(std::exp(I * J.am) - (J.cn + I * J.sn)) <= 1e-10 * (1 + abs(rhs)));
    }
}

TEST_CASE("double periodicity of the complex functions") {
    const double p = 0.6, q = 0.8;
    const double Kp = complete_K(p), Kq = complete_K(q);
    oracles::Rng rng(79);
    for (int k = 0; k < 60; ++k) {
        const Complex z(rng.uniform(-Kp, Kp), rng.uniform(-0.7 * Kq, 0.7 * Kq));
        const JacobiQuadruple a = jacobi_complex(z, p * p);
        const JacobiQuadruple b = jacobi_complex(z + Complex(4 * Kp, 0), p * p);
        const JacobiQuadruple c = jacobi_complex(z + Complex(0, 4 * Kq), p * p);
        for (const auto* pair : {&b, &c}) {
            CHECK(abs(pair->sn - a.sn) <= 1e-10 * (1 + abs(a.sn)));
            CHECK(abs(pair->cn - a.cn) <= 1e-10 * (1 + abs(a.cn)));
            CHECK(abs(pair->dn - a.dn) <= 1e-10 * (1 + abs(a.dn)));
        }
    }
}

TEST_CASE("pythagorean laws at complex arguments") {
    oracles::Rng rng(80);
    for (double p2 : {0.36, 0.5, 0.9025}) {
        const double p = std::sqrt(p2), q = std::sqrt(1 - p2);
        const double Kp = complete_K(p), Kq = complete_K(q);
        int tested = 0;
        while (tested < 200) {
            const Complex z(rng.uniform(-2 * Kp, 2 * Kp), rng.uniform(-0.85 * Kq, 0.85 * Kq));
            JacobiQuadruple J;
            try {
                J = jacobi_complex(z, p2);
            } catch (const PoleError&) {
                continue;
            }
            const double scale = std::norm(J.sn) + std::norm(J.cn) + std::norm(J.dn);
            CHECK(abs(J.sn * J.sn + J.cn * J.cn - 1.0) <= 1e-11 * (1 + scale));
            CHECK(abs(J.dn * J.dn + p2 * J.sn * J.sn - 1.0) <= 1e-11 * (1 + scale));
            ++tested;
        }
    }
}

TEST_CASE("differential equations by central differences") {
    // sn'^2 = (1-sn^2)(1-p^2 sn^2), cn'^2 = (1-cn^2)(q^2+p^2 cn^2),
    // dn'^2 = (dn^2-1)(q^2-dn^2) -- 4th order stencil, step 1e-4
    const double h = 1e-4;
    oracles::Rng rng(81);
    for (double p2 : {0.36, 0.64}) {
        const double q2 = 1 - p2;
        for (int k = 0; k < 40; ++k) {
            const Complex z(rng.uniform(-2, 2), rng.uniform(-0.7, 0.7));
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
            CHECK(abs(snp * snp - (1.0 - sn2) * (1.0 - p2 * sn2)) <= 1e-6 * s * s);
            CHECK(abs(cnp * cnp - (1.0 - cn2) * (q2 + p2 * cn2)) <= 1e-6 * s * s);
            CHECK(abs(dnp * dnp - (dn2 - 1.0) * (q2 - dn2)) <= 1e-6 * s * s);
        }
    }
}

TEST_CASE("modulus conversion records") {
    // reciprocal: cn_{1/p} z = dn_p(z/p) with p = 1/2 -> z' = 2z, p' = 1/2
    const ModulusConversion rec = modulus_convert(Complex(0.3, 0.1), Complex(2.0, 0));
    CHECK(rec.kind == ConversionKind::Reciprocal);
    CHECK(rec.p_prime == doctest::Approx(0.5));
    CHECK(abs(rec.z_prime - Complex(0.6, 0.2)) < 1e-15);

    // imaginary: p = i -> p' = q' = 1/sqrt(2)
    const ModulusConversion im = modulus_convert(Complex(0.5, 0), Complex(0, 1));
    CHECK(im.kind == ConversionKind::Imaginary);
    CHECK(im.p_prime == doctest::Approx(INV_SQRT2).epsilon(1e-15));
    CHECK(im.scale == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(modulus_convert(Complex(0, 0), Complex(0.3, 0.4)), DomainError);
}

TEST_CASE("converted moduli: reality, laws and differential equations") {
    oracles::Rng rng(82);
    for (double p2 : {2.4, -0.288, 5.0, -2.0}) {
        // reality on the real axis
        for (int k = 0; k < 50; ++k) {
            const double u = rng.uniform(-3, 3);
            const JacobiTriple t = jacobi_sncndn(u, p2);
            CHECK(std::isfinite(t.sn));
            CHECK(std::isfinite(t.cn));
            CHECK(std::isfinite(t.dn));
            CHECK(abs(t.sn * t.sn + t.cn * t.cn - 1.0) <= 1e-12);
            CHECK(abs(t.dn * t.dn + p2 * t.sn * t.sn - 1.0) <= 1e-12);
        }
        // complex arguments keep both laws
        for (int k = 0; k < 50; ++k) {
            const Complex z(rng.uniform(-1.5, 1.5), rng.uniform(-0.4, 0.4));
            JacobiQuadruple J;
            try {
                J = jacobi_complex(z, p2);
            } catch (const PoleError&) {
                continue;
            }
            const double s = 1 + std::norm(J.sn) + std::norm(J.cn) + std::norm(J.dn);
            CHECK(abs(J.sn * J.sn + J.cn * J.cn - 1.0) <= 1e-11 * s);
            CHECK(abs(J.dn * J.dn + p2 * J.sn * J.sn - 1.0) <= 1e-11 * s);
        }
    }
}

TEST_CASE("values at the origin for every modulus case") {
    for (double p2 : {0.5, 2.4, -0.288}) {
        const JacobiTriple t = jacobi_sncndn(0.0, p2);
        CHECK(t.sn == 0.0);
        CHECK(t.cn == 1.0);
        CHECK(t.dn == 1.0);
    }
}

TEST_CASE("pole guard near the lattice poles") {
    const double p = 0.6, q = 0.8;
    const double Kq = complete_K(q);
    CHECK_THROWS_AS(jacobi_complex(Complex(0, Kq), p * p), PoleError);
    const double Kp = complete_K(p);
    CHECK_THROWS_AS(jacobi_complex(Complex(2 * Kp, Kq), p * p), PoleError);
}

TEST_CASE("EllipticModulus invariants") {
    const EllipticModulus m1 = EllipticModulus::from_p2(0.4);
    CHECK(m1.case_tag == ModulusCase::I);
    CHECK(abs(m1.p * m1.p + m1.q * m1.q - Complex(1)) < 1e-14);

    const EllipticModulus m2 = EllipticModulus::from_p2(-1.44);
    CHECK(m2.case_tag == ModulusCase::II);
    CHECK(m2.p.real() == 0.0);
    CHECK(m2.q.real() > 1.0);
    CHECK(abs(m2.p * m2.p + m2.q * m2.q - Complex(1)) < 1e-14);

    const EllipticModulus m3 = EllipticModulus::from_p2(2.4);
    CHECK(m3.case_tag == ModulusCase::III);
    CHECK(m3.p.real() > 1.0);
    CHECK(m3.q.imag() != 0.0);

    CHECK_THROWS_AS(EllipticModulus::from_p(Complex(0.5, 0.5)), DomainError);
}

TEST_CASE("period helper") {
    CHECK(period_u(0.36) == doctest::Approx(4 * complete_K(0.6)).epsilon(1e-14));
    const double M = std::sqrt(2.4);
    CHECK(period_u(2.4) == doctest::Approx(4 * complete_K(1 / M) / M).epsilon(1e-14));
}
