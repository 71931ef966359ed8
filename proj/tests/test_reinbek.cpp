#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qdual/reinbek.hpp"
#include "qdual/errors.hpp"

using namespace qdual;

TEST_CASE("ellipsoid membership on random admissible coordinates") {
    const double a = 1.6, b = 1.2, c = 0.9;
    oracles::Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        EllipticCoordinates tc;
        tc.family = ReinbekFamily::Ellipsoid;
        tc.t1 = rng.uniform(b * b + 1e-3, a * a - 1e-3);
        tc.t2 = rng.uniform(c * c + 1e-3, b * b - 1e-3);
        const auto [x, xd] = reinbek_pair(tc, a, b, c);
        (void)xd;
        const double res = x.x * x.x / (a * a) + x.y * x.y / (b * b) + x.z * x.z / (c * c) - 1;
        CHECK(std::abs(res) < 1e-10);
    }
}

TEST_CASE("zero factor at the chain boundary") {
    const double a = 1.6, b = 1.2, c = 0.9;
    EllipticCoordinates tc;
    tc.family = ReinbekFamily::Ellipsoid;
    tc.t1 = b * b;  // second component factor sqrt(b^2 - t1) vanishes
    tc.t2 = 1.0;
    const auto [x, xd] = reinbek_pair(tc, a, b, c);
    (void)xd;
    CHECK(x.y == 0.0);
}

TEST_CASE("outside the chain is rejected") {
    const double a = 1.6, b = 1.2, c = 0.9;
    EllipticCoordinates tc;
    tc.family = ReinbekFamily::Ellipsoid;
    tc.t1 = 0.5;  // below b^2
    tc.t2 = 1.0;
    CHECK_THROWS_AS(reinbek_pair(tc, a, b, c), DomainError);

    tc.family = ReinbekFamily::Hyp1;
    tc.t1 = -0.4;
    tc.t2 = -2.0;
    // Hyp1 needs b <= c
    CHECK_THROWS_AS(reinbek_pair(tc, 1.2, 1.1, 0.7), DomainError);
}

TEST_CASE("tangent parallelism with opposite orientation in one slot") {
    const double a = 1.6, b = 1.2, c = 0.9;
    oracles::Rng rng(32);
    const double h = 1e-6;
    int n = 0;
    while (n < 100) {
        EllipticCoordinates tc;
        tc.family = ReinbekFamily::Ellipsoid;
        tc.t1 = rng.uniform(b * b + 0.05, a * a - 0.05);
        tc.t2 = rng.uniform(c * c + 0.05, b * b - 0.05);
        const auto at = [&](double t1, double t2) {
            EllipticCoordinates w = tc;
            w.t1 = t1;
            w.t2 = t2;
            return reinbek_pair(w, a, b, c);
        };
        try {
            const auto [xp1, dp1] = at(tc.t1 + h, tc.t2);
            const auto [xm1, dm1] = at(tc.t1 - h, tc.t2);
            const auto [xp2, dp2] = at(tc.t1, tc.t2 + h);
            const auto [xm2, dm2] = at(tc.t1, tc.t2 - h);
            const Vec3 xt1 = (xp1 - xm1) / (2 * h), dt1 = (dp1 - dm1) / (2 * h);
            const Vec3 xt2 = (xp2 - xm2) / (2 * h), dt2 = (dp2 - dm2) / (2 * h);
            CHECK(norm(cross(xt1, dt1)) < 1e-6 * norm(xt1) * norm(dt1));
            CHECK(norm(cross(xt2, dt2)) < 1e-6 * norm(xt2) * norm(dt2));
            const double r1 = dot(dt1, xt1) / dot(xt1, xt1);
            const double r2 = dot(dt2, xt2) / dot(xt2, xt2);
            CHECK(r1 * r2 < 0);
            // slot ratios are +-1/(t1 - t2)
            CHECK(r1 == doctest::Approx(1.0 / (tc.t1 - tc.t2)).epsilon(1e-5));
            CHECK(r2 == doctest::Approx(-1.0 / (tc.t1 - tc.t2)).epsilon(1e-5));
            ++n;
        } catch (const Error&) {
        }
    }
}

TEST_CASE("hyperboloid items on their quadrics") {
    oracles::Rng rng(33);
    // item with signature (+, +, -)
    {
        const double a = 1.5, b = 1.0, c = 0.8;
        for (int k = 0; k < 100; ++k) {
            EllipticCoordinates tc;
            tc.family = ReinbekFamily::Hyp2;
            tc.t1 = rng.uniform(b * b + 1e-3, a * a - 1e-3);
            tc.t2 = rng.uniform(-3.0, -c * c - 1e-3);
            const auto [x, xd] = reinbek_pair(tc, a, b, c);
            (void)xd;
            const double res =
                x.x * x.x / (a * a) + x.y * x.y / (b * b) - x.z * x.z / (c * c) - 1;
            CHECK(std::abs(res) < 1e-10);
        }
    }
    // item with signature (+, -, -), b <= c
    {
        const double a = 1.2, b = 0.7, c = 1.1;
        for (int k = 0; k < 100; ++k) {
            EllipticCoordinates tc;
            tc.family = ReinbekFamily::Hyp1;
            tc.t1 = rng.uniform(-c * c + 1e-3, -b * b - 1e-3);
            tc.t2 = rng.uniform(-3.0, -c * c - 1e-3);
            const auto [x, xd] = reinbek_pair(tc, a, b, c);
            (void)xd;
            const double res =
                x.x * x.x / (a * a) - x.y * x.y / (b * b) - x.z * x.z / (c * c) - 1;
            CHECK(std::abs(res) < 1e-10);
        }
    }
}

TEST_CASE("branch point clamping near equalities") {
    const double a = 1.6, b = 1.2, c = 0.9;
    EllipticCoordinates tc;
    tc.family = ReinbekFamily::Ellipsoid;
    tc.t1 = a * a - 1e-13;  // radicand microscopically negative after rounding
    tc.t2 = 1.0;
    CHECK_NOTHROW(reinbek_pair(tc, a, b, c));
}
