#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qdual/checks.hpp"
#include "qdual/quadrics.hpp"
#include "qdual/verify.hpp"

using namespace qdual;

TEST_CASE("fd_jet is exact on polynomials of low degree") {
    const auto f = [](double u, double v) {
        return Vec3{u, v, 1 + 2 * u - 3 * v + u * v};
    };
    const SurfaceJet J = fd_jet(f, 0.3, -0.7, 1e-3, 2);
    CHECK(norm(J.x_u - Vec3{1, 0, 2 - 0.7}) < 1e-9);
    CHECK(norm(J.x_v - Vec3{0, 1, -3 + 0.3}) < 1e-9);
    CHECK(norm(J.x_uv - Vec3{0, 0, 1}) < 1e-9);
    CHECK(norm(J.x_uu) < 1e-9);
}

TEST_CASE("fd_jet halving shows second order") {
    const auto f = [](double u, double v) {
        return Vec3{std::sin(u) * std::cos(v), std::exp(0.3 * u), std::cos(u + v)};
    };
    const auto exact_u = [](double u, double v) {
        return Vec3{std::cos(u) * std::cos(v), 0.3 * std::exp(0.3 * u), -std::sin(u + v)};
    };
    const double u = 0.4, v = 0.8, h = 4e-3;
    const double e1 = norm(fd_jet(f, u, v, h, 2).x_u - exact_u(u, v));
    const double e2 = norm(fd_jet(f, u, v, h / 2, 2).x_u - exact_u(u, v));
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("fd_jet propagates masked-stencil errors") {
    const auto partial = [](double u, double v) -> Vec3 {
        if (u + v > 1.0) throw StencilMasked();
        return {u, v, u * v};
    };
    CHECK_NOTHROW(fd_jet(partial, 0.2, 0.2, 1e-5, 2));
    CHECK_THROWS_AS(fd_jet(partial, 0.5, 0.5, 1e-5, 2), StencilMasked);
}

TEST_CASE("para_cr_check separates holomorphic from non-holomorphic") {
    const CheckReport good = para_cr_check(
        [](double u, double v) {
            return l_extend([](double t) { return std::exp(t); }, LorentzNumber(u, v));
        },
        -1, 1, -1, 1);
    CHECK(good.pass);
    const CheckReport bad = para_cr_check(
        [](double u, double) { return LorentzNumber(u, 0); }, -1, 1, -1, 1);
    CHECK(!bad.pass);
}

TEST_CASE("degenerate_line_check vacuous pass and power") {
    // Euclidean ellipsoid: no degenerate nodes
    const ModuliTriple m = moduli_from_axes({Family::Ellipsoid, std::sqrt(1.5), 1.0,
                                             std::sqrt(0.5), Ambient::Euclidean});
    const SurfaceGrid g = build_primal_grid(m, Lattice(-1, 1, 9, -1, 1, 9));
    const CheckReport rep = degenerate_line_check(g);
    CHECK(rep.pass);
    CHECK(rep.samples == 0);
}

TEST_CASE("reports serialize to the documented schema") {
    CheckReport a;
    a.check = "demo";
    a.anchor = "x = x";
    a.samples = 10;
    a.max_residual = 1e-12;
    a.tolerance = 1e-8;
    a.finish();
    const std::string json = reports_to_json({a}, 42);
    CHECK(json.find("\"check\"") != std::string::npos);
    CHECK(json.find("\"anchor\"") != std::string::npos);
    CHECK(json.find("\"samples\"") != std::string::npos);
    CHECK(json.find("\"max_residual\"") != std::string::npos);
    CHECK(json.find("\"tolerance\"") != std::string::npos);
    CHECK(json.find("\"pass\"") != std::string::npos);
    CHECK(json.find("\"masked\"") != std::string::npos);
    CHECK(json.find("\"seed\": 42") != std::string::npos);
    CHECK(json.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("check registry: names resolve and reports are deterministic") {
    const auto names = check_names();
    CHECK(names.size() > 80);
    CheckContext ctx;
    const CheckReport r1 = run_check("jacobi-pythagorean", ctx);
    const CheckReport r2 = run_check("jacobi-pythagorean", ctx);
    CHECK(r1.max_residual == r2.max_residual);
    CHECK(r1.samples == r2.samples);
    CHECK(r1.pass);
    CHECK_THROWS_AS(run_check("no-such-check", ctx), DomainError);
}

TEST_CASE("pair sign flip context makes the pair checks fail") {
    CheckContext flip;
    flip.pair_sign_flip = true;
    const CheckReport r = run_check("pair-ellipsoid", flip);
    CHECK(!r.pass);
}
