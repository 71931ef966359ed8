#include "qdual/verify.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "qdual/errors.hpp"

namespace qdual {

SurfaceJet fd_jet(const PointFn& sampler, double u, double v, double step, int order) {
    SurfaceJet J;
    J.u = u;
    J.v = v;
    J.mode = JetMode::FiniteDifference;
    J.fd_step = step;
    const double h = step;
    const Vec3 c = sampler(u, v);
    const Vec3 pu = sampler(u + h, v), mu = sampler(u - h, v);
    const Vec3 pv = sampler(u, v + h), mv = sampler(u, v - h);
    J.x = c;
    if (order >= 4) {
        const Vec3 pu2 = sampler(u + 2 * h, v), mu2 = sampler(u - 2 * h, v);
        const Vec3 pv2 = sampler(u, v + 2 * h), mv2 = sampler(u, v - 2 * h);
        J.x_u = (mu2 - pu2 + (pu - mu) * 8.0) / (12 * h);
        J.x_v = (mv2 - pv2 + (pv - mv) * 8.0) / (12 * h);
    } else {
        J.x_u = (pu - mu) / (2 * h);
        J.x_v = (pv - mv) / (2 * h);
    }
    J.x_uu = (pu - c * 2.0 + mu) / (h * h);
    J.x_vv = (pv - c * 2.0 + mv) / (h * h);
    const Vec3 pp = sampler(u + h, v + h), pm = sampler(u + h, v - h);
    const Vec3 mp = sampler(u - h, v + h), mm = sampler(u - h, v - h);
    J.x_uv = (pp - pm - mp + mm) / (4 * h * h);
    return J;
}

CheckReport christoffel_pair_check(const SurfaceGrid& primal, const SurfaceGrid& dual,
                                   CheckMode mode, double tolerance, bool flip_signs) {
    CheckReport rep;
    rep.check = "christoffel-pair";
    rep.anchor = "x*_u = rho x_u, x*_v = -rho x_v (common conjugate parameters)";
    rep.tolerance = tolerance;
    const Lattice& lat = primal.lattice;
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            if (!primal.valid(i, j) || !dual.valid(i, j)) {
                ++rep.masked;
                continue;
            }
            const SurfaceJet& P = primal.at(i, j);
            const SurfaceJet& D = dual.at(i, j);
            const double nu_p = norm(P.x_u), nv_p = norm(P.x_v);
            const double nu_d = norm(D.x_u), nv_d = norm(D.x_v);
            if (nu_p * nu_d == 0 || nv_p * nv_d == 0) {
                ++rep.masked;
                continue;
            }
            const double par_u = norm(cross(D.x_u, P.x_u)) / (nu_d * nu_p);
            const double par_v = norm(cross(D.x_v, P.x_v)) / (nv_d * nv_p);
            const double rho_u = dot(D.x_u, P.x_u) / dot(P.x_u, P.x_u);
            const double rho_v = dot(D.x_v, P.x_v) / dot(P.x_v, P.x_v);
            const double scale = std::max(std::abs(rho_u), std::abs(rho_v));
            const double one_scalar = std::abs(rho_u + rho_v) / (scale > 0 ? scale : 1);
            double sign_violation = 0;
            bool sign_ok;
            if (mode == CheckMode::Spacelike) {
                // affine image of a conformal pair: rho_u > 0 > rho_v
                sign_ok = rho_u > 0 && rho_v < 0;
            } else {
                // Lorentz-conformal pair: opposite signs, either orientation
                sign_ok = rho_u * rho_v < 0;
            }
            if (sign_ok == flip_signs) sign_violation = 1;
            rep.record(std::max({par_u, par_v, one_scalar, sign_violation}));
        }
    }
    rep.finish();
    return rep;
}

CheckReport degenerate_line_check(const SurfaceGrid& grid, double tolerance) {
    CheckReport rep;
    rep.check = "degenerate-line";
    rep.anchor = "degenerate induced metric propagates along a parameter curve";
    rep.tolerance = tolerance;
    const Lattice& lat = grid.lattice;

    const auto coeffs = [&](int i, int j) {
        const SurfaceJet& J = grid.at(i, j);
        const double E = metric_dot(J.x_u, J.x_u, grid.ambient);
        const double F = metric_dot(J.x_u, J.x_v, grid.ambient);
        const double G = metric_dot(J.x_v, J.x_v, grid.ambient);
        return std::array<double, 3>{E, F, G};
    };

    std::vector<bool> row_done(lat.nv, false), col_done(lat.nu, false);
    for (int j = 0; j < lat.nv; ++j) {
        for (int i = 0; i < lat.nu; ++i) {
            if (!grid.valid(i, j) || grid.causal[grid.index(i, j)] != CausalType::Degenerate)
                continue;
            const auto [E, F, G] = coeffs(i, j);
            (void)F;
            if (std::abs(G) <= std::abs(E)) {
                // G vanishes: it must vanish on the whole v = const line
                if (row_done[j]) continue;
                row_done[j] = true;
                for (int ii = 0; ii < lat.nu; ++ii) {
                    if (!grid.valid(ii, j)) {
                        ++rep.masked;
                        continue;
                    }
                    const auto [Ee, Fe, Ge] = coeffs(ii, j);
                    (void)Fe;
                    rep.record(std::abs(Ge) / (std::abs(Ee) + std::abs(Ge) + 1e-300));
                }
            } else {
                if (col_done[i]) continue;
                col_done[i] = true;
                for (int jj = 0; jj < lat.nv; ++jj) {
                    if (!grid.valid(i, jj)) {
                        ++rep.masked;
                        continue;
                    }
                    const auto [Ee, Fe, Ge] = coeffs(i, jj);
                    (void)Fe;
                    rep.record(std::abs(Ee) / (std::abs(Ee) + std::abs(Ge) + 1e-300));
                }
            }
        }
    }
    rep.finish();  // samples == 0 is the vacuous NoDegenerateNodes pass
    return rep;
}

CheckReport para_cr_check(const LorentzFn& f, double u0, double u1, double v0, double v1,
                          int n, double step, double tolerance) {
    CheckReport rep;
    rep.check = "para-cauchy-riemann";
    rep.anchor = "(Re f)_u = (Im f)_v and (Im f)_u = (Re f)_v";
    rep.tolerance = tolerance;
    const double h = step;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double u = u0 + (u1 - u0) * (i + 0.5) / n;
            const double v = v0 + (v1 - v0) * (j + 0.5) / n;
            try {
                const LorentzNumber fu =
                    (f(u + h, v) - f(u - h, v)) * (1.0 / (2 * h));
                const LorentzNumber fv =
                    (f(u, v + h) - f(u, v - h)) * (1.0 / (2 * h));
                const double scale =
                    1.0 + std::abs(fu.re) + std::abs(fu.im) + std::abs(fv.re) + std::abs(fv.im);
                const double r1 = std::abs(fu.re - fv.im);
                const double r2 = std::abs(fu.im - fv.re);
                rep.record(std::max(r1, r2) / scale);
            } catch (const Error&) {
                ++rep.masked;
            }
        }
    }
    rep.finish();
    return rep;
}

std::string reports_to_json(const std::vector<CheckReport>& reports, unsigned long seed) {
    nlohmann::json doc;
    doc["seed"] = seed;
    bool all = true;
    doc["checks"] = nlohmann::json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        doc["checks"].push_back({{"check", r.check},
                                 {"anchor", r.anchor},
                                 {"samples", r.samples},
                                 {"max_residual", r.max_residual},
                                 {"tolerance", r.tolerance},
                                 {"pass", r.pass},
                                 {"masked", r.masked}});
    }
    doc["all_pass"] = all;
    return doc.dump(2);
}

}  // namespace qdual
