// Test-side numerical oracles, independent of the library code paths they
// cross-check.
#ifndef QDUAL_TESTS_ORACLES_HPP
#define QDUAL_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace oracles {

// Adaptive Simpson quadrature (recursive), kept local to the tests.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15 * tol) return left + right + delta / 15;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double quad(const std::function<double(double)>& f, double a, double b,
                   double tol = 1e-14) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Complete elliptic integral K(p) straight from its defining integral.
inline double K_quadrature(double p) {
    return quad([p](double th) {
        const double s = p * std::sin(th);
        return 1.0 / std::sqrt(1.0 - s * s);
    }, 0.0, 1.5707963267948966);
}

// Amplitude by integrating am' = sqrt(1 - p^2 sin^2 am) with classic RK4;
// never touches the library's AGM path.
inline double am_ode(double u, double p, int steps = 20000) {
    const auto rhs = [p](double phi) {
        const double s = p * std::sin(phi);
        return std::sqrt(1.0 - s * s);
    };
    double phi = 0.0;
    const double h = u / steps;
    for (int i = 0; i < steps; ++i) {
        const double k1 = rhs(phi);
        const double k2 = rhs(phi + 0.5 * h * k1);
        const double k3 = rhs(phi + 0.5 * h * k2);
        const double k4 = rhs(phi + h * k3);
        phi += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return phi;
}

// RK4 along a straight segment for a complex-vector ODE x' = F(z) dz.
template <class F3>
void rk4_path(F3& deriv, std::complex<double> z0, std::complex<double> z1, int steps,
              std::complex<double> out[3]) {
    const std::complex<double> dz = (z1 - z0) / double(steps);
    std::complex<double> z = z0;
    for (int i = 0; i < steps; ++i) {
        std::complex<double> k1[3], k2[3], k3[3], k4[3];
        deriv(z, k1);
        deriv(z + 0.5 * dz, k2);
        deriv(z + 0.5 * dz, k3);
        deriv(z + dz, k4);
        for (int c = 0; c < 3; ++c)
            out[c] += dz / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        z += dz;
    }
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
};

}  // namespace oracles

#endif
