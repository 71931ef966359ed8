#ifndef QDUAL_NUMERICS_HPP
#define QDUAL_NUMERICS_HPP

#include <cmath>
#include <utility>

#include "qdual/errors.hpp"

namespace qdual {

// Adaptive Simpson quadrature.
namespace detail {
template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

template <class F>
double integrate_adaptive(F f, double a, double b, double tol = 1e-12, int max_depth = 40) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// 4-point Gauss-Legendre rule on [a, b]; integrand may be vector-valued.
template <class F, class V>
V gauss4(F& f, double a, double b, V acc) {
    static const double xs[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double ws[4] = {0.34785484513745385, 0.6521451548625461,
                                 0.6521451548625461, 0.34785484513745385};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int k = 0; k < 4; ++k) acc += f(c + h * xs[k]) * (ws[k] * h);
    return acc;
}

// Shift value by multiples of period so it lands nearest to prev.
inline double unwrap_to(double value, double prev, double period) {
    if (period == 0) return value;
    return value + period * std::round((prev - value) / period);
}

// Real part of artanh continued across |t| = 1 (arcoth branch); the identity
// Re artanh(t) = log|((1+t)/(1-t))|/2 holds on both sides of the cut.
inline double safe_artanh(double t) {
    const double d = std::abs(1.0 - t), s = std::abs(1.0 + t);
    if (d < 1e-14 || s < 1e-14) throw PoleError("artanh at a branch point");
    return 0.5 * std::log(s / d);
}

}  // namespace qdual

#endif
