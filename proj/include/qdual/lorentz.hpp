#ifndef QDUAL_LORENTZ_HPP
#define QDUAL_LORENTZ_HPP

#include <cmath>
#include <limits>
#include <ostream>

#include "qdual/errors.hpp"

namespace qdual {

/// Element of the Lorentz-number (para-complex, split-complex) plane:
/// z = re + j*im with j^2 = +1.  The algebra has zero divisors on the
/// light cone re^2 = im^2, so division guards the squared modulus.
struct LorentzNumber {
    double re = 0, im = 0;

    LorentzNumber() = default;
    LorentzNumber(double r, double i = 0) : re(r), im(i) {}

    LorentzNumber operator+(const LorentzNumber& o) const { return {re + o.re, im + o.im}; }
    LorentzNumber operator-(const LorentzNumber& o) const { return {re - o.re, im - o.im}; }
    LorentzNumber operator-() const { return {-re, -im}; }

    // (a1 + j a2)(b1 + j b2) = (a1 b1 + a2 b2) + j (a1 b2 + a2 b1)
    LorentzNumber operator*(const LorentzNumber& o) const {
        return {re * o.re + im * o.im, re * o.im + im * o.re};
    }
    LorentzNumber operator*(double s) const { return {re * s, im * s}; }
    LorentzNumber operator/(double s) const { return {re / s, im / s}; }

    LorentzNumber& operator+=(const LorentzNumber& o) { re += o.re; im += o.im; return *this; }
    LorentzNumber& operator-=(const LorentzNumber& o) { re -= o.re; im -= o.im; return *this; }
    LorentzNumber& operator*=(const LorentzNumber& o) { *this = *this * o; return *this; }
};

inline LorentzNumber operator*(double s, const LorentzNumber& z) { return z * s; }
inline LorentzNumber operator+(double s, const LorentzNumber& z) { return {s + z.re, z.im}; }
inline LorentzNumber operator-(double s, const LorentzNumber& z) { return {s - z.re, -z.im}; }

/// The unit j with j*j = 1.
inline LorentzNumber lorentz_j() { return {0, 1}; }

inline LorentzNumber conj(const LorentzNumber& z) { return {z.re, -z.im}; }

/// Squared modulus z * conj(z) = re^2 - im^2.  May be negative or zero.
inline double sq_modulus(const LorentzNumber& z) { return z.re * z.re - z.im * z.im; }

/// True when z lies on the light cone relative to its component size.
inline bool is_null(const LorentzNumber& z) {
    const double scale = z.re * z.re + z.im * z.im;
    return std::abs(sq_modulus(z)) <= 1e-13 * scale || scale == 0.0;
}

/// Division via the conjugate: a/b = a*conj(b)/||b||^2.  Throws NullDivisor
/// when b is a zero divisor; a vanishing divisor signals a genuine pole of a
/// formula and is never silently perturbed.
inline LorentzNumber operator/(const LorentzNumber& a, const LorentzNumber& b) {
    if (is_null(b)) throw NullDivisor();
    const double m = sq_modulus(b);
    const LorentzNumber n = a * conj(b);
    return {n.re / m, n.im / m};
}

inline LorentzNumber operator/(double a, const LorentzNumber& b) {
    return LorentzNumber(a) / b;
}

/// Null-cone (idempotent) coordinates z = w_plus*(1+j)/2 + w_minus*(1-j)/2.
inline double null_plus(const LorentzNumber& z) { return z.re + z.im; }
inline double null_minus(const LorentzNumber& z) { return z.re - z.im; }

inline LorentzNumber from_null(double w_plus, double w_minus) {
    return {0.5 * (w_plus + w_minus), 0.5 * (w_plus - w_minus)};
}

/// Unique Lorentz-analytic extension of a real-analytic scalar function:
///   f(u + jv) = f(u+v)(1+j)/2 + f(u-v)(1-j)/2.
/// The function is evaluated twice on the real line; nothing else is needed.
template <class F>
LorentzNumber l_extend(F&& f, const LorentzNumber& z) {
    const double fp = f(null_plus(z));
    const double fm = f(null_minus(z));
    return from_null(fp, fm);
}

/// l_extend with an explicit validity interval [lo, hi] for the real function.
template <class F>
LorentzNumber l_extend(F&& f, const LorentzNumber& z, double lo, double hi) {
    const double wp = null_plus(z), wm = null_minus(z);
    if (wp < lo || wp > hi || wm < lo || wm > hi)
        throw DomainError("l_extend: u +/- v leaves the domain interval");
    return from_null(f(wp), f(wm));
}

inline std::ostream& operator<<(std::ostream& os, const LorentzNumber& z) {
    return os << z.re << (z.im < 0 ? " - j " : " + j ") << std::abs(z.im);
}

}  // namespace qdual

#endif
