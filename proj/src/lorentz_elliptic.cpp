#include "qdual/lorentz_elliptic.hpp"

#include <cmath>

#include "qdual/numerics.hpp"

namespace qdual {

LJacobi l_jacobi(const LorentzNumber& z, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("l_jacobi: modulus must lie in [0, 1]");
    const JacobiReal fp = jacobi_real(null_plus(z), p);
    const JacobiReal fm = jacobi_real(null_minus(z), p);
    LJacobi r;
    r.sn = from_null(fp.sn, fm.sn);
    r.cn = from_null(fp.cn, fm.cn);
    r.dn = from_null(fp.dn, fm.dn);
    r.am = from_null(fp.am, fm.am);
    return r;
}

LJacobiTriple l_jacobi_p2(const LorentzNumber& z, double p2) {
    const JacobiTriple fp = jacobi_sncndn(null_plus(z), p2);
    const JacobiTriple fm = jacobi_sncndn(null_minus(z), p2);
    LJacobiTriple r;
    r.sn = from_null(fp.sn, fm.sn);
    r.cn = from_null(fp.cn, fm.cn);
    r.dn = from_null(fp.dn, fm.dn);
    return r;
}

LorentzNumber y_hyp1(const LorentzNumber& z, double q) {
    const double u = z.re, v = z.im;
    const JacobiTriple ju = jacobi_sncndn(u, q * q);
    const JacobiTriple jv = jacobi_sncndn(v, q * q);
    const double den = jv.cn + ju.sn * jv.dn;
    if (std::abs(den) < 1e-9)
        throw PoleError("y_hyp1: denominator cn_q v + sn_q u dn_q v vanishes");
    return {ju.cn / den, -jv.sn * ju.dn / den};
}

LorentzNumber l_arctan(const LorentzNumber& w) {
    return l_extend([](double t) { return std::atan(t); }, w);
}

LorentzNumber l_artanh(const LorentzNumber& w) {
    return l_extend([](double t) { return safe_artanh(t); }, w);
}

}  // namespace qdual
