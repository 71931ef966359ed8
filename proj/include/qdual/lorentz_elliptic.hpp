#ifndef QDUAL_LORENTZ_ELLIPTIC_HPP
#define QDUAL_LORENTZ_ELLIPTIC_HPP

#include "qdual/elliptic.hpp"
#include "qdual/lorentz.hpp"

namespace qdual {

/// Lorentz-analytic extensions of the Jacobi elliptic functions.  Every
/// component is evaluated through the two-real-evaluations formula
/// f(u+jv) = f(u+v)(1+j)/2 + f(u-v)(1-j)/2, which is exact.
struct LJacobi {
    LorentzNumber sn, cn, dn, am;
};

/// L-Jacobi quadruple with real modulus p in [0, 1].
LJacobi l_jacobi(const LorentzNumber& z, double p);

/// L-Jacobi sn, cn, dn for arbitrary real modulus squared (cases I/II/III);
/// the real-axis values are routed through the modulus conversions, so the
/// components stay real on the real axis.  am is omitted here because the
/// converted amplitude never enters a closed form.
struct LJacobiTriple {
    LorentzNumber sn, cn, dn;
};
LJacobiTriple l_jacobi_p2(const LorentzNumber& z, double p2);

/// Lorentz-analytic solution y(u+jv) = (cn_q u - j sn_q v dn_q u) /
/// (cn_q v + sn_q u dn_q v) of y'^2 = {p^2(1+y^4) + 2(1+q^2) y^2}/4; its
/// restriction to the real axis is cn_q u/(1 + sn_q u).  Throws PoleError
/// when the (real, scalar) denominator is below tolerance.
LorentzNumber y_hyp1(const LorentzNumber& z, double q);

/// Lorentz-analytic arctan and artanh via l_extend of the real functions.
/// artanh is continued across |t| = 1 by its real part (arcoth branch).
LorentzNumber l_arctan(const LorentzNumber& w);
LorentzNumber l_artanh(const LorentzNumber& w);

}  // namespace qdual

#endif
