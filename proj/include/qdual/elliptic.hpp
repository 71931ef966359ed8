#ifndef QDUAL_ELLIPTIC_HPP
#define QDUAL_ELLIPTIC_HPP

#include <complex>

#include "qdual/errors.hpp"

namespace qdual {

using Complex = std::complex<double>;

// Modulus cases by half-axis ordering: I has p, q in (0,1); II has p purely
// imaginary and q > 1; III has p > 1 and q purely imaginary.  p^2 + q^2 = 1
// in all cases, so p^2 and q^2 are always real.
enum class ModulusCase { I, II, III };

/// Elliptic modulus pair (p, q) with p^2 + q^2 = 1 and its case tag.
struct EllipticModulus {
    Complex p, q;
    ModulusCase case_tag = ModulusCase::I;

    double p2() const { return p.real() * p.real() - p.imag() * p.imag(); }
    double q2() const { return q.real() * q.real() - q.imag() * q.imag(); }

    /// Build from the real value of p^2 (any sign or size); q = sqrt(1 - p^2)
    /// on the branch that is real-positive or positive-imaginary.
    static EllipticModulus from_p2(double p_squared);
    static EllipticModulus from_p(Complex p);
};

/// sn, cn, dn at a real argument; values are real for every modulus case.
struct JacobiTriple {
    double sn = 0, cn = 1, dn = 1;
};

/// sn, cn, dn, am at a complex argument.
struct JacobiQuadruple {
    Complex sn, cn, dn, am;
};

/// Complete elliptic integral of the first kind, K(p), by the
/// arithmetic-geometric mean.  Requires 0 <= p < 1.
double complete_K(double p);

/// Real-argument Jacobi functions with modulus p in [0, 1], by the descending
/// Landen (AGM) method; the p = 1 limit uses the hyperbolic forms.
struct JacobiReal {
    double sn = 0, cn = 1, dn = 1, am = 0;
};
JacobiReal jacobi_real(double u, double p);

/// Real-argument sn, cn, dn for arbitrary real modulus squared p2 (cases
/// I/II/III), routed through the reciprocal- and imaginary-modulus
/// conversions so only real moduli in [0,1] are ever evaluated.
JacobiTriple jacobi_sncndn(double u, double p2);

/// Quarter period structure for arbitrary real p2: the u-period of sn and the
/// v-period of the assembled complex functions (4K_p and 4K_q for case I).
double period_u(double p2);

/// Which modulus conversion normalizes a given modulus.
enum class ConversionKind { None, Reciprocal, Imaginary };

/// Record of a modulus normalization: the target evaluation happens at
/// argument z_prime and real modulus p_prime; sn/cn/dn of the original
/// modulus are then reassembled from that quadruple.
struct ModulusConversion {
    ConversionKind kind = ConversionKind::None;
    Complex z_prime;
    double p_prime = 0;   // real modulus in [0,1)
    double scale = 1;     // argument scale factor z_prime = z * scale
};

/// Normalize an evaluation (z, p) to a real modulus in [0,1).  Throws
/// DomainError when p is neither real nor purely imaginary.
ModulusConversion modulus_convert(Complex z, Complex p);

/// Jacobi functions at a complex argument for any modulus case.  Values come
/// from the real-argument functions of u and v assembled by the argument-sum
/// formulas; am is continued from the real axis along the straight vertical
/// path.  Throws PoleError within a small guard radius of lattice poles.
JacobiQuadruple jacobi_complex(Complex z, const EllipticModulus& m);
JacobiQuadruple jacobi_complex(Complex z, double p2);

}  // namespace qdual

#endif
