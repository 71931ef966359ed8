#ifndef QDUAL_REINBEK_HPP
#define QDUAL_REINBEK_HPP

#include "qdual/geometry.hpp"

namespace qdual {

/// Quadric families in confocal elliptic coordinates (t1, t2), with the
/// admissible chains
///   Ellipsoid: a^2 >= t1 >= b^2 >= t2 >= c^2
///   Hyp2:      a^2 >= t1 >= b^2 > -c^2 >= t2   (x1^2/a^2 + x2^2/b^2 - x3^2/c^2 = 1)
///   Hyp1:      a^2 > -b^2 >= t1 >= -c^2 >= t2  (x1^2/a^2 - x2^2/b^2 - x3^2/c^2 = 1,
///                                               requires b <= c)
enum class ReinbekFamily { Ellipsoid, Hyp2, Hyp1 };

struct EllipticCoordinates {
    double t1 = 0, t2 = 0;
    ReinbekFamily family = ReinbekFamily::Ellipsoid;
};

/// The quadric point x(t1, t2) (first-octant square roots) and its
/// Christoffel dual x*(t1, t2) in the artanh/arctan closed forms.
/// Throws DomainError outside the family's inequality chain and PoleError on
/// the square-root branch points (equalities in the chain).
///
/// The dual's second ellipsoid component uses the radicand (t1 - b^2);
/// thesis-era prints show t1 - b, a typographical slip.
std::pair<Vec3, Vec3> reinbek_pair(const EllipticCoordinates& coords,
                                   double a, double b, double c);

}  // namespace qdual

#endif
