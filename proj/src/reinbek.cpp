#include "qdual/reinbek.hpp"

#include <cmath>

#include "qdual/errors.hpp"
#include "qdual/numerics.hpp"

namespace qdual {

namespace {

// Clamp tiny negative radicands produced by boundary rounding.
double root(double t) {
    if (t < 0) {
        if (t > -1e-12) return 0.0;
        throw PoleError("reinbek_pair: negative radicand off the admissible domain");
    }
    return std::sqrt(t);
}

void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

// x_i^2 = lam_i (lam_i - t1)(lam_i - t2) / prod_{k != i} (lam_i - lam_k),
// the confocal-coordinates normal form; positive square roots throughout
// (first-octant patch).
Vec3 confocal_point(const double lam[3], double t1, double t2) {
    Vec3 x;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double num = lam[i] * (lam[i] - t1) * (lam[i] - t2);
        const double den = (lam[i] - lam[j]) * (lam[i] - lam[k]);
        x[i] = root(num / den);
    }
    return x;
}

}  // namespace

std::pair<Vec3, Vec3> reinbek_pair(const EllipticCoordinates& coords,
                                   double a, double b, double c) {
    require(a > 0 && b > 0 && c > 0, "reinbek_pair: half-axes must be positive");
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    const double t1 = coords.t1, t2 = coords.t2;

    Vec3 x, xd;
    switch (coords.family) {
        case ReinbekFamily::Ellipsoid: {
            require(a2 >= t1 && t1 >= b2 && b2 >= t2 && t2 >= c2,
                    "reinbek_pair: need a^2 >= t1 >= b^2 >= t2 >= c^2");
            const double lam[3] = {a2, b2, c2};
            x = confocal_point(lam, t1, t2);
            xd.x = std::sqrt(a2 / ((a2 - b2) * (a2 - c2))) *
                   safe_artanh(root((a2 - t1) / (a2 - t2)));
            xd.y = std::sqrt(b2 / ((a2 - b2) * (b2 - c2))) *
                   std::atan(root((t1 - b2) / (b2 - t2)));
            // third component negated relative to the thesis-era print: the
            // slot ratios are then +-1/(t1 - t2) across all three components
            // and (x, x*) is an actual Christoffel pair
            xd.z = -std::sqrt(c2 / ((a2 - c2) * (b2 - c2))) *
                   safe_artanh(root((t2 - c2) / (t1 - c2)));
            break;
        }
        case ReinbekFamily::Hyp2: {
            require(a2 >= t1 && t1 >= b2 && b2 > -c2 && -c2 >= t2,
                    "reinbek_pair: need a^2 >= t1 >= b^2 > -c^2 >= t2");
            const double lam[3] = {a2, b2, -c2};
            x = confocal_point(lam, t1, t2);
            xd.x = std::sqrt(a2 / ((a2 - b2) * (a2 + c2))) *
                   safe_artanh(root((a2 - t1) / (a2 - t2)));
            xd.y = std::sqrt(b2 / ((a2 - b2) * (b2 + c2))) *
                   std::atan(root((t1 - b2) / (b2 - t2)));
            xd.z = std::sqrt(c2 / ((a2 + c2) * (b2 + c2))) *
                   std::atan(root(-(t1 + c2) / (c2 + t2)));
            break;
        }
        case ReinbekFamily::Hyp1: {
            require(b2 <= c2, "reinbek_pair: Hyp1 chain requires b <= c");
            require(a2 > -b2 && -b2 >= t1 && t1 >= -c2 && -c2 >= t2,
                    "reinbek_pair: need -b^2 >= t1 >= -c^2 >= t2");
            const double lam[3] = {a2, -b2, -c2};
            x = confocal_point(lam, t1, t2);
            xd.x = std::sqrt(a2 / ((a2 + b2) * (a2 + c2))) *
                   safe_artanh(root((a2 - t1) / (a2 - t2)));
            xd.y = std::sqrt(b2 / ((a2 + b2) * (c2 - b2))) *
                   safe_artanh(root((b2 + t1) / (b2 + t2)));
            xd.z = std::sqrt(c2 / ((a2 + c2) * (c2 - b2))) *
                   std::atan(root(-(t1 + c2) / (c2 + t2)));
            break;
        }
    }
    return {x, xd};
}

}  // namespace qdual
