#ifndef QDUAL_GEOMETRY_HPP
#define QDUAL_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qdual {

// Ambient metric signatures.  MinkowskiZ is diag(+1,+1,-1) (timelike third axis),
// MinkowskiX is diag(-1,+1,+1) (timelike first axis).
enum class Ambient { Euclidean, MinkowskiZ, MinkowskiX };

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Euclidean dot product, used for scaling and parallelism tests.
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Inner product in the given ambient signature.
inline double metric_dot(const Vec3& a, const Vec3& b, Ambient amb) {
    switch (amb) {
        case Ambient::MinkowskiZ: return a.x * b.x + a.y * b.y - a.z * b.z;
        case Ambient::MinkowskiX: return -a.x * b.x + a.y * b.y + a.z * b.z;
        default: return dot(a, b);
    }
}

inline bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Position and derivatives of a parametrized surface at one parameter point.
enum class JetMode { ClosedForm, FiniteDifference };

struct SurfaceJet {
    double u = 0, v = 0;
    Vec3 x, x_u, x_v, x_uu, x_uv, x_vv;
    JetMode mode = JetMode::ClosedForm;
    double fd_step = 0;  // only meaningful for finite-difference jets
};

enum class NodeState { Valid, Pole, Degenerate };

// Causal type of the tangent plane under the grid's ambient metric.
enum class CausalType { Spacelike, Timelike, Degenerate, NotApplicable };

// Rectangular parameter lattice, endpoints inclusive.
struct Lattice {
    double u0 = 0, v0 = 0, du = 0, dv = 0;
    int nu = 0, nv = 0;

    Lattice() = default;
    Lattice(double u0_, double u1, int nu_, double v0_, double v1, int nv_)
        : u0(u0_), v0(v0_),
          du(nu_ > 1 ? (u1 - u0_) / (nu_ - 1) : 0),
          dv(nv_ > 1 ? (v1 - v0_) / (nv_ - 1) : 0),
          nu(nu_), nv(nv_) {}

    double u(int i) const { return u0 + du * i; }
    double v(int j) const { return v0 + dv * j; }
    std::size_t size() const { return std::size_t(nu) * std::size_t(nv); }
};

// Immutable sample of a surface over a lattice.  Masked nodes carry no jet data.
struct SurfaceGrid {
    Lattice lattice;
    Ambient ambient = Ambient::Euclidean;
    std::vector<SurfaceJet> jets;       // nu*nv, row-major in u
    std::vector<NodeState> mask;
    std::vector<CausalType> causal;

    std::size_t index(int i, int j) const { return std::size_t(j) * lattice.nu + i; }
    const SurfaceJet& at(int i, int j) const { return jets[index(i, j)]; }
    bool valid(int i, int j) const { return mask[index(i, j)] == NodeState::Valid; }

    std::size_t masked_count() const {
        std::size_t n = 0;
        for (auto s : mask) n += (s != NodeState::Valid);
        return n;
    }
};

}  // namespace qdual

#endif
