#pragma once

#include <cmath>
#include <ostream>

#include "qfrft/errors.hpp"

namespace qfr {

/// A real quaternion q = q0 + i q1 + j q2 + k q3 with Hamilton's rules
/// i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
///
/// Plain value type; all arithmetic is componentwise double precision.
struct Quaternion {
    double q0 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double s) : q0(s) {}
    constexpr Quaternion(double a, double b, double c, double d) : q0(a), q1(b), q2(c), q3(d) {}

    constexpr Quaternion& operator+=(const Quaternion& r) {
        q0 += r.q0; q1 += r.q1; q2 += r.q2; q3 += r.q3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        q0 -= r.q0; q1 -= r.q1; q2 -= r.q2; q3 -= r.q3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        q0 *= s; q1 *= s; q2 *= s; q3 *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << "(" << q.q0 << ", " << q.q1 << ", " << q.q2 << ", " << q.q3 << ")";
    }
};

inline constexpr Quaternion quat_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion quat_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion quat_k{0.0, 0.0, 0.0, 1.0};

/// Hamilton product. Noncommutative; |ab| = |a||b|.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
    return {
        a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
        a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
        a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
        a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
    };
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

/// Conjugate: negates the vector part. conj(pq) = conj(q) conj(p).
constexpr Quaternion conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Scalar part Sc[q] = q0.
constexpr double scalar_part(const Quaternion& q) { return q.q0; }

/// Non-scalar part NSc[q] = i q1 + j q2 + k q3.
constexpr Quaternion vector_part(const Quaternion& q) { return {0.0, q.q1, q.q2, q.q3}; }

struct ScalarVectorSplit {
    double scalar;
    Quaternion vector;
};

/// q = scalar + vector, exactly.
constexpr ScalarVectorSplit split(const Quaternion& q) {
    return {scalar_part(q), vector_part(q)};
}

/// q^{-1} = conj(q) / |q|^2. Throws Errc::zero_quaternion at q = 0.
inline Quaternion inv(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) fail(Errc::zero_quaternion, "inv: zero quaternion has no inverse");
    return conj(q) * (1.0 / n2);
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.q0) && std::isfinite(q.q1) && std::isfinite(q.q2) && std::isfinite(q.q3);
}

/// Polar decomposition q = rho * (cos(theta) + u sin(theta)).
///
/// rho = |q|, theta in [0, pi]. The axis u is the normalized vector part;
/// it is undefined (u_defined = false) when the vector part vanishes
/// relative to rho, in which case theta is 0 or pi and consumers treat the
/// phase as constant.
struct PolarQuat {
    double rho = 0.0;
    double theta = 0.0;
    Quaternion u{};
    bool u_defined = false;
};

/// Relative threshold below which the polar axis is flagged undefined.
inline constexpr double kVecEps = 1e-14;

inline PolarQuat polar(const Quaternion& q) {
    PolarQuat p;
    p.rho = norm(q);
    const double vn = std::sqrt(q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
    // atan2 keeps theta in [0, pi] for all signs of the scalar part.
    p.theta = std::atan2(vn, q.q0);
    if (p.rho > 0.0 && vn > kVecEps * p.rho) {
        p.u = Quaternion{0.0, q.q1 / vn, q.q2 / vn, q.q3 / vn};
        p.u_defined = true;
    }
    return p;
}

/// Euler's formula cos(theta) + u sin(theta) for a unit pure axis u.
/// Throws Errc::not_unit_pure when u is not unit pure within 1e-9.
inline Quaternion exp_pure(const Quaternion& u, double theta) {
    if (std::abs(scalar_part(u)) > 1e-9 || std::abs(norm(u) - 1.0) > 1e-9)
        fail(Errc::not_unit_pure, "exp_pure: axis must be a unit pure quaternion");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, u.q1 * s, u.q2 * s, u.q3 * s};
}

} // namespace qfr
