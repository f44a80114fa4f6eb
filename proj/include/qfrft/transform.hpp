#pragma once

#include <cmath>
#include <iostream>
#include <numbers>
#include <vector>

#include "qfrft/field.hpp"

namespace qfr {

/// Fractional orders (alpha1, alpha2) in radians. The transform is defined
/// only away from alpha_k = n*pi; orders with |sin alpha_k| < sin_floor are
/// rejected as degenerate.
struct TransformOrder {
    double alpha1 = std::numbers::pi / 2;
    double alpha2 = std::numbers::pi / 2;

    double alpha(int axis) const { return axis == 1 ? alpha1 : alpha2; }
};

inline constexpr double kSinFloor = 1e-6;

inline void validate(const TransformOrder& order) {
    if (std::abs(std::sin(order.alpha1)) < kSinFloor ||
        std::abs(std::sin(order.alpha2)) < kSinFloor)
        fail(Errc::degenerate_order, "transform order too close to a multiple of pi");
}

namespace detail {

/// Minimal complex value used inside kernel evaluation; the plane it lives
/// in (span{1,i} or span{1,j}) is decided by the caller.
struct Cx {
    double re = 0.0;
    double im = 0.0;

    friend constexpr Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr Cx operator*(Cx a, Cx b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr Cx operator*(Cx a, double s) { return {a.re * s, a.im * s}; }

    constexpr Cx& operator+=(Cx b) {
        re += b.re;
        im += b.im;
        return *this;
    }
};

/// Principal square root of (1 - e*cot(alpha)) / (2*pi) in the plane
/// spanned by {1, e}; the branch with nonnegative real part, so that
/// C_{pi/2} = +1/sqrt(2*pi) and C is continuous on (0, pi).
inline Cx kernel_constant(double alpha) {
    const double cot = std::cos(alpha) / std::sin(alpha);
    const double re = 1.0 / (2.0 * std::numbers::pi);
    const double im = -cot / (2.0 * std::numbers::pi);
    const double r = std::hypot(re, im);
    const double sr = std::sqrt(0.5 * (r + re));
    const double si = std::copysign(std::sqrt(0.5 * (r - re)), im);
    return {sr, si};
}

inline Cx kernel_value(double alpha, double x, double w) {
    const double s = std::sin(alpha);
    const double cot = std::cos(alpha) / s;
    const double csc = 1.0 / s;
    const double phase = 0.5 * (x * x + w * w) * cot - x * w * csc;
    const Cx c = kernel_constant(alpha);
    return c * Cx{std::cos(phase), std::sin(phase)};
}

/// One-axis kernel matrix, row-major n_out x n_in, with the in-axis
/// trapezoid weight folded into each column.
inline std::vector<Cx> kernel_matrix(double alpha, const std::vector<double>& x,
                                     const std::vector<double>& w, const std::vector<double>& wt) {
    std::vector<Cx> k(w.size() * x.size());
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t m = 0; m < x.size(); ++m)
            k[a * x.size() + m] = kernel_value(alpha, x[m], w[a]) * wt[m];
    return k;
}

inline std::vector<Cx> qft_kernel_matrix(const std::vector<double>& x,
                                         const std::vector<double>& w,
                                         const std::vector<double>& wt) {
    const double c = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    std::vector<Cx> k(w.size() * x.size());
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t m = 0; m < x.size(); ++m)
            k[a * x.size() + m] = Cx{std::cos(x[m] * w[a]), -std::sin(x[m] * w[a])} * (c * wt[m]);
    return k;
}

inline std::vector<double> axis_nodes(const Grid2D& g, int axis) {
    std::vector<double> x(static_cast<std::size_t>(axis == 1 ? g.n1 : g.n2));
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = axis == 1 ? g.x1(static_cast<int>(i)) : g.x2(static_cast<int>(i));
    return x;
}

/// Kernel phase advances more than pi/2 per input step at the domain edge:
/// the grid barely resolves the oscillation. Warn, do not fail.
inline void oscillation_guard(double alpha, const Grid2D& in, const Grid2D& out, int axis) {
    const double h = axis == 1 ? in.h1() : in.h2();
    const double x_max = std::max(
        {std::abs(axis == 1 ? in.x1_min : in.x2_min), std::abs(axis == 1 ? in.x1_max : in.x2_max),
         std::abs(axis == 1 ? out.x1_min : out.x2_min),
         std::abs(axis == 1 ? out.x1_max : out.x2_max)});
    const double rate = std::abs(1.0 / std::sin(alpha)) * x_max * h;
    if (rate > std::numbers::pi / 2)
        std::cerr << "qfrft: warning: axis " << axis << " kernel phase advances " << rate
                  << " rad per step at the domain edge; result may be under-resolved\n";
}

// Left multiplication by c in span{1,i}: c * q.
inline Quaternion left_mul_i(Cx c, const Quaternion& q) {
    return {c.re * q.q0 - c.im * q.q1, c.re * q.q1 + c.im * q.q0, c.re * q.q2 - c.im * q.q3,
            c.re * q.q3 + c.im * q.q2};
}

// Right multiplication by c in span{1,j}: q * c.
inline Quaternion right_mul_j(const Quaternion& q, Cx c) {
    return {c.re * q.q0 - c.im * q.q2, c.re * q.q1 - c.im * q.q3, c.re * q.q2 + c.im * q.q0,
            c.re * q.q3 + c.im * q.q1};
}

/// Separable two-sided evaluation in quaternion arithmetic: a left 1D sum
/// along x1 followed by a right 1D sum along x2. The reduction order within
/// each output sample is fixed (serial over input index).
inline QField two_sided_apply(const QField& f, const Grid2D& out, const std::vector<Cx>& k1,
                              const std::vector<Cx>& k2t) {
    const Grid2D& in = f.grid;
    // Stage 1: G[a,n] = sum_m k1[a,m] * f[m,n]
    std::vector<Quaternion> g(static_cast<std::size_t>(out.n1) * in.n2);
    for (int a = 0; a < out.n1; ++a) {
        Quaternion* row = g.data() + static_cast<std::size_t>(a) * in.n2;
        const Cx* krow = k1.data() + static_cast<std::size_t>(a) * in.n1;
        for (int m = 0; m < in.n1; ++m) {
            const Cx c = krow[m];
            const Quaternion* frow = f.values.data() + f.grid.index(m, 0);
            for (int n = 0; n < in.n2; ++n) row[n] += left_mul_i(c, frow[n]);
        }
    }
    // Stage 2: F[a,b] = sum_n G[a,n] * k2[n,b]  (k2t stored row-major [b][n])
    QField F = zero_field(out);
    std::vector<Quaternion> acc(static_cast<std::size_t>(out.n2));
    for (int a = 0; a < out.n1; ++a) {
        const Quaternion* grow = g.data() + static_cast<std::size_t>(a) * in.n2;
        for (auto& q : acc) q = Quaternion{};
        for (int n = 0; n < in.n2; ++n) {
            const Quaternion q = grow[n];
            for (int b = 0; b < out.n2; ++b)
                acc[b] += right_mul_j(q, k2t[static_cast<std::size_t>(b) * in.n2 + n]);
        }
        for (int b = 0; b < out.n2; ++b) F.at(a, b) = acc[b];
    }
    return F;
}

/// Same sums evaluated on the split complex planes: stage 1 acts on
/// (f0 + i f1) and (f2 + i f3), stage 2 on (g0 + j g2) and (g1 + j g3).
inline QField two_sided_apply_split(const QField& f, const Grid2D& out, const std::vector<Cx>& k1,
                                    const std::vector<Cx>& k2t) {
    const Grid2D& in = f.grid;
    const std::size_t nin = f.values.size();
    std::vector<Cx> z1(nin), z2(nin);
    for (std::size_t i = 0; i < nin; ++i) {
        const Quaternion& q = f.values[i];
        z1[i] = {q.q0, q.q1};
        z2[i] = {q.q2, q.q3};
    }
    const std::size_t nmid = static_cast<std::size_t>(out.n1) * in.n2;
    std::vector<Cx> g1(nmid), g2(nmid);
    for (int a = 0; a < out.n1; ++a) {
        Cx* r1 = g1.data() + static_cast<std::size_t>(a) * in.n2;
        Cx* r2 = g2.data() + static_cast<std::size_t>(a) * in.n2;
        const Cx* krow = k1.data() + static_cast<std::size_t>(a) * in.n1;
        for (int m = 0; m < in.n1; ++m) {
            const Cx c = krow[m];
            const Cx* s1 = z1.data() + static_cast<std::size_t>(m) * in.n2;
            const Cx* s2 = z2.data() + static_cast<std::size_t>(m) * in.n2;
            for (int n = 0; n < in.n2; ++n) {
                r1[n] += c * s1[n];
                r2[n] += c * s2[n];
            }
        }
    }
    // Repack into the j-planes: w1 = g0 + j g2, w2 = g1 + j g3.
    std::vector<Cx> w1(nmid), w2(nmid);
    for (std::size_t i = 0; i < nmid; ++i) {
        w1[i] = {g1[i].re, g2[i].re};
        w2[i] = {g1[i].im, g2[i].im};
    }
    QField F = zero_field(out);
    std::vector<Cx> a1(static_cast<std::size_t>(out.n2)), a2(static_cast<std::size_t>(out.n2));
    for (int a = 0; a < out.n1; ++a) {
        const Cx* r1 = w1.data() + static_cast<std::size_t>(a) * in.n2;
        const Cx* r2 = w2.data() + static_cast<std::size_t>(a) * in.n2;
        for (int b = 0; b < out.n2; ++b) a1[b] = a2[b] = Cx{};
        for (int n = 0; n < in.n2; ++n) {
            const Cx c1 = r1[n];
            const Cx c2 = r2[n];
            const Cx* kcol = k2t.data() + n;
            for (int b = 0; b < out.n2; ++b) {
                const Cx k = kcol[static_cast<std::size_t>(b) * in.n2];
                a1[b] += c1 * k;
                a2[b] += c2 * k;
            }
        }
        for (int b = 0; b < out.n2; ++b)
            F.at(a, b) = Quaternion{a1[b].re, a2[b].re, a1[b].im, a2[b].im};
    }
    return F;
}

struct KernelPair {
    std::vector<Cx> k1;  // [a][m], weight folded
    std::vector<Cx> k2t; // [b][n], weight folded
};

inline KernelPair build_kernels(const Grid2D& in, const Grid2D& out, double a1, double a2) {
    oscillation_guard(a1, in, out, 1);
    oscillation_guard(a2, in, out, 2);
    const auto wt1 = trapezoid_weights(in.n1, in.h1());
    const auto wt2 = trapezoid_weights(in.n2, in.h2());
    return {kernel_matrix(a1, axis_nodes(in, 1), axis_nodes(out, 1), wt1),
            kernel_matrix(a2, axis_nodes(in, 2), axis_nodes(out, 2), wt2)};
}

} // namespace detail

/// Kernel sample K_alpha(x, w) for one axis. Axis 1 lives in span{1,i},
/// axis 2 in span{1,j}.
inline Quaternion kernel(double alpha, double x, double w, int axis) {
    if (std::abs(std::sin(alpha)) < kSinFloor)
        fail(Errc::degenerate_order, "kernel: order too close to a multiple of pi");
    const detail::Cx v = detail::kernel_value(alpha, x, w);
    return axis == 1 ? Quaternion{v.re, v.im, 0.0, 0.0} : Quaternion{v.re, 0.0, v.im, 0.0};
}

/// Two-sided QFrFT by direct quadrature on every output node. This is the
/// reference oracle the fast path is tested against.
inline QField qfrft(const QField& f, const TransformOrder& order, const Grid2D& out) {
    validate(order);
    const auto k = detail::build_kernels(f.grid, out, order.alpha1, order.alpha2);
    return detail::two_sided_apply(f, out, k.k1, k.k2t);
}

inline QField qfrft(const QField& f, const TransformOrder& order) { return qfrft(f, order, f.grid); }

/// Inverse transform: the same quadrature with kernels at -alpha_k.
inline QField iqfrft(const QField& F, const TransformOrder& order, const Grid2D& out) {
    validate(order);
    const auto k = detail::build_kernels(F.grid, out, -order.alpha1, -order.alpha2);
    return detail::two_sided_apply(F, out, k.k1, k.k2t);
}

inline QField iqfrft(const QField& F, const TransformOrder& order) {
    return iqfrft(F, order, F.grid);
}

/// Separable fast path: the left i-kernel acts as an ordinary complex 1D
/// fractional transform on the planes (f0 + i f1), (f2 + i f3); the right
/// j-kernel acts on (g0 + j g2), (g1 + j g3). Agrees with qfrft to well
/// below 1e-8 on all inputs.
inline QField qfrft_fast(const QField& f, const TransformOrder& order, const Grid2D& out) {
    validate(order);
    const auto k = detail::build_kernels(f.grid, out, order.alpha1, order.alpha2);
    return detail::two_sided_apply_split(f, out, k.k1, k.k2t);
}

inline QField qfrft_fast(const QField& f, const TransformOrder& order) {
    return qfrft_fast(f, order, f.grid);
}

inline QField iqfrft_fast(const QField& F, const TransformOrder& order, const Grid2D& out) {
    validate(order);
    const auto k = detail::build_kernels(F.grid, out, -order.alpha1, -order.alpha2);
    return detail::two_sided_apply_split(F, out, k.k1, k.k2t);
}

inline QField iqfrft_fast(const QField& F, const TransformOrder& order) {
    return iqfrft_fast(F, order, F.grid);
}

/// Two-sided QFT with the specialized kernels e^{-i x1 w1}/sqrt(2 pi) (left)
/// and e^{-j x2 w2}/sqrt(2 pi) (right); the alpha = pi/2 special case.
inline QField qft(const QField& f, const Grid2D& out) {
    const auto wt1 = detail::trapezoid_weights(f.grid.n1, f.grid.h1());
    const auto wt2 = detail::trapezoid_weights(f.grid.n2, f.grid.h2());
    const auto k1 =
        detail::qft_kernel_matrix(detail::axis_nodes(f.grid, 1), detail::axis_nodes(out, 1), wt1);
    const auto k2t =
        detail::qft_kernel_matrix(detail::axis_nodes(f.grid, 2), detail::axis_nodes(out, 2), wt2);
    return detail::two_sided_apply(f, out, k1, k2t);
}

inline QField qft(const QField& f) { return qft(f, f.grid); }

/// Fully naive double sum F[a,b] = sum_{m,n} K1 * f * K2 * weights with
/// general quaternion products, kept as a secondary oracle. Restricted to
/// grids of at most 32 nodes per axis.
inline QField qfrft_naive(const QField& f, const TransformOrder& order, const Grid2D& out) {
    validate(order);
    if (f.grid.n1 > 32 || f.grid.n2 > 32)
        fail(Errc::bad_grid, "qfrft_naive: oracle restricted to n <= 32 per axis");
    const auto wt1 = detail::trapezoid_weights(f.grid.n1, f.grid.h1());
    const auto wt2 = detail::trapezoid_weights(f.grid.n2, f.grid.h2());
    QField F = zero_field(out);
    for (int a = 0; a < out.n1; ++a)
        for (int b = 0; b < out.n2; ++b) {
            Quaternion acc{};
            for (int m = 0; m < f.grid.n1; ++m)
                for (int n = 0; n < f.grid.n2; ++n) {
                    const Quaternion k1 = kernel(order.alpha1, f.grid.x1(m), out.x1(a), 1);
                    const Quaternion k2 = kernel(order.alpha2, f.grid.x2(n), out.x2(b), 2);
                    acc += mul(mul(k1, f.at(m, n)), k2) * (wt1[m] * wt2[n]);
                }
            F.at(a, b) = acc;
        }
    return F;
}

} // namespace qfr
