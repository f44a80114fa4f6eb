#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "qfrft/errors.hpp"
#include "qfrft/grid.hpp"
#include "qfrft/quaternion.hpp"

namespace qfr {

/// Discretized quaternion signal: one value per grid node, row-major with
/// x2 varying fastest.
struct QField {
    Grid2D grid;
    std::vector<Quaternion> values;

    const Quaternion& at(int m, int n) const { return values[grid.index(m, n)]; }
    Quaternion& at(int m, int n) { return values[grid.index(m, n)]; }
};

struct RealField {
    Grid2D grid;
    std::vector<double> values;

    double at(int m, int n) const { return values[grid.index(m, n)]; }
    double& at(int m, int n) { return values[grid.index(m, n)]; }
};

inline QField zero_field(const Grid2D& g) { return QField{g, std::vector<Quaternion>(g.size())}; }

namespace detail {

/// Fixed pairwise reduction. The recursion tree depends only on the length,
/// so results are bit-reproducible run to run.
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

/// Trapezoid weights along one axis: h at interior nodes, h/2 at the ends.
inline std::vector<double> trapezoid_weights(int n, double h) {
    std::vector<double> w(static_cast<std::size_t>(n), h);
    w.front() = 0.5 * h;
    w.back() = 0.5 * h;
    return w;
}

} // namespace detail

/// Sample a pointwise function onto the grid. Throws Errc::non_finite if any
/// produced component is not finite.
inline QField sample(const std::function<Quaternion(double, double)>& fn, const Grid2D& g) {
    QField f{g, {}};
    f.values.reserve(g.size());
    for (int m = 0; m < g.n1; ++m) {
        const double x1 = g.x1(m);
        for (int n = 0; n < g.n2; ++n) {
            Quaternion q = fn(x1, g.x2(n));
            if (!is_finite(q)) fail(Errc::non_finite, "sample: function produced non-finite value");
            f.values.push_back(q);
        }
    }
    return f;
}

inline RealField sample_real(const std::function<double(double, double)>& fn, const Grid2D& g) {
    RealField f{g, {}};
    f.values.reserve(g.size());
    for (int m = 0; m < g.n1; ++m)
        for (int n = 0; n < g.n2; ++n) f.values.push_back(fn(g.x1(m), g.x2(n)));
    return f;
}

/// Tensor-product trapezoid quadrature of a real field over its grid.
/// Exact for bilinear integrands; summation order is the fixed pairwise tree.
inline double integrate(const RealField& g) {
    const auto w1 = detail::trapezoid_weights(g.grid.n1, g.grid.h1());
    const auto w2 = detail::trapezoid_weights(g.grid.n2, g.grid.h2());
    std::vector<double> scratch(g.grid.size());
    std::size_t idx = 0;
    for (int m = 0; m < g.grid.n1; ++m)
        for (int n = 0; n < g.grid.n2; ++n, ++idx) scratch[idx] = g.values[idx] * w1[m] * w2[n];
    return detail::pairwise_sum(scratch.data(), scratch.size());
}

/// <f, g> = integral of f * conj(g), a quaternion. Fields must share a grid.
inline Quaternion inner(const QField& f, const QField& g) {
    if (f.grid != g.grid) fail(Errc::grid_mismatch, "inner: fields live on different grids");
    RealField c0{f.grid, std::vector<double>(f.grid.size())};
    RealField c1 = c0, c2 = c0, c3 = c0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Quaternion p = mul(f.values[i], conj(g.values[i]));
        c0.values[i] = p.q0;
        c1.values[i] = p.q1;
        c2.values[i] = p.q2;
        c3.values[i] = p.q3;
    }
    return {integrate(c0), integrate(c1), integrate(c2), integrate(c3)};
}

inline double l2_norm_sq(const QField& f) { return scalar_part(inner(f, f)); }

inline double l2_norm(const QField& f) { return std::sqrt(l2_norm_sq(f)); }

/// Scale to unit L2 norm. Throws Errc::zero_field on an all-zero field.
inline QField normalize(const QField& f) {
    const double n = l2_norm(f);
    if (n == 0.0) fail(Errc::zero_field, "normalize: field has zero norm");
    QField out{f.grid, f.values};
    const double s = 1.0 / n;
    for (auto& q : out.values) q *= s;
    return out;
}

namespace detail {

// 4th-order first-derivative stencils: 5-point central in the interior,
// one-sided / offset variants at the first and last two nodes. Exact for
// polynomials up to degree 4.
template <typename T>
T stencil_derivative(const T* line, int len, std::ptrdiff_t stride, int m, double inv12h) {
    auto v = [&](int idx) -> const T& { return line[stride * idx]; };
    if (m >= 2 && m <= len - 3) {
        return (v(m - 2) - 8.0 * v(m - 1) + 8.0 * v(m + 1) - v(m + 2)) * inv12h;
    }
    if (m == 0)
        return (-25.0 * v(0) + 48.0 * v(1) - 36.0 * v(2) + 16.0 * v(3) - 3.0 * v(4)) * inv12h;
    if (m == 1)
        return (-3.0 * v(0) - 10.0 * v(1) + 18.0 * v(2) - 6.0 * v(3) + v(4)) * inv12h;
    if (m == len - 2)
        return (3.0 * v(len - 1) + 10.0 * v(len - 2) - 18.0 * v(len - 3) + 6.0 * v(len - 4) -
                v(len - 5)) *
               inv12h;
    // m == len - 1
    return (25.0 * v(len - 1) - 48.0 * v(len - 2) + 36.0 * v(len - 3) - 16.0 * v(len - 4) +
            3.0 * v(len - 5)) *
           inv12h;
}

template <typename T>
std::vector<T> partial_values(const std::vector<T>& v, const Grid2D& g, int axis) {
    if (axis != 1 && axis != 2) fail(Errc::bad_grid, "partial: axis must be 1 or 2");
    const int len = axis == 1 ? g.n1 : g.n2;
    if (len < 5) fail(Errc::grid_too_small, "partial: need at least 5 nodes along the axis");
    const double inv12h = 1.0 / (12.0 * (axis == 1 ? g.h1() : g.h2()));
    std::vector<T> out(v.size());
    if (axis == 1) {
        const std::ptrdiff_t stride = g.n2;
        for (int n = 0; n < g.n2; ++n) {
            const T* line = v.data() + n;
            for (int m = 0; m < g.n1; ++m)
                out[g.index(m, n)] = stencil_derivative(line, len, stride, m, inv12h);
        }
    } else {
        for (int m = 0; m < g.n1; ++m) {
            const T* line = v.data() + g.index(m, 0);
            for (int n = 0; n < g.n2; ++n)
                out[g.index(m, n)] = stencil_derivative(line, len, std::ptrdiff_t{1}, n, inv12h);
        }
    }
    return out;
}

} // namespace detail

/// Componentwise partial derivative along axis k (1 or 2).
inline QField partial(const QField& f, int axis) {
    return {f.grid, detail::partial_values(f.values, f.grid, axis)};
}

/// x_k * f, the coordinate-multiplied field.
inline QField coordinate_multiply(const QField& f, int axis) {
    QField out{f.grid, f.values};
    for (int m = 0; m < f.grid.n1; ++m)
        for (int n = 0; n < f.grid.n2; ++n)
            out.at(m, n) *= axis == 1 ? f.grid.x1(m) : f.grid.x2(n);
    return out;
}

inline double max_abs_diff(const QField& a, const QField& b) {
    if (a.grid != b.grid) fail(Errc::grid_mismatch, "max_abs_diff: fields on different grids");
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, norm(a.values[i] - b.values[i]));
    return d;
}

inline RealField partial(const RealField& f, int axis) {
    return {f.grid, detail::partial_values(f.values, f.grid, axis)};
}

/// Per-node polar decomposition of a field, with the integration mask used
/// by all phase-dependent functionals.
///
/// mask[i] is true where rho >= rho_floor with rho_floor = 1e-9 * max(rho);
/// nodes below the floor are excluded from phase integrals downstream.
struct PolarField {
    Grid2D grid;
    std::vector<double> rho;
    std::vector<double> theta;
    std::vector<Quaternion> u;
    std::vector<std::uint8_t> u_defined;
    std::vector<std::uint8_t> mask;
};

inline constexpr double kRhoFloorRel = 1e-9;

inline PolarField polar_field(const QField& f) {
    PolarField p;
    p.grid = f.grid;
    const std::size_t n = f.values.size();
    p.rho.resize(n);
    p.theta.resize(n);
    p.u.resize(n);
    p.u_defined.resize(n);
    p.mask.resize(n);
    double rho_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const PolarQuat pq = polar(f.values[i]);
        p.rho[i] = pq.rho;
        p.theta[i] = pq.theta;
        p.u[i] = pq.u;
        p.u_defined[i] = pq.u_defined ? 1 : 0;
        rho_max = std::max(rho_max, pq.rho);
    }
    const double floor = kRhoFloorRel * rho_max;
    for (std::size_t i = 0; i < n; ++i) p.mask[i] = (rho_max > 0.0 && p.rho[i] >= floor) ? 1 : 0;
    return p;
}

namespace detail {

/// Unit-phase field e^{u theta} = f / rho. Wherever rho is positive the
/// quotient is well conditioned at any magnitude, since numerator and
/// denominator scale together; only nodes where rho underflows to exactly
/// zero are filled from the nearest nonzero neighbor (multi-source BFS over
/// the 4-neighborhood) so the difference stencils see smooth data.
inline std::vector<Quaternion> unit_phase_values(const QField& f, const PolarField& p) {
    const Grid2D& g = f.grid;
    const std::size_t n = f.values.size();
    std::vector<Quaternion> phase(n, Quaternion{1.0});
    std::vector<std::uint8_t> have(n, 0);
    std::vector<std::size_t> queue;
    queue.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.rho[i] > 0.0) {
            phase[i] = f.values[i] * (1.0 / p.rho[i]);
            have[i] = 1;
            queue.push_back(i);
        }
    }
    if (queue.empty()) return phase; // all-zero field: constant phase
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t i = queue[head];
        const int m = static_cast<int>(i) / g.n2;
        const int nn = static_cast<int>(i) % g.n2;
        const int neigh[4][2] = {{m - 1, nn}, {m + 1, nn}, {m, nn - 1}, {m, nn + 1}};
        for (const auto& mn : neigh) {
            if (mn[0] < 0 || mn[0] >= g.n1 || mn[1] < 0 || mn[1] >= g.n2) continue;
            const std::size_t idx = g.index(mn[0], mn[1]);
            if (!have[idx]) {
                phase[idx] = phase[i];
                have[idx] = 1;
                queue.push_back(idx);
            }
        }
    }
    return phase;
}

} // namespace detail

/// Phase-derivative field D_k = (d/dx_k e^{u theta}) e^{-u theta}.
///
/// The unit-phase field is reconstructed from the polar data and
/// differentiated with partial(); nodes with mask false yield zero and are
/// excluded from downstream integrals. D_k is pure (zero scalar part) up to
/// discretization.
inline QField phase_derivative(const QField& f, const PolarField& p, int axis) {
    const auto phase = detail::unit_phase_values(f, p);
    const auto dphase = detail::partial_values(phase, f.grid, axis);
    QField d{f.grid, std::vector<Quaternion>(f.values.size())};
    for (std::size_t i = 0; i < d.values.size(); ++i)
        if (p.mask[i]) d.values[i] = mul(dphase[i], conj(phase[i]));
    return d;
}

inline QField phase_derivative(const QField& f, int axis) {
    return phase_derivative(f, polar_field(f), axis);
}

} // namespace qfr
