#pragma once

#include <array>
#include <mutex>

#include "qfrft/field.hpp"
#include "qfrft/transform.hpp"

namespace qfr {

/// Second moments of a unit-energy signal and of its transform.
struct MomentSet {
    std::array<double, 2> spatial2_axis{};  // integral of x_k^2 |f|^2
    double spatial2_total = 0.0;
    std::array<double, 2> spectral2_axis{}; // integral of w_k^2 |F|^2
    double spectral2_total = 0.0;
};

/// Covariance functionals of one field at one order.
struct CovarianceSet {
    std::array<double, 2> cov_abs_axis{};
    std::array<Quaternion, 2> cov_signed_axis{};
    double cov_abs_alpha = 0.0;
    Quaternion cov_signed_alpha{};
    std::array<double, 2> sc_term_axis{};
};

/// The eight integrals of the two-order uncertainty bound; the first four
/// belong to order alpha, the last four to order beta.
struct ITerms {
    std::array<double, 8> i{};
};

struct ITermQuad {
    double i1 = 0.0, i2 = 0.0, i3 = 0.0, i4 = 0.0;
};

inline constexpr double kUnitEnergyTol = 1e-6;

namespace detail {

inline Quaternion axis_unit(int axis) { return axis == 1 ? quat_i : quat_j; }

inline double axis_coord(const Grid2D& g, int axis, int m, int n) {
    return axis == 1 ? g.x1(m) : g.x2(n);
}

} // namespace detail

/// Everything the moment and bound formulas consume, computed in one pass:
/// the polar data, both phase-derivative fields, and the per-axis integrals
/// they enter through. Phase-dependent integrands are zero at masked-out
/// nodes.
struct FieldAnalysis {
    Grid2D grid;
    double energy = 0.0;                          // ||f||_2
    std::array<double, 2> grad_rho_sq{};          // int (d_k rho)^2
    std::array<double, 2> x2_rho2{};              // int x_k^2 rho^2
    std::array<double, 2> dmod2_rho2{};           // int rho^2 |D_k|^2
    std::array<double, 2> sc_term{};              // int x_k rho^2 Sc[e_k D_k]
    std::array<double, 2> cov_abs{};              // int |x_k D_k| rho^2
    std::array<Quaternion, 2> cov_signed{};       // int x_k D_k rho^2
    std::array<double, 2> rho_drho_dmod{};        // int rho (d_k rho) |D_k|
    std::array<double, 2> x_rho2_dmod{};          // int x_k rho^2 |D_k|
    std::array<double, 2> x_rho_drho{};           // int x_k rho (d_k rho)
};

inline FieldAnalysis analyze(const QField& f) {
    FieldAnalysis a;
    a.grid = f.grid;
    a.energy = l2_norm(f);
    const PolarField p = polar_field(f);
    RealField rho{f.grid, p.rho};
    for (int axis = 1; axis <= 2; ++axis) {
        const int k = axis - 1;
        const RealField drho = partial(rho, axis);
        const QField d = phase_derivative(f, p, axis);
        const Quaternion e = detail::axis_unit(axis);
        RealField ig_grad{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_x2{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_dmod2{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_sc{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_covabs{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_cs0 = ig_covabs, ig_cs1 = ig_covabs, ig_cs2 = ig_covabs, ig_cs3 = ig_covabs;
        RealField ig_rdd{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_xrd{f.grid, std::vector<double>(f.grid.size())};
        RealField ig_xrr{f.grid, std::vector<double>(f.grid.size())};
        std::size_t i = 0;
        for (int m = 0; m < f.grid.n1; ++m)
            for (int n = 0; n < f.grid.n2; ++n, ++i) {
                const double x = detail::axis_coord(f.grid, axis, m, n);
                const double r = p.rho[i];
                const double r2 = r * r;
                ig_grad.values[i] = drho.values[i] * drho.values[i];
                ig_x2.values[i] = x * x * r2;
                ig_xrr.values[i] = x * r * drho.values[i];
                if (p.mask[i]) {
                    const Quaternion& dk = d.values[i];
                    const double dmod = norm(dk);
                    ig_dmod2.values[i] = r2 * norm_sq(dk);
                    ig_sc.values[i] = x * r2 * scalar_part(mul(e, dk));
                    ig_covabs.values[i] = std::abs(x) * dmod * r2;
                    ig_cs0.values[i] = x * r2 * dk.q0;
                    ig_cs1.values[i] = x * r2 * dk.q1;
                    ig_cs2.values[i] = x * r2 * dk.q2;
                    ig_cs3.values[i] = x * r2 * dk.q3;
                    ig_rdd.values[i] = r * drho.values[i] * dmod;
                    ig_xrd.values[i] = x * r2 * dmod;
                }
            }
        a.grad_rho_sq[k] = integrate(ig_grad);
        a.x2_rho2[k] = integrate(ig_x2);
        a.dmod2_rho2[k] = integrate(ig_dmod2);
        a.sc_term[k] = integrate(ig_sc);
        a.cov_abs[k] = integrate(ig_covabs);
        a.cov_signed[k] =
            Quaternion{integrate(ig_cs0), integrate(ig_cs1), integrate(ig_cs2), integrate(ig_cs3)};
        a.rho_drho_dmod[k] = integrate(ig_rdd);
        a.x_rho2_dmod[k] = integrate(ig_xrd);
        a.x_rho_drho[k] = integrate(ig_xrr);
    }
    return a;
}

inline void require_unit_energy(const FieldAnalysis& a) {
    if (std::abs(a.energy - 1.0) > kUnitEnergyTol)
        fail(Errc::not_normalized, "field is not unit energy within 1e-6");
}

/// Per-axis and total spatial second moments. Requires unit energy.
inline MomentSet spatial_moment2(const FieldAnalysis& a) {
    require_unit_energy(a);
    MomentSet m;
    m.spatial2_axis = a.x2_rho2;
    m.spatial2_total = m.spatial2_axis[0] + m.spatial2_axis[1];
    return m;
}

inline MomentSet spatial_moment2(const QField& f) { return spatial_moment2(analyze(f)); }

namespace detail {

/// Transform via the fast path; the first invocation in a process is
/// cross-checked against the direct-quadrature oracle.
inline QField spectral_transform(const QField& f, const TransformOrder& order) {
    QField F = qfrft_fast(f, order);
    static std::once_flag spot_check;
    std::call_once(spot_check, [&] {
        const QField ref = qfrft(f, order);
        double dev = 0.0;
        for (std::size_t i = 0; i < F.values.size(); ++i)
            dev = std::max(dev, norm(F.values[i] - ref.values[i]));
        if (dev > 1e-8)
            throw std::logic_error("qfrft_fast deviates from the direct quadrature oracle");
    });
    return F;
}

} // namespace detail

/// Spectral second moments computed from the transform itself.
inline MomentSet spectral_moment2_direct(const QField& f, const TransformOrder& order) {
    validate(order);
    const QField F = detail::spectral_transform(f, order);
    MomentSet m;
    for (int axis = 1; axis <= 2; ++axis) {
        RealField ig{F.grid, std::vector<double>(F.grid.size())};
        std::size_t i = 0;
        for (int mm = 0; mm < F.grid.n1; ++mm)
            for (int nn = 0; nn < F.grid.n2; ++nn, ++i) {
                const double w = detail::axis_coord(F.grid, axis, mm, nn);
                ig.values[i] = w * w * norm_sq(F.values[i]);
            }
        m.spectral2_axis[axis - 1] = integrate(ig);
    }
    m.spectral2_total = m.spectral2_axis[0] + m.spectral2_axis[1];
    return m;
}

/// Spectral second moment along one axis evaluated entirely in the spatial
/// domain (no transform): sin^2 a int (d_k rho)^2 + cos^2 a int x_k^2 rho^2
/// + sin^2 a int rho^2 |D_k|^2 - 2 sin a cos a int x_k rho^2 Sc[e_k D_k].
inline double spectral_moment2_spatial(const FieldAnalysis& a, const TransformOrder& order,
                                       int axis) {
    const int k = axis - 1;
    const double s = std::sin(order.alpha(axis));
    const double c = std::cos(order.alpha(axis));
    return s * s * a.grad_rho_sq[k] + c * c * a.x2_rho2[k] + s * s * a.dmod2_rho2[k] -
           2.0 * s * c * a.sc_term[k];
}

inline double spectral_moment2_spatial(const QField& f, const TransformOrder& order, int axis) {
    return spectral_moment2_spatial(analyze(f), order, axis);
}

/// Absolute covariance COV_{x_k w_k} = int |x_k D_k| rho^2.
inline double cov_abs(const QField& f, int axis) { return analyze(f).cov_abs[axis - 1]; }

/// Signed covariance Cov_{x_k w_k} = int x_k D_k rho^2, a quaternion with
/// |Cov| <= COV.
inline Quaternion cov_signed(const QField& f, int axis) { return analyze(f).cov_signed[axis - 1]; }

/// Order-weighted absolute covariance: sum_k |sin alpha_k| COV_{x_k w_k}.
inline double cov_alpha_abs(const FieldAnalysis& a, const TransformOrder& order) {
    return std::abs(std::sin(order.alpha1)) * a.cov_abs[0] +
           std::abs(std::sin(order.alpha2)) * a.cov_abs[1];
}

/// Order-weighted signed covariance: sum_k sin alpha_k Cov_{x_k w_k}.
inline Quaternion cov_alpha_signed(const FieldAnalysis& a, const TransformOrder& order) {
    return a.cov_signed[0] * std::sin(order.alpha1) + a.cov_signed[1] * std::sin(order.alpha2);
}

inline double cov_alpha_abs(const QField& f, const TransformOrder& order) {
    return cov_alpha_abs(analyze(f), order);
}

inline Quaternion cov_alpha_signed(const QField& f, const TransformOrder& order) {
    return cov_alpha_signed(analyze(f), order);
}

/// int x_k rho^2 Sc[e_k D_k], the sign-indefinite term of the moment formula.
inline double sc_term(const QField& f, int axis) { return analyze(f).sc_term[axis - 1]; }

inline CovarianceSet covariance_set(const FieldAnalysis& a, const TransformOrder& order) {
    CovarianceSet c;
    c.cov_abs_axis = a.cov_abs;
    c.cov_signed_axis = a.cov_signed;
    c.cov_abs_alpha = cov_alpha_abs(a, order);
    c.cov_signed_alpha = cov_alpha_signed(a, order);
    c.sc_term_axis = a.sc_term;
    return c;
}

inline CovarianceSet covariance_set(const QField& f, const TransformOrder& order) {
    return covariance_set(analyze(f), order);
}

/// The four I-integrals for one order; call at both orders to assemble the
/// eight of the two-order bound. I1 + I2 + I3 - I4 equals the spectral
/// moment total by the spatial-domain formula.
inline ITermQuad i_terms(const FieldAnalysis& a, const TransformOrder& order) {
    ITermQuad q;
    for (int axis = 1; axis <= 2; ++axis) {
        const int k = axis - 1;
        const double s = std::sin(order.alpha(axis));
        const double c = std::cos(order.alpha(axis));
        q.i1 += s * s * a.grad_rho_sq[k];
        q.i2 += c * c * a.x2_rho2[k];
        q.i3 += s * s * a.dmod2_rho2[k];
        q.i4 += 2.0 * s * c * a.sc_term[k];
    }
    return q;
}

inline ITermQuad i_terms(const QField& f, const TransformOrder& order) {
    return i_terms(analyze(f), order);
}

inline ITerms i_terms(const FieldAnalysis& a, const TransformOrder& order_a,
                      const TransformOrder& order_b) {
    const ITermQuad qa = i_terms(a, order_a);
    const ITermQuad qb = i_terms(a, order_b);
    return ITerms{{qa.i1, qa.i2, qa.i3, qa.i4, qb.i1, qb.i2, qb.i3, qb.i4}};
}

} // namespace qfr
