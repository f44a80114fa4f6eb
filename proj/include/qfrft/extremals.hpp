#pragma once

#include <numbers>

#include "qfrft/bounds.hpp"

namespace qfr {

/// Gaussian equality cases of the uncertainty bounds.
///
/// PerAxis: rho = N exp(-x1^2/(2 l1 |sin a1|) - x2^2/(2 l2 |sin a2|)) with
///   phase slopes D_k = beta_k x_k (beta_k commuting pure quaternions).
/// Spatial: single width lambda1 and single slope beta1 on both axes;
///   requires sin a1 = sin a2.
/// Example51: rho = (pi l sin a)^{-1/2} exp(-|x|^2/(2 l sin a)) times
///   exp(beta |x|^2) with beta unit pure, so D_k = 2 beta x_k.
enum class ExtremalVariant { per_axis, spatial, example51 };

struct ExtremalSpec {
    ExtremalVariant variant = ExtremalVariant::example51;
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    double alpha1 = std::numbers::pi / 2;
    double alpha2 = std::numbers::pi / 2;
    Quaternion beta1{};
    Quaternion beta2{};
};

/// True iff the two pure quaternions commute: |b1 b2 - b2 b1| <= 1e-12.
/// Throws Errc::not_pure when either input has a scalar part.
inline bool check_remark48(const Quaternion& beta1, const Quaternion& beta2) {
    for (const Quaternion* b : {&beta1, &beta2})
        if (std::abs(scalar_part(*b)) > 1e-12 * std::max(1.0, norm(*b)))
            fail(Errc::not_pure, "check_remark48: inputs must be pure quaternions");
    return norm(mul(beta1, beta2) - mul(beta2, beta1)) <= 1e-12;
}

namespace detail {

inline void require_pure(const Quaternion& b, const char* what) {
    if (std::abs(scalar_part(b)) > 1e-12 * std::max(1.0, norm(b))) fail(Errc::not_pure, what);
}

inline double dot_vec(const Quaternion& a, const Quaternion& b) {
    return a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3;
}

inline double grid_extent(const Grid2D& g) {
    return std::min({-g.x1_min, g.x1_max, -g.x2_min, g.x2_max});
}

struct ExtremalShape {
    double width1 = 0.0; // sigma_k^2 of rho: rho ~ exp(-x_k^2 / (2 width_k))
    double width2 = 0.0;
    double amplitude = 0.0;
    Quaternion phase_axis{};   // unit pure, valid when has_phase
    double phase_coeff1 = 0.0; // phase angle = c1 x1^2 + c2 x2^2 along phase_axis
    double phase_coeff2 = 0.0;
    bool has_phase = false;
};

inline ExtremalShape extremal_shape(const ExtremalSpec& spec) {
    ExtremalShape sh;
    const double s1 = std::sin(spec.alpha1);
    const double s2 = std::sin(spec.alpha2);
    switch (spec.variant) {
        case ExtremalVariant::per_axis: {
            if (spec.lambda1 <= 0.0 || spec.lambda2 <= 0.0)
                fail(Errc::degenerate_order, "extremal: lambda must be positive");
            if (std::abs(s1) < kSinFloor || std::abs(s2) < kSinFloor)
                fail(Errc::degenerate_order, "extremal: order too close to a multiple of pi");
            require_pure(spec.beta1, "extremal: beta1 must be pure");
            require_pure(spec.beta2, "extremal: beta2 must be pure");
            if (!check_remark48(spec.beta1, spec.beta2))
                fail(Errc::non_commuting_betas, "extremal: beta1 and beta2 do not commute");
            sh.width1 = spec.lambda1 * std::abs(s1);
            sh.width2 = spec.lambda2 * std::abs(s2);
            sh.amplitude = 1.0 / std::pow(std::numbers::pi * std::numbers::pi * spec.lambda1 *
                                              spec.lambda2 * std::abs(s1) * std::abs(s2),
                                          0.25);
            const double n1 = norm(spec.beta1), n2 = norm(spec.beta2);
            if (n1 > 0.0 || n2 > 0.0) {
                sh.has_phase = true;
                sh.phase_axis = n1 >= n2 ? spec.beta1 * (1.0 / n1) : spec.beta2 * (1.0 / n2);
                sh.phase_coeff1 = 0.5 * dot_vec(spec.beta1, sh.phase_axis);
                sh.phase_coeff2 = 0.5 * dot_vec(spec.beta2, sh.phase_axis);
            }
            break;
        }
        case ExtremalVariant::spatial: {
            if (spec.lambda1 <= 0.0)
                fail(Errc::degenerate_order, "extremal: lambda must be positive");
            if (std::abs(s1) < kSinFloor || std::abs(s2) < kSinFloor)
                fail(Errc::degenerate_order, "extremal: order too close to a multiple of pi");
            if (std::abs(s1 - s2) > 1e-9)
                fail(Errc::degenerate_order, "extremal: spatial variant requires sin a1 = sin a2");
            require_pure(spec.beta1, "extremal: beta must be pure");
            if (norm(spec.beta1 - spec.beta2) > 1e-12 && norm(spec.beta2) > 0.0)
                fail(Errc::non_commuting_betas,
                     "extremal: spatial variant takes a single slope beta");
            sh.width1 = spec.lambda1 * std::abs(s1);
            sh.width2 = spec.lambda1 * std::abs(s2);
            sh.amplitude = 1.0 / std::sqrt(std::numbers::pi * spec.lambda1 *
                                           std::sqrt(std::abs(s1) * std::abs(s2)));
            const double nb = norm(spec.beta1);
            if (nb > 0.0) {
                sh.has_phase = true;
                sh.phase_axis = spec.beta1 * (1.0 / nb);
                sh.phase_coeff1 = sh.phase_coeff2 = 0.5 * nb;
            }
            break;
        }
        case ExtremalVariant::example51: {
            if (spec.lambda1 <= 0.0)
                fail(Errc::degenerate_order, "extremal: lambda must be positive");
            if (std::abs(spec.alpha1 - spec.alpha2) > 1e-12)
                fail(Errc::degenerate_order, "extremal: example51 takes a single alpha");
            if (s1 < kSinFloor)
                fail(Errc::degenerate_order, "extremal: example51 requires sin alpha > 0");
            require_pure(spec.beta1, "extremal: beta must be pure");
            if (std::abs(norm(spec.beta1) - 1.0) > 1e-9)
                fail(Errc::not_pure, "extremal: example51 requires a unit pure beta");
            sh.width1 = sh.width2 = spec.lambda1 * s1;
            sh.amplitude = 1.0 / std::sqrt(std::numbers::pi * spec.lambda1 * s1);
            sh.has_phase = true;
            sh.phase_axis = spec.beta1;
            sh.phase_coeff1 = sh.phase_coeff2 = 1.0;
            break;
        }
    }
    return sh;
}

} // namespace detail

/// D_k of the built extremal is slope_k * x_k.
inline Quaternion extremal_slope(const ExtremalSpec& spec, int axis) {
    switch (spec.variant) {
        case ExtremalVariant::per_axis: return axis == 1 ? spec.beta1 : spec.beta2;
        case ExtremalVariant::spatial: return spec.beta1;
        case ExtremalVariant::example51: return spec.beta1 * 2.0;
    }
    return {};
}

/// Sample the extremal on the grid. Throws Errc::grid_too_small when the
/// envelope does not decay to ~1e-7 inside the domain (extent below
/// 6 max_k sqrt(lambda_k |sin alpha_k|)), Errc::non_commuting_betas per
/// the mixed-derivative commutation requirement.
inline QField build_extremal(const ExtremalSpec& spec, const Grid2D& grid) {
    const detail::ExtremalShape sh = detail::extremal_shape(spec);
    const double needed = 6.0 * std::sqrt(std::max(sh.width1, sh.width2));
    if (detail::grid_extent(grid) < needed - 1e-12)
        fail(Errc::grid_too_small, "build_extremal: grid extent below 6 max sqrt(lambda |sin a|)");
    return sample(
        [&](double x1, double x2) {
            const double rho =
                sh.amplitude *
                std::exp(-0.5 * x1 * x1 / sh.width1 - 0.5 * x2 * x2 / sh.width2);
            if (!sh.has_phase) return Quaternion{rho};
            const double angle = sh.phase_coeff1 * x1 * x1 + sh.phase_coeff2 * x2 * x2;
            return exp_pure(sh.phase_axis, angle) * rho;
        },
        grid);
}

/// Relative slack tolerance for equality verification; tightens on fine
/// grids where transform-side discretization stops dominating.
inline double equality_tolerance(const Grid2D& grid) {
    return std::min(grid.n1, grid.n2) >= 513 ? 1e-4 : 1e-3;
}

/// Build the extremal and run the matching bound check: the per-axis bound
/// for PerAxis and Example51, the spatial bound for Spatial. The caller
/// judges |slack| / lhs against equality_tolerance().
inline BoundReport verify_equality(const ExtremalSpec& spec, const Grid2D& grid, int axis = 1) {
    const QField f = build_extremal(spec, grid);
    const TransformOrder order{spec.alpha1, spec.alpha2};
    if (spec.variant == ExtremalVariant::spatial) return check_thm11(f, order);
    return check_thm47(f, order, axis);
}

} // namespace qfr
