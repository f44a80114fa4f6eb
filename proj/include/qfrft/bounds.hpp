#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfrft/moments.hpp"

namespace qfr {

enum class TheoremId { thm47, cor49, thm11, cor410, thm12 };

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::thm47: return "thm47";
        case TheoremId::cor49: return "cor49";
        case TheoremId::thm11: return "thm11";
        case TheoremId::cor410: return "cor410";
        case TheoremId::thm12: return "thm12";
    }
    return "?";
}

/// One inequality evaluation. rhs is the left-to-right sum of the signed
/// rhs_terms values, so re-summing the report reproduces it bit-exactly;
/// slack = lhs - rhs, nonnegative when the bound holds.
struct BoundReport {
    TheoremId theorem_id{};
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::vector<std::pair<std::string, double>> rhs_terms;
    std::vector<TransformOrder> orders;
    int axis = 0; // 0 when the theorem is not per-axis
    Grid2D grid;
};

inline double slack_tolerance(double lhs, double factor = 1e-6) {
    return factor * std::max(1.0, lhs);
}

inline bool passes(const BoundReport& r, double factor = 1e-6) {
    return r.slack >= -slack_tolerance(r.lhs, factor);
}

namespace detail {

inline void finish(BoundReport& r) {
    double rhs = 0.0;
    for (const auto& [label, value] : r.rhs_terms) rhs += value;
    r.rhs = rhs;
    r.slack = r.lhs - r.rhs;
}

inline BoundReport check_axis_bound(const QField& f, const FieldAnalysis& a,
                                    const TransformOrder& order, int axis, bool absolute_cov) {
    validate(order);
    require_unit_energy(a);
    const int k = axis - 1;
    const double s = std::sin(order.alpha(axis));
    const double c = std::cos(order.alpha(axis));
    const double mx = a.x2_rho2[k];

    BoundReport r;
    r.theorem_id = absolute_cov ? TheoremId::thm47 : TheoremId::cor49;
    r.orders = {order};
    r.axis = axis;
    r.grid = f.grid;
    r.lhs = mx * spectral_moment2_direct(f, order).spectral2_axis[k];
    const double cov2 =
        absolute_cov ? a.cov_abs[k] * a.cov_abs[k] : norm_sq(a.cov_signed[k]);
    r.rhs_terms = {
        {"1_quarter_sin2", 0.25 * s * s},
        {absolute_cov ? "2_sin2_cov_abs_sq" : "2_sin2_cov_signed_sq", s * s * cov2},
        {"3_cos2_spatial_sq", c * c * mx * mx},
        {"4_cross_sc", -2.0 * s * c * mx * a.sc_term[k]},
    };
    finish(r);
    return r;
}

inline BoundReport check_spatial_bound(const QField& f, const FieldAnalysis& a,
                                       const TransformOrder& order, bool absolute_cov) {
    validate(order);
    require_unit_energy(a);
    const double s1 = std::sin(order.alpha1), c1 = std::cos(order.alpha1);
    const double s2 = std::sin(order.alpha2), c2 = std::cos(order.alpha2);
    const double mx_total = a.x2_rho2[0] + a.x2_rho2[1];

    BoundReport r;
    r.theorem_id = absolute_cov ? TheoremId::thm11 : TheoremId::cor410;
    r.orders = {order};
    r.grid = f.grid;
    r.lhs = mx_total * spectral_moment2_direct(f, order).spectral2_total;
    const double quarter = 0.25 * std::abs(s1 + s2) * std::abs(s1 + s2);
    const double cov2 = absolute_cov
                            ? cov_alpha_abs(a, order) * cov_alpha_abs(a, order)
                            : norm_sq(cov_alpha_signed(a, order));
    const double cos_moment = c1 * c1 * a.x2_rho2[0] + c2 * c2 * a.x2_rho2[1];
    const double sc_sum = 2.0 * s1 * c1 * a.sc_term[0] + 2.0 * s2 * c2 * a.sc_term[1];
    r.rhs_terms = {
        {"1_quarter_sumsin_sq", quarter},
        {absolute_cov ? "2_cov_alpha_abs_sq" : "2_cov_alpha_signed_sq", cov2},
        {"3_spatial_cos_moment", mx_total * cos_moment},
        {"4_cross_sc", -mx_total * sc_sum},
    };
    finish(r);
    return r;
}

} // namespace detail

/// Directional bound, one axis: spatial moment times transform-domain moment
/// against the quarter-sin term, the squared absolute covariance, the cosine
/// moment term and the sign-indefinite cross term.
inline BoundReport check_thm47(const QField& f, const TransformOrder& order, int axis) {
    return detail::check_axis_bound(f, analyze(f), order, axis, true);
}

/// Same bound with the squared modulus of the signed covariance, which never
/// exceeds the absolute one.
inline BoundReport check_cor49(const QField& f, const TransformOrder& order, int axis) {
    return detail::check_axis_bound(f, analyze(f), order, axis, false);
}

/// Spatial (summed over axes) bound.
inline BoundReport check_thm11(const QField& f, const TransformOrder& order) {
    return detail::check_spatial_bound(f, analyze(f), order, true);
}

inline BoundReport check_cor410(const QField& f, const TransformOrder& order) {
    return detail::check_spatial_bound(f, analyze(f), order, false);
}

/// Transform-domain vs transform-domain bound at two orders: nine squared
/// mixed integrals minus the seven I-term products, every term reported.
inline BoundReport check_thm12(const QField& f, const TransformOrder& order_a,
                               const TransformOrder& order_b) {
    validate(order_a);
    validate(order_b);
    const FieldAnalysis a = analyze(f);
    require_unit_energy(a);

    const double sa1 = std::sin(order_a.alpha1), ca1 = std::cos(order_a.alpha1);
    const double sa2 = std::sin(order_a.alpha2), ca2 = std::cos(order_a.alpha2);
    const double sb1 = std::sin(order_b.alpha1), cb1 = std::cos(order_b.alpha1);
    const double sb2 = std::sin(order_b.alpha2), cb2 = std::cos(order_b.alpha2);

    BoundReport r;
    r.theorem_id = TheoremId::thm12;
    r.orders = {order_a, order_b};
    r.grid = f.grid;
    r.lhs = spectral_moment2_direct(f, order_a).spectral2_total *
            spectral_moment2_direct(f, order_b).spectral2_total;

    auto mixed = [&](double w1, double w2, const std::array<double, 2>& v) {
        const double m = w1 * v[0] + w2 * v[1];
        return m * m;
    };
    const double t2 = 0.25 * (sa1 * cb1 + sa2 * cb2) * (sa1 * cb1 + sa2 * cb2);
    const double t4 = 0.25 * (ca1 * sb1 + ca2 * sb2) * (ca1 * sb1 + ca2 * sb2);
    const ITerms it = i_terms(a, order_a, order_b);
    const double i1 = it.i[0], i2 = it.i[1], i3 = it.i[2], i4 = it.i[3];
    const double i5 = it.i[4], i6 = it.i[5], i7 = it.i[6], i8 = it.i[7];

    r.rhs_terms = {
        {"01_grad_mixed_sq", mixed(sa1 * sb1, sa2 * sb2, a.grad_rho_sq)},
        {"02_quarter_sin_cos_sq", t2},
        {"03_rho_drho_dmod_mixed_sq", mixed(sa1 * sb1, sa2 * sb2, a.rho_drho_dmod)},
        {"04_quarter_cos_sin_sq", t4},
        {"05_x2rho2_mixed_sq", mixed(ca1 * cb1, ca2 * cb2, a.x2_rho2)},
        {"06_xrho2_dmod_mixed_sq", mixed(ca1 * sb1, ca2 * sb2, a.x_rho2_dmod)},
        {"07_rho_drho_dmod_mixed_sq", mixed(sa1 * sb1, sa2 * sb2, a.rho_drho_dmod)},
        {"08_xrho2_dmod_sin_cos_sq", mixed(sa1 * cb1, sa2 * cb2, a.x_rho2_dmod)},
        {"09_dmod2_mixed_sq", mixed(sa1 * sb1, sa2 * sb2, a.dmod2_rho2)},
        {"10_neg_i1_i8", -i1 * i8},
        {"11_neg_i2_i8", -i2 * i8},
        {"12_neg_i3_i8", -i3 * i8},
        {"13_neg_i4_i5", -i4 * i5},
        {"14_neg_i4_i6", -i4 * i6},
        {"15_neg_i4_i7", -i4 * i7},
        {"16_neg_i4_i8", -i4 * i8},
    };
    detail::finish(r);
    return r;
}

} // namespace qfr
