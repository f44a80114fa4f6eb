#pragma once

#include <array>
#include <string>

#include "qfrft/moments.hpp"
#include "qfrft/random_fields.hpp"

namespace qfr::verify {

struct CaseResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    double worst() const {
        double w = 0.0;
        for (const auto& c : cases) w = std::max(w, c.measured);
        return w;
    }
};

/// The order set every seeded suite samples from.
inline std::array<double, 4> alpha_set() {
    return {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 2,
            2 * std::numbers::pi / 3};
}

inline std::vector<TransformOrder> alpha_combos() {
    std::vector<TransformOrder> v;
    for (double a1 : alpha_set())
        for (double a2 : alpha_set()) v.push_back({a1, a2});
    return v;
}

namespace detail {

inline std::string order_tag(const TransformOrder& o) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "a=(%.4f,%.4f)", o.alpha1, o.alpha2);
    return buf;
}

inline void add_case(SuiteResult& r, std::string name, double measured, double tol) {
    r.cases.push_back({std::move(name), measured, tol, measured <= tol});
}

} // namespace detail

/// ||F{f}|| = ||f|| for every order combo; relative norm deviation.
inline SuiteResult parseval_suite(int n, double extent, std::uint64_t seed, int fields) {
    SuiteResult r{"parseval", {}};
    const Grid2D g = make_grid(n, n, extent);
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        const double nf = l2_norm(f);
        for (const auto& o : alpha_combos()) {
            const double dev = std::abs(l2_norm(qfrft_fast(f, o)) - nf) / nf;
            detail::add_case(r, "seed=" + std::to_string(seed + i) + " " + detail::order_tag(o),
                             dev, 1e-4);
        }
    }
    return r;
}

/// Round trip through the inverse transform; max-abs error.
inline SuiteResult inverse_suite(int n, double extent, std::uint64_t seed, int fields) {
    SuiteResult r{"inverse", {}};
    const Grid2D g = make_grid(n, n, extent);
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        for (const auto& o : alpha_combos()) {
            const double dev = max_abs_diff(iqfrft_fast(qfrft_fast(f, o), o), f);
            detail::add_case(r, "seed=" + std::to_string(seed + i) + " " + detail::order_tag(o),
                             dev, 1e-4);
        }
    }
    return r;
}

/// Transform of the derivative against the modulation identity
/// F{d1 f} = -i cot(a1) F{x1 f} + i w1 csc(a1) F{f} and the right-sided
/// j-form along axis 2; relative residual norm.
inline SuiteResult derivative_identity_suite(int n, double extent, std::uint64_t seed,
                                             int fields) {
    SuiteResult r{"derivative-identity", {}};
    const Grid2D g = make_grid(n, n, extent);
    const auto combos = alpha_combos();
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        const TransformOrder o = combos[(seed + i) % combos.size()];
        const QField Ff = qfrft_fast(f, o);
        for (int axis = 1; axis <= 2; ++axis) {
            const QField Fd = qfrft_fast(partial(f, axis), o);
            const QField Fx = qfrft_fast(coordinate_multiply(f, axis), o);
            const double cot = std::cos(o.alpha(axis)) / std::sin(o.alpha(axis));
            const double csc = 1.0 / std::sin(o.alpha(axis));
            double rn = 0.0, dn = 0.0;
            for (int m = 0; m < g.n1; ++m)
                for (int nn = 0; nn < g.n2; ++nn) {
                    const double w = axis == 1 ? g.x1(m) : g.x2(nn);
                    const Quaternion R =
                        axis == 1 ? Fd.at(m, nn) + mul(quat_i, Fx.at(m, nn)) * cot -
                                        mul(quat_i, Ff.at(m, nn)) * (w * csc)
                                  : Fd.at(m, nn) + mul(Fx.at(m, nn), quat_j) * cot -
                                        mul(Ff.at(m, nn), quat_j) * (w * csc);
                    rn += norm_sq(R);
                    dn += norm_sq(Fd.at(m, nn));
                }
            detail::add_case(r,
                             "seed=" + std::to_string(seed + i) + " axis=" + std::to_string(axis) +
                                 " " + detail::order_tag(o),
                             std::sqrt(rn / dn), 1e-3);
        }
    }
    return r;
}

/// Scalar part of the phase derivative vanishes at masked nodes.
inline SuiteResult scalar_zero_suite(int n, double extent, std::uint64_t seed, int fields) {
    SuiteResult r{"scalar-zero", {}};
    const Grid2D g = make_grid(n, n, extent);
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        const PolarField p = polar_field(f);
        for (int axis = 1; axis <= 2; ++axis) {
            const QField d = phase_derivative(f, p, axis);
            double worst = 0.0;
            for (std::size_t t = 0; t < d.values.size(); ++t)
                if (p.mask[t]) worst = std::max(worst, std::abs(scalar_part(d.values[t])));
            detail::add_case(
                r, "seed=" + std::to_string(seed + i) + " axis=" + std::to_string(axis), worst,
                1e-8);
        }
    }
    return r;
}

/// |d_k f|^2 = (d_k rho)^2 + rho^2 |D_k|^2 at masked nodes, measured
/// relative to the field's largest |d_k f|^2.
inline SuiteResult modulus_split_suite(int n, double extent, std::uint64_t seed, int fields) {
    SuiteResult r{"modulus-split", {}};
    const Grid2D g = make_grid(n, n, extent);
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        const PolarField p = polar_field(f);
        const RealField rho{g, p.rho};
        for (int axis = 1; axis <= 2; ++axis) {
            const QField d = phase_derivative(f, p, axis);
            const QField df = partial(f, axis);
            const RealField drho = partial(rho, axis);
            double scale = 0.0;
            for (std::size_t t = 0; t < f.values.size(); ++t)
                if (p.mask[t]) scale = std::max(scale, norm_sq(df.values[t]));
            double worst = 0.0;
            for (std::size_t t = 0; t < f.values.size(); ++t) {
                if (!p.mask[t]) continue;
                const double lhs = norm_sq(df.values[t]);
                const double rhs = drho.values[t] * drho.values[t] +
                                   p.rho[t] * p.rho[t] * norm_sq(d.values[t]);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
            detail::add_case(
                r, "seed=" + std::to_string(seed + i) + " axis=" + std::to_string(axis),
                worst / scale, 1e-6);
        }
    }
    return r;
}

/// Integration-by-parts identity int x_k rho d_k rho = -1/2 for unit-energy
/// fields, plus the pointwise scalar-part identity
/// Sc[e_k (d_k f) x_k conj(f)] = Sc[e_k x_k rho^2 D_k].
inline SuiteResult parts_identity_suite(int n, double extent, std::uint64_t seed, int fields) {
    SuiteResult r{"parts-identity", {}};
    const Grid2D g = make_grid(n, n, extent);
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        const FieldAnalysis a = analyze(f);
        const PolarField p = polar_field(f);
        for (int axis = 1; axis <= 2; ++axis) {
            const int k = axis - 1;
            detail::add_case(r,
                             "eq44 seed=" + std::to_string(seed + i) +
                                 " axis=" + std::to_string(axis),
                             std::abs(a.x_rho_drho[k] + 0.5), 1e-4);
            const QField d = phase_derivative(f, p, axis);
            const QField df = partial(f, axis);
            const Quaternion e = axis == 1 ? quat_i : quat_j;
            double worst = 0.0;
            std::size_t t = 0;
            for (int m = 0; m < g.n1; ++m)
                for (int nn = 0; nn < g.n2; ++nn, ++t) {
                    if (!p.mask[t]) continue;
                    const double x = axis == 1 ? g.x1(m) : g.x2(nn);
                    const double lhs =
                        scalar_part(mul(e, mul(df.values[t] * x, conj(f.values[t]))));
                    const double rhs =
                        scalar_part(mul(e, d.values[t] * (x * p.rho[t] * p.rho[t])));
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
            detail::add_case(r,
                             "pointwise seed=" + std::to_string(seed + i) +
                                 " axis=" + std::to_string(axis),
                             worst, 1e-8);
        }
    }
    return r;
}

/// Transform-side spectral moment against the spatial-domain formula,
/// relative deviation over the order set.
inline SuiteResult thm45_suite(int n, double extent, std::uint64_t seed, int fields) {
    SuiteResult r{"thm45", {}};
    const Grid2D g = make_grid(n, n, extent);
    for (int i = 0; i < fields; ++i) {
        const QField f = random_smooth_field(g, seed + i);
        const FieldAnalysis a = analyze(f);
        for (const auto& o : alpha_combos()) {
            const double direct = spectral_moment2_direct(f, o).spectral2_total;
            const double spatial =
                spectral_moment2_spatial(a, o, 1) + spectral_moment2_spatial(a, o, 2);
            detail::add_case(r, "seed=" + std::to_string(seed + i) + " " + detail::order_tag(o),
                             std::abs(direct - spatial) / direct, 1e-3);
        }
    }
    return r;
}

} // namespace qfr::verify
