#pragma once

#include <cstdint>
#include <random>

#include "qfrft/field.hpp"

namespace qfr {

/// Parameters of one randomized smooth test signal: a Gaussian envelope
/// exp(-|x|^2 / (2 sigma^2)) with sigma in [0.7, 1.5] times the unit
/// quaternion phase exp(beta (c1 x1 + c2 x2 + c3 x1 x2)) with beta a random
/// unit pure quaternion and |c_i| <= 1.
struct RandomFieldParams {
    double sigma = 1.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    Quaternion beta{};
};

namespace detail {

// mt19937_64 output mapped to [0,1); distribution-free so the stream is
// identical across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace detail

inline RandomFieldParams random_field_params(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RandomFieldParams p;
    p.sigma = 0.7 + 0.8 * detail::uniform01(rng);
    p.c1 = 2.0 * detail::uniform01(rng) - 1.0;
    p.c2 = 2.0 * detail::uniform01(rng) - 1.0;
    p.c3 = 2.0 * detail::uniform01(rng) - 1.0;
    const double z = 2.0 * detail::uniform01(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * detail::uniform01(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    p.beta = Quaternion{0.0, s * std::cos(phi), s * std::sin(phi), z};
    return p;
}

inline QField field_from_params(const RandomFieldParams& p, const Grid2D& grid) {
    QField f = sample(
        [&](double x1, double x2) {
            const double rho =
                std::exp(-(x1 * x1 + x2 * x2) / (2.0 * p.sigma * p.sigma));
            const double angle = p.c1 * x1 + p.c2 * x2 + p.c3 * x1 * x2;
            return exp_pure(p.beta, angle) * rho;
        },
        grid);
    return normalize(f);
}

/// Seeded random smooth unit-energy field; deterministic given (seed, grid).
inline QField random_smooth_field(const Grid2D& grid, std::uint64_t seed) {
    return field_from_params(random_field_params(seed), grid);
}

/// Normalized Gaussian exp(-|x|^2 / (2 sigma^2)), unit energy on the grid.
inline QField unit_gaussian(const Grid2D& grid, double sigma) {
    return normalize(sample(
        [&](double x1, double x2) {
            return Quaternion{std::exp(-(x1 * x1 + x2 * x2) / (2.0 * sigma * sigma))};
        },
        grid));
}

} // namespace qfr
