#pragma once

#include <cstddef>

#include "qfrft/errors.hpp"

namespace qfr {

/// Uniform rectangular sampling lattice. Nodes along axis a are
/// x_a[m] = x_a_min + m * h_a, m = 0 .. n_a-1, with
/// h_a = (x_a_max - x_a_min) / (n_a - 1).
struct Grid2D {
    int n1 = 0;
    int n2 = 0;
    double x1_min = 0.0, x1_max = 0.0;
    double x2_min = 0.0, x2_max = 0.0;

    double h1() const { return (x1_max - x1_min) / (n1 - 1); }
    double h2() const { return (x2_max - x2_min) / (n2 - 1); }
    double x1(int m) const { return x1_min + m * h1(); }
    double x2(int n) const { return x2_min + n * h2(); }

    std::size_t size() const { return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2); }

    // Row-major storage with x2 varying fastest.
    std::size_t index(int m, int n) const { return static_cast<std::size_t>(m) * n2 + n; }

    friend bool operator==(const Grid2D& a, const Grid2D& b) {
        return a.n1 == b.n1 && a.n2 == b.n2 && a.x1_min == b.x1_min && a.x1_max == b.x1_max &&
               a.x2_min == b.x2_min && a.x2_max == b.x2_max;
    }
    friend bool operator!=(const Grid2D& a, const Grid2D& b) { return !(a == b); }
};

/// Symmetric grid on [-extent, extent]^2. Requires n1, n2 >= 4 and extent > 0.
inline Grid2D make_grid(int n1, int n2, double extent) {
    if (n1 < 4 || n2 < 4) fail(Errc::bad_grid, "make_grid: need at least 4 nodes per axis");
    if (!(extent > 0.0)) fail(Errc::bad_grid, "make_grid: extent must be positive");
    return Grid2D{n1, n2, -extent, extent, -extent, extent};
}

} // namespace qfr
