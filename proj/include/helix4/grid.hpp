#pragma once

#include <cmath>
#include <cstddef>

namespace helix4 {

/// Uniform sample grid: sample i sits at s0 + i*h, i = 0..n-1.
struct Grid {
    double s0 = 0.0;
    double h = 1.0;
    std::size_t n = 0;

    double s(std::size_t i) const { return s0 + static_cast<double>(i) * h; }
    double length() const { return n > 1 ? static_cast<double>(n - 1) * h : 0.0; }

    /// Sub-grid with `trim` samples dropped at each end.
    Grid trimmed(std::size_t trim) const {
        Grid g;
        g.s0 = s(trim);
        g.h = h;
        g.n = n > 2 * trim ? n - 2 * trim : 0;
        return g;
    }

    bool same_as(const Grid& o, double tol = 1e-12) const {
        return n == o.n && std::fabs(s0 - o.s0) <= tol && std::fabs(h - o.h) <= tol;
    }
};

}  // namespace helix4
