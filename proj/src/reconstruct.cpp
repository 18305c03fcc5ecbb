#include "helix4/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helix4/errors.hpp"
#include "helix4/gram_schmidt.hpp"

namespace helix4 {

namespace {

// Fritsch-Carlson slopes on a uniform grid (degenerates to the secant for
// n = 2), used for the RK4 half-step curvature values.
std::vector<double> pchip_slopes(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    std::vector<double> m(n, 0.0);
    if (n == 2) {
        m[0] = m[1] = (y[1] - y[0]) / h;
        return m;
    }
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / h;
    for (std::size_t i = 1; i + 1 < n; ++i)
        m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);
    const auto endpoint = [](double d0, double d1) {
        double s = 1.5 * d0 - 0.5 * d1;
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0))
            s = 3.0 * d0;
        return s;
    };
    m[0] = endpoint(d[0], d[1]);
    m[n - 1] = endpoint(d[n - 2], d[n - 3]);
    return m;
}

// Hermite value at the middle of cell i.
std::vector<double> cell_midpoints(const std::vector<double>& y, double h) {
    const std::vector<double> m = pchip_slopes(y, h);
    std::vector<double> mid(y.size() - 1);
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        mid[i] = 0.5 * (y[i] + y[i + 1]) + h * (m[i] - m[i + 1]) / 8.0;
    return mid;
}

struct State {
    Frame4 e;
    Vec4 p;
};

State frenet_rhs(const State& y, double k1, double k2, double k3) {
    State d;
    d.e[0] = k1 * y.e[1];
    d.e[1] = -k1 * y.e[0] + k2 * y.e[2];
    d.e[2] = -k2 * y.e[1] + k3 * y.e[3];
    d.e[3] = -k3 * y.e[2];
    d.p = y.e[0];
    return d;
}

State axpy(const State& y, double a, const State& d) {
    State out;
    for (int r = 0; r < 4; ++r) out.e[r] = y.e[r] + a * d.e[r];
    out.p = y.p + a * d.p;
    return out;
}

}  // namespace

ReconstructionResult reconstruct_curve(const CurvatureProfile& profile, const Frame4& frame0,
                                       const Vec4& p0, const ReconstructOptions& opts) {
    const Grid grid = profile.grid();
    const double h = grid.h;
    const std::size_t n = grid.n;
    const double kappa_min = opts.kappa_min > 0.0 ? opts.kappa_min : 1e-8 / h;

    validate_profile(profile, kappa_min);
    if (orthonormality_defect(frame0) > opts.frame_tol)
        throw BadInitialFrame("reconstruct_curve: frame0 defect " +
                              std::to_string(orthonormality_defect(frame0)));
    double kmax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        kmax = std::max({kmax, std::fabs(profile.kappa1[i]), std::fabs(profile.kappa2[i]),
                         std::fabs(profile.kappa3[i])});
    if (h * kmax > 0.1)
        throw ProfileTooCoarse("reconstruct_curve: h * max|kappa| = " + std::to_string(h * kmax) +
                               " exceeds 0.1");

    std::vector<double> mid1, mid2, mid3;
    if (n > 1) {
        mid1 = cell_midpoints(profile.kappa1.values, h);
        mid2 = cell_midpoints(profile.kappa2.values, h);
        mid3 = cell_midpoints(profile.kappa3.values, h);
    }

    ReconstructionResult res;
    res.curve.grid = grid;
    res.curve.points.resize(n);
    res.apparatus.grid = grid;
    res.apparatus.frames.resize(n);
    res.apparatus.kappa1 = profile.kappa1;
    res.apparatus.kappa2 = profile.kappa2;
    res.apparatus.kappa3 = profile.kappa3;
    res.apparatus.kappa_min = kappa_min;
    res.apparatus.estimated = false;

    State y{frame0, p0};
    res.curve.points[0] = y.p;
    res.apparatus.frames[0] = y.e;
    double drift = 0.0;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const State d1 = frenet_rhs(y, profile.kappa1[i], profile.kappa2[i], profile.kappa3[i]);
        const State y2 = axpy(y, 0.5 * h, d1);
        const State d2 = frenet_rhs(y2, mid1[i], mid2[i], mid3[i]);
        const State y3 = axpy(y, 0.5 * h, d2);
        const State d3 = frenet_rhs(y3, mid1[i], mid2[i], mid3[i]);
        const State y4 = axpy(y, h, d3);
        const State d4 =
            frenet_rhs(y4, profile.kappa1[i + 1], profile.kappa2[i + 1], profile.kappa3[i + 1]);

        for (int r = 0; r < 4; ++r)
            y.e[r] += (h / 6.0) * (d1.e[r] + 2.0 * d2.e[r] + 2.0 * d3.e[r] + d4.e[r]);
        y.p += (h / 6.0) * (d1.p + 2.0 * d2.p + 2.0 * d3.p + d4.p);

        drift = std::max(drift, orthonormality_defect(y.e));
        if (opts.reorthonormalize) reorthonormalize(y.e);

        res.curve.points[i + 1] = y.p;
        res.apparatus.frames[i + 1] = y.e;
    }
    res.drift = drift;
    res.curve.grid.n = n;
    return res;
}

}  // namespace helix4
