#include "helix4/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "helix4/errors.hpp"
#include "helix4/stencil.hpp"

namespace helix4 {

CurveSample::CurveSample(Grid g, std::vector<Vec4> pts) : grid(g), points(std::move(pts)) {
    if (points.size() < kMinCurveSamples)
        throw TooFewSamples("CurveSample: need at least " + std::to_string(kMinCurveSamples) +
                            " samples, got " + std::to_string(points.size()));
    grid.n = points.size();
}

namespace {

// Fritsch-Carlson slopes for a monotone cubic interpolant of (x_i, y_i)
// with strictly increasing x and y.
std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double h0 = x[i] - x[i - 1];
            const double h1 = x[i + 1] - x[i];
            const double w1 = 2.0 * h1 + h0;
            const double w2 = h1 + 2.0 * h0;
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    const auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0))
            s = 3.0 * d0;
        return s;
    };
    m[0] = endpoint(x[1] - x[0], x[2] - x[1], d[0], d[1]);
    m[n - 1] = endpoint(x[n - 1] - x[n - 2], x[n - 2] - x[n - 3], d[n - 2], d[n - 3]);
    return m;
}

double hermite_eval(double x0, double x1, double y0, double y1, double m0, double m1, double x) {
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return y0 * (2 * t3 - 3 * t2 + 1) + h * m0 * (t3 - 2 * t2 + t) + y1 * (-2 * t3 + 3 * t2) +
           h * m1 * (t3 - t2);
}

// Cubic Lagrange interpolation of the point list at fractional index t.
Vec4 interp_points(const std::vector<Vec4>& p, double t) {
    const std::size_t n = p.size();
    const double fl = std::floor(t);
    std::ptrdiff_t b = static_cast<std::ptrdiff_t>(fl);
    b = std::clamp<std::ptrdiff_t>(b, 1, static_cast<std::ptrdiff_t>(n) - 3);
    const double u = t - static_cast<double>(b);
    const double wm1 = -u * (u - 1.0) * (u - 2.0) / 6.0;
    const double w0 = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
    const double w1 = -(u + 1.0) * u * (u - 2.0) / 2.0;
    const double w2 = (u + 1.0) * u * (u - 1.0) / 6.0;
    return wm1 * p[b - 1] + w0 * p[b] + w1 * p[b + 1] + w2 * p[b + 2];
}

}  // namespace

CurveSample arclength_reparam(const std::vector<Vec4>& raw) {
    const std::size_t n = raw.size();
    if (n < kMinCurveSamples) throw TooFewSamples("arclength_reparam: need at least 9 points");

    // Cumulative chord length.
    std::vector<double> sigma(n);
    long double acc = 0.0L;
    sigma[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = norm(raw[i] - raw[i - 1]);
        if (d < 1e-12)
            throw DegenerateInput("arclength_reparam: consecutive points coincide at index " +
                                  std::to_string(i));
        acc += d;
        sigma[i] = static_cast<double>(acc);
    }
    const double total = sigma[n - 1];

    // Monotone cubic of index-vs-chord-length, inverted by evaluation.
    std::vector<double> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<double>(i);
    const std::vector<double> slopes = monotone_slopes(sigma, idx);

    Grid grid;
    grid.s0 = 0.0;
    grid.h = total / static_cast<double>(n - 1);
    grid.n = n;

    std::vector<Vec4> out(n);
    out[0] = raw[0];
    out[n - 1] = raw[n - 1];
    std::size_t cell = 0;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double target = total * static_cast<double>(j) / static_cast<double>(n - 1);
        while (cell + 2 < n && sigma[cell + 1] < target) ++cell;
        const double t = hermite_eval(sigma[cell], sigma[cell + 1], idx[cell], idx[cell + 1],
                                      slopes[cell], slopes[cell + 1], target);
        out[j] = interp_points(raw, t);
    }
    return CurveSample(grid, std::move(out));
}

namespace {

const std::vector<double>& central_curve_weights(int order) {
    // O(h^4) for orders 1-2, O(h^2) for orders 3-4 (5-point stencils).
    static const std::vector<double> w1 = central_weights(1, 2);
    static const std::vector<double> w2 = central_weights(2, 2);
    static const std::vector<double> w3 = central_weights(3, 2);
    static const std::vector<double> w4 = central_weights(4, 2);
    switch (order) {
        case 1: return w1;
        case 2: return w2;
        case 3: return w3;
        default: return w4;
    }
}

const std::vector<double>& one_sided_weights(int order, int lead) {
    // 6-point stencil starting `lead` nodes left of the evaluation point.
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    const auto key = std::make_pair(order, lead);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<int> offsets(6);
        for (int k = 0; k < 6; ++k) offsets[k] = k - lead;
        it = cache.emplace(key, fd_weights(order, offsets)).first;
    }
    return it->second;
}

}  // namespace

DerivativeEstimate derivatives(const CurveSample& curve, std::size_t i, int order,
                               bool allow_one_sided) {
    const std::size_t n = curve.size();
    if (order < 1 || order > 4) throw IndexOutOfRange("derivatives: order must be 1..4");
    if (i >= n) throw IndexOutOfRange("derivatives: sample index out of range");

    const double h = curve.grid.h;
    const bool central_ok = i >= 4 && i + 4 < n;

    DerivativeEstimate est;
    if (central_ok) {
        const auto& w = central_curve_weights(order);
        Vec4 acc;
        for (int k = -2; k <= 2; ++k) acc += w[k + 2] * curve.points[i + k];
        est.value = acc / std::pow(h, order);
        est.one_sided = false;
        return est;
    }
    if (!allow_one_sided)
        throw StencilUnavailable("derivatives: no central stencil at index " + std::to_string(i));

    const int lead = static_cast<int>(std::min<std::size_t>(i, n - 6));
    const auto& w = one_sided_weights(order, static_cast<int>(i) - lead);
    Vec4 acc;
    for (int k = 0; k < 6; ++k) acc += w[k] * curve.points[lead + k];
    est.value = acc / std::pow(h, order);
    est.one_sided = true;
    return est;
}

double fd_speed(const CurveSample& curve, std::size_t i) {
    const auto& p = curve.points;
    const Vec4 d = (p[i - 2] - 8.0 * p[i - 1] + 8.0 * p[i + 1] - p[i + 2]) / (12.0 * curve.grid.h);
    return norm(d);
}

}  // namespace helix4
