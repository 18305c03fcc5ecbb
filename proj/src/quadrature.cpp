#include "helix4/quadrature.hpp"

#include <cmath>

#include "helix4/errors.hpp"
#include "helix4/stencil.hpp"

namespace helix4 {

SampledFunction antiderivative(const SampledFunction& f, double c0) {
    const std::size_t n = f.size();
    if (n < 5) throw TooFewSamples("antiderivative: need at least 5 samples");
    const double h = f.grid.h;

    // Base integral anchored at 0; c0 is added afterwards so that
    // antiderivative(f, c) == antiderivative(f, 0) + c holds bitwise.
    std::vector<double> base(n, 0.0);
    long double even_acc = 0.0L;  // running composite-Simpson prefix
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) {
            even_acc += static_cast<long double>(h) / 3.0L *
                        (static_cast<long double>(f[i - 2]) + 4.0L * f[i - 1] + f[i]);
            base[i] = static_cast<double>(even_acc);
        } else {
            // Closed 4-point Newton-Cotes over the final interval keeps the
            // cumulative rule exact for cubic integrands at odd indices too.
            long double tail;
            if (i == 1) {
                tail = static_cast<long double>(h) / 24.0L *
                       (9.0L * f[0] + 19.0L * f[1] - 5.0L * f[2] + f[3]);
            } else {
                tail = static_cast<long double>(h) / 24.0L *
                       (static_cast<long double>(f[i - 3]) - 5.0L * f[i - 2] +
                        19.0L * f[i - 1] + 9.0L * f[i]);
            }
            base[i] = static_cast<double>(even_acc + tail);
        }
    }

    SampledFunction out;
    out.grid = f.grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = base[i] + c0;
    return out;
}

namespace {

const std::vector<double>& boundary_weights_first(std::size_t row) {
    static const std::vector<double> w0 = fd_weights(1, {0, 1, 2, 3, 4});
    static const std::vector<double> w1 = fd_weights(1, {-1, 0, 1, 2, 3});
    static const std::vector<double> w2 = fd_weights(1, {-3, -2, -1, 0, 1});
    static const std::vector<double> w3 = fd_weights(1, {-4, -3, -2, -1, 0});
    switch (row) {
        case 0: return w0;
        case 1: return w1;
        case 2: return w2;
        default: return w3;
    }
}

}  // namespace

SampledFunction derivative(const SampledFunction& f) {
    const std::size_t n = f.size();
    if (n < 5) throw TooFewSamples("derivative: need at least 5 samples");
    const double h = f.grid.h;

    SampledFunction out;
    out.grid = f.grid;
    out.values.resize(n);
    for (std::size_t i = 2; i + 2 < n; ++i)
        out.values[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);

    const auto apply = [&](std::size_t i, const std::vector<double>& w, std::size_t first) {
        long double acc = 0.0L;
        for (std::size_t k = 0; k < w.size(); ++k) acc += static_cast<long double>(w[k]) * f[first + k];
        out.values[i] = static_cast<double>(acc / h);
    };
    apply(0, boundary_weights_first(0), 0);
    apply(1, boundary_weights_first(1), 0);
    apply(n - 2, boundary_weights_first(2), n - 5);
    apply(n - 1, boundary_weights_first(3), n - 5);
    return out;
}

SampledFunction derivative_strided(const SampledFunction& f, std::size_t m) {
    if (m == 0) m = 1;
    if (m == 1) {
        // Match the plain interior stencil but drop the one-sided band so
        // callers always get a uniformly accurate, trimmed series.
        SampledFunction full = derivative(f);
        return full.trimmed(2);
    }
    const std::size_t n = f.size();
    if (n < 4 * m + 1) throw TooFewSamples("derivative_strided: need at least 4m+1 samples");
    const double hh = 12.0 * f.grid.h * static_cast<double>(m);

    SampledFunction out;
    out.grid = f.grid.trimmed(2 * m);
    out.values.resize(n - 4 * m);
    for (std::size_t i = 2 * m; i + 2 * m < n; ++i)
        out.values[i - 2 * m] =
            (f[i - 2 * m] - 8.0 * f[i - m] + 8.0 * f[i + m] - f[i + 2 * m]) / hh;
    return out;
}

MinimizeResult fit_integration_constant(const std::function<double(double)>& objective,
                                        double c_lo, double c_hi) {
    if (!(c_lo < c_hi)) throw InvalidBracket("fit_integration_constant: c_lo >= c_hi");
    const double width = c_hi - c_lo;

    // Coarse 16-cell scan; the best cell seeds the golden section.
    constexpr int kCells = 16;
    double best_x = c_lo;
    double best_v = objective(c_lo);
    for (int k = 1; k <= kCells; ++k) {
        const double x = c_lo + width * static_cast<double>(k) / kCells;
        const double v = objective(x);
        if (v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = std::max(c_lo, best_x - width / kCells);
    double b = std::min(c_hi, best_x + width / kCells);

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;
    const double tol = 1e-10 * width;

    double x1 = a + invphi2 * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = objective(x2);
        }
    }
    MinimizeResult res;
    res.c0 = 0.5 * (a + b);
    res.value = objective(res.c0);
    return res;
}

}  // namespace helix4
