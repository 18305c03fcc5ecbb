#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "helix4/grid.hpp"

namespace helix4 {

/// Scalar function sampled on a uniform grid. Carrier for curvatures,
/// axis coefficients, invariants and every intermediate series.
struct SampledFunction {
    Grid grid;
    std::vector<double> values;

    SampledFunction() = default;
    SampledFunction(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {}

    /// Sample a callable on the grid.
    static SampledFunction sample(Grid g, const std::function<double(double)>& fn) {
        std::vector<double> v(g.n);
        for (std::size_t i = 0; i < g.n; ++i) v[i] = fn(g.s(i));
        return {g, std::move(v)};
    }

    static SampledFunction constant(Grid g, double c) {
        return {g, std::vector<double>(g.n, c)};
    }

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }

    /// Copy with `trim` samples dropped at each end.
    SampledFunction trimmed(std::size_t trim) const;
};

/// Pointwise combination of two functions on the same grid.
SampledFunction zip(const SampledFunction& a, const SampledFunction& b,
                    const std::function<double(double, double)>& op);

/// Pointwise map.
SampledFunction map(const SampledFunction& a, const std::function<double(double)>& op);

struct ConstancyStats {
    double mean = 0.0;
    double stddev = 0.0;
    double max_dev = 0.0;  // max |value - mean|
};

double mean(const std::vector<double>& v);
double stddev(const std::vector<double>& v);
double max_abs(const std::vector<double>& v);
ConstancyStats constancy(const std::vector<double>& v);

inline double mean(const SampledFunction& f) { return mean(f.values); }
inline double stddev(const SampledFunction& f) { return stddev(f.values); }
inline double max_abs(const SampledFunction& f) { return max_abs(f.values); }
inline ConstancyStats constancy(const SampledFunction& f) { return constancy(f.values); }

}  // namespace helix4
