#pragma once

#include <cstddef>
#include <vector>

#include "helix4/grid.hpp"
#include "helix4/vec4.hpp"

namespace helix4 {

constexpr std::size_t kMinCurveSamples = 9;

/// Unit-speed curve on a uniform arclength grid.
struct CurveSample {
    Grid grid;
    std::vector<Vec4> points;

    CurveSample() = default;
    /// Throws TooFewSamples if fewer than kMinCurveSamples points.
    CurveSample(Grid g, std::vector<Vec4> pts);

    std::size_t size() const { return points.size(); }
};

/// Resample an ordered point list to a uniform arclength grid (s0 = 0).
/// Chord lengths approximate arclength; the monotone (Fritsch-Carlson)
/// cubic of the chord-length parameterization is inverted to place the
/// new samples, and coordinates are evaluated with 4-point cubic
/// interpolation. Sample count is preserved.
/// Throws DegenerateInput if consecutive points coincide within 1e-12,
/// TooFewSamples if fewer than kMinCurveSamples points.
CurveSample arclength_reparam(const std::vector<Vec4>& raw);

struct DerivativeEstimate {
    Vec4 value;
    bool one_sided = false;  // boundary fallback, lower accuracy
};

/// Finite-difference derivative of the curve at sample i, order 1..4.
/// Central stencils (O(h^4) for orders 1-2, O(h^2) for orders 3-4) when i
/// is at least 4 samples from each boundary; otherwise a one-sided 6-point
/// stencil, flagged, or StencilUnavailable if `allow_one_sided` is false.
/// Throws IndexOutOfRange for bad i or order.
DerivativeEstimate derivatives(const CurveSample& curve, std::size_t i, int order,
                               bool allow_one_sided = true);

/// Finite-difference speed |alpha'(s_i)| with the O(h^4) interior stencil.
/// Valid for 2 <= i <= n-3.
double fd_speed(const CurveSample& curve, std::size_t i);

}  // namespace helix4
