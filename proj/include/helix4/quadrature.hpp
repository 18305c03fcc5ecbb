#pragma once

#include <functional>
#include <utility>

#include "helix4/sampled.hpp"

namespace helix4 {

/// Cumulative antiderivative anchored at the left endpoint: output[0] = c0.
/// Composite Simpson on even prefixes; an odd index adds a closed 4-point
/// Newton-Cotes rule over the final interval. Exact for integrands of
/// degree <= 3; requires n >= 5.
SampledFunction antiderivative(const SampledFunction& f, double c0);

/// O(h^4) first derivative: central 5-point stencil in the interior,
/// one-sided 5-point stencils in the 2-sample boundary band. n >= 5.
SampledFunction derivative(const SampledFunction& f);

/// O((m*h)^4) central 5-point derivative with stride m >= 1. The result
/// grid is trimmed by 2m samples at each end; no one-sided fallback.
/// Widening the effective step trades truncation for a lower roundoff
/// floor when `f` carries per-sample noise.
SampledFunction derivative_strided(const SampledFunction& f, std::size_t m);

struct MinimizeResult {
    double c0 = 0.0;
    double value = 0.0;
};

/// Minimize `objective` over [c_lo, c_hi]: coarse 16-cell scan (unimodality
/// is not assumed), then golden-section refinement of the best cell down to
/// bracket width 1e-10 * (c_hi - c_lo).
MinimizeResult fit_integration_constant(const std::function<double(double)>& objective,
                                        double c_lo, double c_hi);

}  // namespace helix4
