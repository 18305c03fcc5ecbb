#pragma once

#include <cstddef>
#include <vector>

#include "helix4/curve.hpp"
#include "helix4/sampled.hpp"
#include "helix4/vec4.hpp"

namespace helix4 {

/// Per-sample orthonormal frame {T, N, B1, B2} and curvatures {k1, k2, k3}
/// on a shared grid. k1, k2 > 0; k3 is signed (right-handed frame).
struct FrenetApparatus {
    Grid grid;
    std::vector<Frame4> frames;
    SampledFunction kappa1, kappa2, kappa3;
    double kappa_min = 0.0;  // threshold the curvatures were checked against
    bool estimated = false;  // true when built from sampled points (finite
                             // differences); false when carried over from a
                             // curvature profile by reconstruction

    std::size_t size() const { return frames.size(); }
};

/// The two stride targets below widen the effective differentiation step
/// (stride = round(target / h)). On double-precision point data the raw
/// h-step stencils for the third and fourth derivative amplify coordinate
/// roundoff by 1/h^3 and 1/h^4; a few-sample stride pushes that noise floor
/// well below the curvature tolerances while the added truncation stays
/// negligible for smooth, densely sampled curves.
struct FrenetOptions {
    /// |kappa_i| below this raises CurvatureVanishes; 0 = auto (1e-8 / h).
    double kappa_min = 0.0;
    /// Tolerance of the unit-speed gate.
    double speed_tol = 1e-5;
    /// Target effective step for the curve derivatives a'..a''''.
    double curve_diff_step = 0.003;
    /// Target effective step for differentiating the frame fields when
    /// extracting curvatures (kappa_i = <E_i', E_{i+1}>).
    double frame_diff_step = 0.05;
    /// Explicit stride overrides; 0 = derive from the step targets.
    std::size_t curve_diff_stride = 0;
    std::size_t frame_diff_stride = 0;
};

/// Build the Frenet apparatus of a unit-speed curve: frames from
/// gram_schmidt4(a', a'', a''', a'''') with B2 sign fixed by right-handedness
/// (det = +1), curvatures as frame-derivative projections
/// kappa_i = <E_i', E_{i+1}> from central stencils on the frame samples.
/// Boundary samples that lack stencil support are trimmed.
/// Throws NotUnitSpeed, CurvatureVanishes, TooFewSamples.
FrenetApparatus frenet_apparatus(const CurveSample& curve, const FrenetOptions& opts = {});

struct FrenetStrides {
    std::size_t curve = 1;  // stride of the a'..a'''' stencils
    std::size_t frame = 1;  // stride of the frame-field derivative
};

/// Strides actually used at grid step h with n samples.
FrenetStrides frenet_strides(const FrenetOptions& opts, double h, std::size_t n);

}  // namespace helix4
