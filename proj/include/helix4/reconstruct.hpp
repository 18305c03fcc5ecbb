#pragma once

#include "helix4/curve.hpp"
#include "helix4/frenet.hpp"
#include "helix4/profile.hpp"
#include "helix4/vec4.hpp"

namespace helix4 {

struct ReconstructionResult {
    CurveSample curve;
    /// Frames from the integration, curvatures carried over from the profile.
    FrenetApparatus apparatus;
    /// Max orthonormality defect observed before the per-step projection.
    double drift = 0.0;
};

struct ReconstructOptions {
    double kappa_min = 0.0;       // 0 = auto (1e-8 / h)
    double frame_tol = 1e-12;     // orthonormality gate on frame0
    bool reorthonormalize = true; // per-step Gram-Schmidt projection
};

/// Integrate the Frenet system E' = K(s) E together with p' = T by classical
/// RK4 at the profile's grid step. Mid-step curvatures come from the monotone
/// cubic of the sampled profile. The frame is re-orthonormalized after every
/// step; the result grid equals the profile grid.
/// Throws BadInitialFrame, ProfileTooCoarse (h * max|kappa| > 0.1),
/// CurvatureVanishes.
ReconstructionResult reconstruct_curve(const CurvatureProfile& profile,
                                       const Frame4& frame0 = identity_frame(),
                                       const Vec4& p0 = Vec4{},
                                       const ReconstructOptions& opts = {});

}  // namespace helix4
