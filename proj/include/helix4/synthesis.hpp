#pragma once

#include "helix4/profile.hpp"
#include "helix4/sampled.hpp"

namespace helix4 {

struct SynthesisOptions {
    double d_floor = 1e-4;   // lower bound kept under the square root
    double kappa_min = 0.0;  // 0 = auto (1e-8 / h)
};

/// A synthesized slant-helix profile together with the constants that
/// determine it. theta is not a free input: C = A^2 + B^2 + D fixes it.
struct SynthesisRecord {
    CurvatureProfile profile;
    double A = 0.0, B = 0.0, D = 0.0;
    double c_bar = 0.0;   // I(s0) = sqrt(D), the integration constant of I
    double C = 0.0;       // the constant value of the slant invariant
    double theta = 0.0;   // arctan(sqrt(C))
};

/// Manufacture kappa1 so that (kappa1/kappa2) * I equals
///   R(s) = (A - int k2 sin phi) sin phi - (B + int k2 cos phi) cos phi,
/// phi = int k3 (all integrals anchored at the left endpoint): then
/// (I^2)' = 2 k2 R, so I = sqrt(D + 2 int k2 R) and kappa1 = k2 R / I.
/// Throws SquareRootDomain when D + 2 int k2 R dips below d_floor (the
/// exception carries a sufficient D), CurvatureVanishes when the resulting
/// kappa1 crosses zero or falls below kappa_min.
SynthesisRecord synthesize_slant_profile(const SampledFunction& kappa2,
                                         const SampledFunction& kappa3, double A, double B,
                                         double D, const SynthesisOptions& opts = {});

}  // namespace helix4
