#pragma once

#include <string>
#include <vector>

#include "helix4/sampled.hpp"

namespace helix4 {

/// Three curvature functions on a shared grid. k1, k2 > 0 and |k3| > 0
/// everywhere (checked by validate_profile / reconstruct_curve).
struct CurvatureProfile {
    SampledFunction kappa1, kappa2, kappa3;
    /// Family tag and parameters when the profile came from a closed-form
    /// builtin ("constant", "wcurve", ...); empty for synthesized/file data.
    std::string family;
    std::vector<double> family_params;

    const Grid& grid() const { return kappa1.grid; }
};

/// Built-in profile families (test fixtures, CLI --builtin):
///   "constant"  params [k1, k2, k3]
///   "wcurve"    params [a, p, b, q]; a, b are rescaled so a^2 p^2 + b^2 q^2 = 1
///               and the constant curvatures of the W-curve are emitted
///               (k3 carries the right-handed sign, negative for q > p).
/// Throws UnknownFamily, ParamOutOfRange.
CurvatureProfile builtin_profile(const std::string& name, const std::vector<double>& params,
                                 Grid grid);

/// Curvatures of the W-curve (a cos ps, a sin ps, b cos qs, b sin qs),
/// assuming a^2 p^2 + b^2 q^2 = 1.
struct WCurveKappas {
    double k1, k2, k3;
};
WCurveKappas wcurve_kappas(double a, double p, double b, double q);

/// kappa1 scaled pointwise by (1 + amplitude * sin(frequency * s)).
CurvatureProfile perturb_kappa1(const CurvatureProfile& base, double amplitude,
                                double frequency = 1.0);

/// Check the profile invariants against `kappa_min` (0 = auto 1e-8/h).
/// Throws CurvatureVanishes naming the first offending curvature/sample.
void validate_profile(const CurvatureProfile& p, double kappa_min = 0.0);

}  // namespace helix4
