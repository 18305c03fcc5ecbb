#pragma once

#include <cstddef>

#include "helix4/frenet.hpp"
#include "helix4/sampled.hpp"
#include "helix4/vec4.hpp"

namespace helix4 {

enum class Verdict { Slant, NotSlant, Indeterminate };

const char* to_string(Verdict v);

struct SlantOptions {
    double tol_const = 1e-4;  // constancy tolerance, relative with +1 floor
    double tol_axis = 1e-5;   // max_s |U(s) - Ubar|
    double tol_res = 1e-4;    // residual tolerance of the f / integral checks
    /// Stride of the nested derivatives; 0 = auto: 1 for exact profile
    /// kappas, round(0.04 / h) when the apparatus was finite-difference
    /// estimated (keeps roundoff noise out of the differentiated series).
    std::size_t deriv_stride = 0;
    /// mean(C) below this is reported Indeterminate (theta -> 0 excluded).
    double c_floor = 1e-8;
};

std::size_t slant_deriv_stride(const SlantOptions& opts, const FrenetApparatus& app);

/// The slant-helix invariant
///   C(s) = (I)^2 + [ (1/k3) ((k1/k2) I)' + k2/k3 ]^2 + ((k1/k2) I)^2,
/// I = integral of kappa1 anchored at the left endpoint with constant c0.
/// Constant exactly when the curve is a slant helix, and then equal to
/// tan^2(theta). The grid shrinks by 2*stride for the nested derivative.
SampledFunction slant_invariant(const FrenetApparatus& app, double c0,
                                std::size_t deriv_stride = 1);

struct SlantDiagnostics {
    SampledFunction invariant;  // C(s) at the fitted c0
    double c0 = 0.0;            // fitted integration constant of I
    double theta = 0.0;         // arctan(sqrt(mean C)), radians
    Vec4 axis;                  // normalized mean of U(s), ambient coordinates
    ConstancyStats constancy;   // stats of C(s)
    double axis_spread = 0.0;   // max_s |U(s) - Ubar|
    Verdict verdict = Verdict::Indeterminate;
};

/// Fit c0 by variance minimization of C over [-L*max k1, +L*max k1],
/// estimate theta, assemble the candidate axis
///   U(s) = cos(theta) [ I T + N + (k1/k2) I B1 + f B2 ]
/// and decide: Slant iff stddev(C) <= tol_const*(1+mean C) and
/// axis_spread <= tol_axis; NotSlant iff both criteria fail; Indeterminate
/// when they disagree or theta falls outside (0, pi/2).
SlantDiagnostics detect_slant(const FrenetApparatus& app, const SlantOptions& opts = {});

struct FFunctionResult {
    SampledFunction f;         // k3 f = ((k1/k2) I)' + k2
    SampledFunction residual;  // f' + (k3 k1/k2) I
    bool pass = false;
};

/// Differential characterization: a C^2 function f with
///   k3 f = ((k1/k2) I)' + k2   and   f' = -(k3 k1/k2) I
/// exists iff the curve is a slant helix. f is built from the first
/// relation; pass iff ||residual||_inf <= tol_res * max(1, ||f'||_inf).
FFunctionResult f_function_check(const FrenetApparatus& app, double c0,
                                 const SlantOptions& opts = {});

struct IntegralCheckResult {
    SampledFunction m, n;      // constant (= A, B) exactly for slant helices
    double A = 0.0, B = 0.0;   // fitted as the means of m, n
    SampledFunction residual;  // (k1/k2) I - [(A - P) sin phi - (B + Q) cos phi]
    bool pass = false;
};

/// Integral characterization: with phi = int k3, P = int k2 sin phi,
/// Q = int k2 cos phi and f from the differential check,
///   m = f cos phi + (k1/k2) I sin phi + P,
///   n = f sin phi - (k1/k2) I cos phi - Q
/// are constants A, B iff the curve is a slant helix. pass iff stddev(m),
/// stddev(n) and ||residual||_inf are all <= tol_res * (1 + |A| + |B|).
IntegralCheckResult integral_characterization_check(const FrenetApparatus& app, double c0,
                                                    const SlantOptions& opts = {});

/// Components of the axis U in the moving frame plus the auxiliary series.
struct AxisCoefficients {
    SampledFunction a1, a2, a3, a4;  // a2 is identically cos(theta)
    SampledFunction phi;             // int k3
    SampledFunction f;               // a4 / cos(theta)
    SampledFunction m, n;
    double A = 0.0, B = 0.0;  // means of m, n
    double c0 = 0.0;
};

/// a1 = a2 I, a3 = a2 (k1/k2) I, a4 = a2 [ (1/k3)((k1/k2) I)' + k2/k3 ],
/// a2 = cos(theta). Throws ParamOutOfRange unless theta is in (0, pi/2).
AxisCoefficients coefficients(const FrenetApparatus& app, double theta, double c0,
                              const SlantOptions& opts = {});

/// Tangent invariant k1^2/k2^2 + [ (1/k3)(k1/k2)' ]^2; constant iff the
/// curve is a cylindrical helix.
SampledFunction cylindrical_helix_invariant(const FrenetApparatus& app,
                                            std::size_t deriv_stride = 1);

/// Second-binormal invariant k3^2/k2^2 + [ (1/k1)(k3/k2)' ]^2; constant iff
/// the curve is a B2-slant curve.
SampledFunction b2_slant_invariant(const FrenetApparatus& app,
                                   std::size_t deriv_stride = 1);

}  // namespace helix4
