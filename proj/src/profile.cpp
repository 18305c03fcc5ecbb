#include "helix4/profile.hpp"

#include <cmath>
#include <string>

#include "helix4/errors.hpp"

namespace helix4 {

WCurveKappas wcurve_kappas(double a, double p, double b, double q) {
    const double k1sq = a * a * p * p * p * p + b * b * q * q * q * q;
    const double k1 = std::sqrt(k1sq);
    const double r3sq = a * a * p * p * (k1sq - p * p) * (k1sq - p * p) +
                        b * b * q * q * (k1sq - q * q) * (k1sq - q * q);
    const double k2 = std::sqrt(r3sq) / k1;
    const double k3 = a * b * p * p * q * q * (q * q - p * p) / (k1sq * k2);
    return {k1, k2, k3};
}

CurvatureProfile builtin_profile(const std::string& name, const std::vector<double>& params,
                                 Grid grid) {
    CurvatureProfile prof;
    prof.family = name;
    prof.family_params = params;

    if (name == "constant") {
        if (params.size() != 3) throw ParamOutOfRange("constant: expected params k1,k2,k3");
        prof.kappa1 = SampledFunction::constant(grid, params[0]);
        prof.kappa2 = SampledFunction::constant(grid, params[1]);
        prof.kappa3 = SampledFunction::constant(grid, params[2]);
        return prof;
    }
    if (name == "wcurve") {
        if (params.size() != 4) throw ParamOutOfRange("wcurve: expected params a,p,b,q");
        double a = params[0], p = params[1], b = params[2], q = params[3];
        if (a <= 0.0 || b <= 0.0 || p <= 0.0 || q <= 0.0)
            throw ParamOutOfRange("wcurve: parameters must be positive");
        if (p == q) throw ParamOutOfRange("wcurve: p == q degenerates to a circle (kappa_2 = 0)");
        // Rescale the radii so the curve is unit speed.
        const double scale = 1.0 / std::sqrt(a * a * p * p + b * b * q * q);
        a *= scale;
        b *= scale;
        const WCurveKappas k = wcurve_kappas(a, p, b, q);
        prof.kappa1 = SampledFunction::constant(grid, k.k1);
        prof.kappa2 = SampledFunction::constant(grid, k.k2);
        prof.kappa3 = SampledFunction::constant(grid, k.k3);
        prof.family_params = {a, p, b, q};
        return prof;
    }
    throw UnknownFamily("builtin_profile: unknown family '" + name + "'");
}

CurvatureProfile perturb_kappa1(const CurvatureProfile& base, double amplitude,
                                double frequency) {
    CurvatureProfile out = base;
    out.family = base.family.empty() ? "perturbed" : base.family + "-perturbed";
    const Grid& g = base.kappa1.grid;
    for (std::size_t i = 0; i < out.kappa1.size(); ++i)
        out.kappa1[i] = base.kappa1[i] * (1.0 + amplitude * std::sin(frequency * g.s(i)));
    return out;
}

void validate_profile(const CurvatureProfile& p, double kappa_min) {
    const Grid& g = p.kappa1.grid;
    if (!p.kappa2.grid.same_as(g) || !p.kappa3.grid.same_as(g))
        throw FormatError("validate_profile: curvature grids differ");
    if (g.n < 2) throw TooFewSamples("validate_profile: need at least 2 samples");
    const double kmin = kappa_min > 0.0 ? kappa_min : 1e-8 / g.h;
    for (std::size_t i = 0; i < g.n; ++i) {
        if (p.kappa1[i] < kmin)
            throw CurvatureVanishes(1, i, "profile: kappa_1 = " + std::to_string(p.kappa1[i]) +
                                              " at sample " + std::to_string(i));
        if (p.kappa2[i] < kmin)
            throw CurvatureVanishes(2, i, "profile: kappa_2 = " + std::to_string(p.kappa2[i]) +
                                              " at sample " + std::to_string(i));
        if (std::fabs(p.kappa3[i]) < kmin)
            throw CurvatureVanishes(3, i, "profile: kappa_3 = " + std::to_string(p.kappa3[i]) +
                                              " at sample " + std::to_string(i));
    }
}

}  // namespace helix4
