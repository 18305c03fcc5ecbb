#include "helix4/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helix4/errors.hpp"
#include "helix4/gram_schmidt.hpp"
#include "helix4/stencil.hpp"

namespace helix4 {

FrenetStrides frenet_strides(const FrenetOptions& opts, double h, std::size_t n) {
    FrenetStrides st;
    const auto target = [h](double step) {
        return static_cast<std::size_t>(std::max(1.0, std::round(step / h)));
    };
    st.curve = opts.curve_diff_stride ? opts.curve_diff_stride : target(opts.curve_diff_step);
    st.frame = opts.frame_diff_stride ? opts.frame_diff_stride : target(opts.frame_diff_step);

    // Keep at least a handful of interior samples after trimming.
    if (n >= 25) {
        st.curve = std::min(st.curve, (n - 13) / 6);
        const std::size_t n_f = n - 6 * st.curve;
        st.frame = std::min(st.frame, (n_f - 5) / 4);
    }
    st.curve = std::max<std::size_t>(1, st.curve);
    st.frame = std::max<std::size_t>(1, st.frame);
    return st;
}

namespace {

const std::vector<double>& frame_stage_weights(int order) {
    // O(h^4) throughout: 5-point for orders 1-2, 7-point for 3-4.
    static const std::vector<double> w1 = central_weights(1, 2);
    static const std::vector<double> w2 = central_weights(2, 2);
    static const std::vector<double> w3 = central_weights(3, 3);
    static const std::vector<double> w4 = central_weights(4, 3);
    switch (order) {
        case 1: return w1;
        case 2: return w2;
        case 3: return w3;
        default: return w4;
    }
}

}  // namespace

FrenetApparatus frenet_apparatus(const CurveSample& curve, const FrenetOptions& opts) {
    const std::size_t n = curve.size();
    const double h = curve.grid.h;
    const FrenetStrides st = frenet_strides(opts, h, n);
    const std::size_t c = st.curve;
    const std::size_t m = st.frame;

    const std::size_t frame_margin = 3 * c;
    if (n < 6 * c + 4 * m + 5)
        throw TooFewSamples("frenet_apparatus: grid too short for the stencil strides");

    const double kappa_min = opts.kappa_min > 0.0 ? opts.kappa_min : 1e-8 / h;
    const std::vector<Vec4>& p = curve.points;

    const auto deriv = [&](std::size_t i, int order) {
        const auto& w = frame_stage_weights(order);
        const int half = static_cast<int>(w.size() / 2);
        Vec4 acc;
        for (int k = -half; k <= half; ++k) {
            const std::size_t idx =
                i + static_cast<std::size_t>(static_cast<std::ptrdiff_t>(k) *
                                             static_cast<std::ptrdiff_t>(c));
            acc += w[k + half] * p[idx];
        }
        const double hh = h * static_cast<double>(c);
        return acc / std::pow(hh, order);
    };

    // Stage 1: frames on [frame_margin, n-1-frame_margin].
    const std::size_t nf = n - 2 * frame_margin;
    std::vector<Frame4> frames(nf);
    for (std::size_t i = frame_margin; i + frame_margin < n; ++i) {
        const Vec4 d1 = deriv(i, 1);
        const double speed = norm(d1);
        if (std::fabs(speed - 1.0) > opts.speed_tol)
            throw NotUnitSpeed("frenet_apparatus: |alpha'| = " + std::to_string(speed) +
                               " at sample " + std::to_string(i));
        Frame4 v{d1, deriv(i, 2), deriv(i, 3), deriv(i, 4)};
        GramSchmidtResult gs;
        try {
            gs = gram_schmidt4(v);
        } catch (const RankDeficient& e) {
            throw CurvatureVanishes(e.step(), i,
                                    "frenet_apparatus: kappa_" + std::to_string(e.step()) +
                                        " vanishes at sample " + std::to_string(i));
        }
        if (det4(gs.q) < 0.0) gs.q[3] = -gs.q[3];  // right-handed B2
        frames[i - frame_margin] = gs.q;
    }

    // Stage 2: curvatures from strided frame-field derivatives.
    const std::size_t trim = frame_margin + 2 * m;
    const std::size_t nk = n - 2 * trim;
    Grid kgrid = curve.grid.trimmed(trim);

    FrenetApparatus app;
    app.grid = kgrid;
    app.kappa_min = kappa_min;
    app.estimated = true;
    app.frames.resize(nk);
    app.kappa1 = SampledFunction::constant(kgrid, 0.0);
    app.kappa2 = SampledFunction::constant(kgrid, 0.0);
    app.kappa3 = SampledFunction::constant(kgrid, 0.0);

    const double denom = 12.0 * h * static_cast<double>(m);
    const auto frame_deriv = [&](std::size_t fi, int row) {
        return (frames[fi - 2 * m][row] - 8.0 * frames[fi - m][row] + 8.0 * frames[fi + m][row] -
                frames[fi + 2 * m][row]) /
               denom;
    };

    for (std::size_t j = 0; j < nk; ++j) {
        const std::size_t fi = j + 2 * m;  // index into frames
        const Frame4& f = frames[fi];
        const double k1 = dot(frame_deriv(fi, 0), f[1]);
        const double k2 = dot(frame_deriv(fi, 1), f[2]);
        const double k3 = dot(frame_deriv(fi, 2), f[3]);
        const std::size_t sample = j + trim;
        if (k1 < kappa_min)
            throw CurvatureVanishes(1, sample, "frenet_apparatus: kappa_1 = " +
                                                   std::to_string(k1) + " at sample " +
                                                   std::to_string(sample));
        if (k2 < kappa_min)
            throw CurvatureVanishes(2, sample, "frenet_apparatus: kappa_2 = " +
                                                   std::to_string(k2) + " at sample " +
                                                   std::to_string(sample));
        if (std::fabs(k3) < kappa_min)
            throw CurvatureVanishes(3, sample, "frenet_apparatus: kappa_3 = " +
                                                   std::to_string(k3) + " at sample " +
                                                   std::to_string(sample));
        app.frames[j] = f;
        app.kappa1[j] = k1;
        app.kappa2[j] = k2;
        app.kappa3[j] = k3;
    }
    return app;
}

}  // namespace helix4
