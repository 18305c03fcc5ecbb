#include "helix4/gram_schmidt.hpp"

#include <cmath>
#include <string>

#include "helix4/errors.hpp"

namespace helix4 {

GramSchmidtResult gram_schmidt4(const Frame4& v, double tol_rank_scale) {
    double max_norm = 0.0;
    for (const auto& u : v) max_norm = std::max(max_norm, norm(u));
    const double tol = tol_rank_scale * max_norm;

    GramSchmidtResult res;
    for (int i = 0; i < 4; ++i) {
        Vec4 u = v[i];
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < i; ++j) u -= dot(u, res.q[j]) * res.q[j];
        const double r = norm(u);
        res.residuals[i] = r;
        if (!(r > tol))
            throw RankDeficient(i, "gram_schmidt4: rank deficient at step " + std::to_string(i) +
                                       " (residual " + std::to_string(r) + ")");
        res.q[i] = u / r;
    }
    return res;
}

double reorthonormalize(Frame4& f) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        Vec4 u = f[i];
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < i; ++j) u -= dot(u, f[j]) * f[j];
        const double r = norm(u);
        worst = std::max(worst, std::fabs(r - 1.0));
        f[i] = u / r;
    }
    return worst;
}

}  // namespace helix4
