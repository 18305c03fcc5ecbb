#pragma once

#include <array>

#include "helix4/vec4.hpp"

namespace helix4 {

struct GramSchmidtResult {
    Frame4 q;                          // pairwise orthonormal within 1e-12
    std::array<double, 4> residuals;   // pre-normalization norm of each step
};

/// Classical Gram-Schmidt with one re-orthogonalization pass.
/// Throws RankDeficient(i) when residual i falls below
/// tol_rank_scale * max input norm.
GramSchmidtResult gram_schmidt4(const Frame4& v, double tol_rank_scale = 1e-10);

/// Re-orthonormalize a nearly orthonormal frame in place (same projection,
/// no rank checks). Returns the largest deviation of a step residual from 1,
/// a cheap proxy for the pre-projection defect.
double reorthonormalize(Frame4& f);

}  // namespace helix4
