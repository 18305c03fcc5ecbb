#pragma once

#include <cstddef>
#include <vector>

namespace helix4 {

/// Finite-difference weights for the m-th derivative at x0 = 0 over the
/// integer node offsets `offsets` (unit spacing), computed with the
/// Fornberg recurrence. Divide by h^m for a grid of step h.
std::vector<double> fd_weights(int order, const std::vector<int>& offsets);

/// Weights for the m-th derivative, central stencil of half-width `half`
/// (offsets -half..+half).
std::vector<double> central_weights(int order, int half);

}  // namespace helix4
