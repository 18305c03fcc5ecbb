#include "helix4/stencil.hpp"

#include <stdexcept>

namespace helix4 {

// Fornberg's recurrence (Math. Comp. 51, 1988) for the weights of the
// order-m derivative at x = 0 on arbitrarily spaced nodes. Run in long
// double so the emitted coefficients are correct to double precision.
std::vector<double> fd_weights(int order, const std::vector<int>& offsets) {
    const int n = static_cast<int>(offsets.size());
    if (order < 0 || n < order + 1) throw std::invalid_argument("fd_weights: too few nodes");

    const int m = order;
    std::vector<std::vector<long double>> c(n, std::vector<long double>(m + 1, 0.0L));
    long double c1 = 1.0L;
    long double c4 = static_cast<long double>(offsets[0]);
    c[0][0] = 1.0L;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        long double c2 = 1.0L;
        const long double c5 = c4;
        c4 = static_cast<long double>(offsets[i]);
        for (int j = 0; j < i; ++j) {
            const long double c3 = static_cast<long double>(offsets[i] - offsets[j]);
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }

    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = static_cast<double>(c[i][m]);
    return w;
}

std::vector<double> central_weights(int order, int half) {
    std::vector<int> offsets;
    offsets.reserve(2 * half + 1);
    for (int k = -half; k <= half; ++k) offsets.push_back(k);
    return fd_weights(order, offsets);
}

}  // namespace helix4
