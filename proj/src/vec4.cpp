#include "helix4/vec4.hpp"

namespace helix4 {

namespace {

double det3(double a00, double a01, double a02, double a10, double a11, double a12,
            double a20, double a21, double a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}

}  // namespace

double det4(const Frame4& f) {
    double d = 0.0;
    double sign = 1.0;
    for (int c = 0; c < 4; ++c) {
        int cols[3];
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != c) cols[k++] = j;
        d += sign * f[0][c] *
             det3(f[1][cols[0]], f[1][cols[1]], f[1][cols[2]], f[2][cols[0]], f[2][cols[1]],
                  f[2][cols[2]], f[3][cols[0]], f[3][cols[1]], f[3][cols[2]]);
        sign = -sign;
    }
    return d;
}

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
    Vec4 u;
    double sign = 1.0;
    for (int i = 0; i < 4; ++i) {
        int cols[3];
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) cols[k++] = j;
        u[i] = sign * det3(a[cols[0]], a[cols[1]], a[cols[2]], b[cols[0]], b[cols[1]],
                           b[cols[2]], c[cols[0]], c[cols[1]], c[cols[2]]);
        sign = -sign;
    }
    return u;
}

double orthonormality_defect(const Frame4& f) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            double g = dot(f[i], f[j]) - (i == j ? 1.0 : 0.0);
            worst = std::max(worst, std::fabs(g));
        }
    }
    return worst;
}

}  // namespace helix4
