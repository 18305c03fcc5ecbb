#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace helix4 {

/// Point / vector in Euclidean 4-space.
struct Vec4 {
    double x = 0.0, y = 0.0, z = 0.0, w = 0.0;

    double& operator[](std::size_t i) { return (&x)[i]; }
    double operator[](std::size_t i) const { return (&x)[i]; }

    Vec4& operator+=(const Vec4& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        w += o.w;
        return *this;
    }
    Vec4& operator-=(const Vec4& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        w -= o.w;
        return *this;
    }
    Vec4& operator*=(double a) {
        x *= a;
        y *= a;
        z *= a;
        w *= a;
        return *this;
    }
};

inline Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
inline Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
inline Vec4 operator*(Vec4 a, double s) { return a *= s; }
inline Vec4 operator*(double s, Vec4 a) { return a *= s; }
inline Vec4 operator/(Vec4 a, double s) { return a *= (1.0 / s); }
inline Vec4 operator-(const Vec4& a) { return {-a.x, -a.y, -a.z, -a.w}; }

inline double dot(const Vec4& a, const Vec4& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z + a.w * b.w;
}

inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

inline Vec4 normalized(const Vec4& a) { return a / norm(a); }

/// Moving frame: four row vectors (T, N, B1, B2 for Frenet use).
using Frame4 = std::array<Vec4, 4>;

/// Determinant of the 4x4 matrix whose rows are the frame vectors.
double det4(const Frame4& f);

/// Generalized cross product: the vector orthogonal to a, b, c with
/// det[u a b c] = |u|^2 (cofactor expansion along the first row).
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

/// max_{i,j} |<f_i, f_j> - delta_ij|
double orthonormality_defect(const Frame4& f);

inline Frame4 identity_frame() {
    return Frame4{Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}};
}

}  // namespace helix4
