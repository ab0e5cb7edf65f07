/// @file mat3.hpp
/// @brief Fixed-size 3-vector / 3x3-matrix kit for velocity-moment algebra.
///
/// Everything the kinetics modules need from linear algebra fits in closed
/// form at size three: determinant, adjugate inverse, quadratic forms, and
/// the trigonometric eigenvalue solver for symmetric matrices.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace esbgk {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    double max_abs() const { return std::max({std::abs(x), std::abs(y), std::abs(z)}); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Row-major 3x3 matrix value type.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    static Mat3 diag(double d0, double d1, double d2) {
        Mat3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Mat3 operator*(double s) const {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] * s;
        return r;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }

    /// Adjugate-based inverse. Caller must ensure det is safely nonzero.
    Mat3 inverse() const {
        const double d = det();
        Mat3 r;
        r(0, 0) = (a[4] * a[8] - a[5] * a[7]) / d;
        r(0, 1) = (a[2] * a[7] - a[1] * a[8]) / d;
        r(0, 2) = (a[1] * a[5] - a[2] * a[4]) / d;
        r(1, 0) = (a[5] * a[6] - a[3] * a[8]) / d;
        r(1, 1) = (a[0] * a[8] - a[2] * a[6]) / d;
        r(1, 2) = (a[2] * a[3] - a[0] * a[5]) / d;
        r(2, 0) = (a[3] * a[7] - a[4] * a[6]) / d;
        r(2, 1) = (a[1] * a[6] - a[0] * a[7]) / d;
        r(2, 2) = (a[0] * a[4] - a[1] * a[3]) / d;
        return r;
    }

    /// v^T M v.
    double quadform(const Vec3& v) const {
        const Vec3 mv{a[0] * v.x + a[1] * v.y + a[2] * v.z,
                      a[3] * v.x + a[4] * v.y + a[5] * v.z,
                      a[6] * v.x + a[7] * v.y + a[8] * v.z};
        return v.dot(mv);
    }

    Mat3 symmetrized() const {
        Mat3 r = *this;
        r(0, 1) = r(1, 0) = 0.5 * (a[1] + a[3]);
        r(0, 2) = r(2, 0) = 0.5 * (a[2] + a[6]);
        r(1, 2) = r(2, 1) = 0.5 * (a[5] + a[7]);
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (double v : a) s += v * v;
        return std::sqrt(s);
    }

    double max_off_diagonal() const {
        return std::max({std::abs(a[1]), std::abs(a[2]), std::abs(a[3]),
                         std::abs(a[5]), std::abs(a[6]), std::abs(a[7])});
    }
};

inline Mat3 outer(const Vec3& u, const Vec3& v) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = u[i] * v[j];
    return m;
}

/// Eigenvalues of a symmetric 3x3 matrix, descending, by the trigonometric
/// (Cardano-form) method. Input is symmetrized first.
inline std::array<double, 3> sym_eigenvalues(const Mat3& m_in) {
    const Mat3 m = m_in.symmetrized();
    const double p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
    const double q = m.trace() / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> e{m(0, 0), m(1, 1), m(2, 2)};
        std::sort(e.begin(), e.end(), std::greater<>());
        return e;
    }
    const double p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) +
                      (m(2, 2) - q) * (m(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b = (m - Mat3::identity() * q) * (1.0 / p);
    const double r = std::clamp(b.det() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::acos(-1.0) / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> e{e1, e2, e3};
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

} // namespace esbgk
