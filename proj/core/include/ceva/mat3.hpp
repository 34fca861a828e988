#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "ceva/errors.hpp"

namespace ceva {

using Vec3 = std::array<double, 3>;

/// Dense 3x3 real matrix, row-major. Small enough that everything is by value.
struct Mat3 {
    std::array<Vec3, 3> rows{};

    double& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }
    double operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }

    static Mat3 zero() { return Mat3{}; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        return Mat3{{r0, r1, r2}};
    }

    static Mat3 diag(double d0, double d1, double d2) {
        Mat3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.rows == b.rows; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double c, const Vec3& v) { return {c * v[0], c * v[1], c * v[2]}; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double max_abs(const Vec3& v) {
    return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

inline double max_abs(const Mat3& m) {
    return std::max({max_abs(m.rows[0]), max_abs(m.rows[1]), max_abs(m.rows[2])});
}

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    return Mat3{{a.rows[0] + b.rows[0], a.rows[1] + b.rows[1], a.rows[2] + b.rows[2]}};
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    return Mat3{{a.rows[0] - b.rows[0], a.rows[1] - b.rows[1], a.rows[2] - b.rows[2]}};
}

inline Mat3 operator*(double c, const Mat3& m) {
    return Mat3{{c * m.rows[0], c * m.rows[1], c * m.rows[2]}};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

/// v treated as a row vector: (v * m)_j = sum_i v_i m_ij.
inline Vec3 row_times(const Vec3& v, const Mat3& m) {
    Vec3 r{};
    for (std::size_t j = 0; j < 3; ++j)
        r[j] = v[0] * m(0, j) + v[1] * m(1, j) + v[2] * m(2, j);
    return r;
}

inline double det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Inverse via the adjugate formula. Throws SingularBasis when |det| <= tol.
inline Mat3 inverse(const Mat3& m, double tol = 1e-12) {
    double d = det(m);
    if (std::fabs(d) <= tol)
        throw SingularBasis("matrix is singular (|det| = " + std::to_string(std::fabs(d)) + ")");
    Mat3 adj;
    adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return (1.0 / d) * adj;
}

} // namespace ceva
