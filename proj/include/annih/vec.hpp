#pragma once

#include <array>
#include <cmath>

namespace annih {

/// Spatial vector. Direction constructors elsewhere produce unit-norm values.
struct ThreeVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend ThreeVector operator+(const ThreeVector& a, const ThreeVector& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend ThreeVector operator-(const ThreeVector& a, const ThreeVector& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend ThreeVector operator*(double s, const ThreeVector& v) {
        return {s * v.x, s * v.y, s * v.z};
    }
    ThreeVector operator-() const { return {-x, -y, -z}; }
};

inline double dot(const ThreeVector& a, const ThreeVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline ThreeVector cross(const ThreeVector& a, const ThreeVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const ThreeVector& v) { return std::sqrt(dot(v, v)); }

inline ThreeVector normalized(const ThreeVector& v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Minkowski four-vector, metric diag[-1,1,1,1].
struct FourVector {
    double t = 0.0;
    ThreeVector s;

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.t + b.t, a.s + b.s};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.t - b.t, a.s - b.s};
    }
    friend FourVector operator*(double c, const FourVector& v) {
        return {c * v.t, c * v.s};
    }
};

/// Minkowski product: a.b = a_vec . b_vec - a0 b0.
inline double mdot(const FourVector& a, const FourVector& b) {
    return dot(a.s, b.s) - a.t * b.t;
}

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    ThreeVector operator*(const ThreeVector& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double acc = 0.0;
                for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
                r.m[i][j] = acc;
            }
        return r;
    }
};

} // namespace annih
