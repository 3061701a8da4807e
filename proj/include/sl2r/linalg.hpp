#pragma once

#include <array>
#include <cmath>

namespace sl2r {

struct Vec3 {
    double x{}, y{}, z{};

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double c, Vec3 a) { return {c * a.x, c * a.y, c * a.z}; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) { return (1.0 / norm(a)) * a; }

struct Vec4 {
    std::array<double, 4> v{};

    double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
};

inline Vec4 operator-(Vec4 a) { return {{-a[0], -a[1], -a[2], -a[3]}}; }
inline Vec4 operator*(double c, Vec4 a) { return {{c * a[0], c * a[1], c * a[2], c * a[3]}}; }

// symmetric 3x3, used for metric tensors
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double operator()(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    double& operator()(int i, int j) {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
};

// u^T g v
inline double bilinear(const Mat3& g, Vec3 u, Vec3 v) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += u[i] * g(i, j) * v[j];
    return s;
}

// acts on row vectors: p * M
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    double operator()(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    double& operator()(int i, int j) {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    Vec4 row(int i) const { return {{(*this)(i, 0), (*this)(i, 1), (*this)(i, 2), (*this)(i, 3)}}; }
    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }
};

inline Vec4 operator*(const Vec4& p, const Mat4& a) {
    Vec4 r;
    for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += p[i] * a(i, j);
        r[j] = s;
    }
    return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

}  // namespace sl2r
