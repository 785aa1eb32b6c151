#ifndef OFTT_TYPES_HPP
#define OFTT_TYPES_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace oftt {

using Vec5 = std::array<double, 5>;

enum class Axis { X, Y };

inline Vec5 operator+(const Vec5& a, const Vec5& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}
inline Vec5 operator-(const Vec5& a, const Vec5& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}
inline Vec5 operator*(double s, const Vec5& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]};
}
inline Vec5& operator+=(Vec5& a, const Vec5& b) {
    for (int m = 0; m < 5; ++m) a[m] += b[m];
    return a;
}
inline Vec5& operator-=(Vec5& a, const Vec5& b) {
    for (int m = 0; m < 5; ++m) a[m] -= b[m];
    return a;
}
inline double dot(const Vec5& a, const Vec5& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3] + a[4] * b[4];
}

// Dense 5x5 matrix, row-major.
struct Mat5 {
    std::array<double, 25> a{};

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(5 * r + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(5 * r + c)]; }

    static Mat5 zero() { return Mat5{}; }
    static Mat5 identity() {
        Mat5 m;
        for (int i = 0; i < 5; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat5 transpose() const {
        Mat5 t;
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
};

inline Vec5 operator*(const Mat5& m, const Vec5& v) {
    Vec5 out{};
    for (int r = 0; r < 5; ++r) {
        double s = 0.0;
        for (int c = 0; c < 5; ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

inline Mat5 operator*(const Mat5& x, const Mat5& y) {
    Mat5 out;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            double s = 0.0;
            for (int k = 0; k < 5; ++k) s += x(r, k) * y(k, c);
            out(r, c) = s;
        }
    return out;
}

inline Mat5 operator-(const Mat5& x, const Mat5& y) {
    Mat5 out;
    for (std::size_t i = 0; i < 25; ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
}

// Gauss-Jordan with partial pivoting; throws on a singular matrix.
inline Mat5 inverse(const Mat5& m) {
    Mat5 a = m;
    Mat5 inv = Mat5::identity();
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) throw std::domain_error("Mat5::inverse: singular matrix");
        if (piv != col)
            for (int c = 0; c < 5; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const double d = a(col, col);
        for (int c = 0; c < 5; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < 5; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (int c = 0; c < 5; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace oftt

#endif
