#ifndef GSVR_MATH2D_HPP
#define GSVR_MATH2D_HPP

#include <cmath>
#include <cstdint>

namespace gsvr {

template <class S>
struct Vec2 {
    S x{}, y{};

    Vec2() = default;
    Vec2(S x_, S y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(S k) const { return {x * k, y * k}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    bool operator==(const Vec2&) const = default;
};

template <class S>
inline S dot(Vec2<S> a, Vec2<S> b) { return a.x * b.x + a.y * b.y; }

// Row-major 2x2 matrix.
template <class S>
struct Mat2 {
    S m00{}, m01{}, m10{}, m11{};

    static Mat2 identity() { return {S(1), S(0), S(0), S(1)}; }

    Vec2<S> operator*(Vec2<S> v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }
    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Mat2 operator*(S k) const { return {m00 * k, m01 * k, m10 * k, m11 * k}; }
    Mat2 transposed() const { return {m00, m10, m01, m11}; }
    S det() const { return m00 * m11 - m01 * m10; }
};

template <class S>
inline Mat2<S> rotation_matrix(S angle) {
    const S c = std::cos(angle), s = std::sin(angle);
    return {c, -s, s, c};
}

// d/dangle of rotation_matrix(angle).
template <class S>
inline Mat2<S> rotation_matrix_deriv(S angle) {
    const S c = std::cos(angle), s = std::sin(angle);
    return {-s, -c, c, -s};
}

template <class S>
inline S sigmoid(S x) {
    // Split on sign so exp never overflows.
    if (x >= S(0)) {
        const S e = std::exp(-x);
        return S(1) / (S(1) + e);
    }
    const S e = std::exp(x);
    return e / (S(1) + e);
}

template <class S>
inline S sqr(S x) { return x * x; }

// SplitMix64; used to derive independent per-GOP seeds from one root seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace gsvr

#endif // GSVR_MATH2D_HPP
