#ifndef ABWAVE_VEC2_HPP
#define ABWAVE_VEC2_HPP

#include <cmath>

namespace abwave {

struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;

    Vec2() = default;
    Vec2(double a, double b) : x1(a), x2(b) {}

    Vec2 operator+(const Vec2& o) const { return {x1 + o.x1, x2 + o.x2}; }
    Vec2 operator-(const Vec2& o) const { return {x1 - o.x1, x2 - o.x2}; }
    Vec2 operator*(double c) const { return {x1 * c, x2 * c}; }
    Vec2 operator-() const { return {-x1, -x2}; }
    Vec2& operator+=(const Vec2& o) { x1 += o.x1; x2 += o.x2; return *this; }
    Vec2& operator-=(const Vec2& o) { x1 -= o.x1; x2 -= o.x2; return *this; }
};

inline Vec2 operator*(double c, const Vec2& v) { return v * c; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x1 * b.x1 + a.x2 * b.x2; }

// z-component of the 3D cross product; positive when b is counterclockwise of a.
inline double cross(const Vec2& a, const Vec2& b) { return a.x1 * b.x2 - a.x2 * b.x1; }

inline double norm(const Vec2& v) { return std::hypot(v.x1, v.x2); }

inline double norm_sq(const Vec2& v) { return v.x1 * v.x1 + v.x2 * v.x2; }

inline Vec2 normalized(const Vec2& v) {
    double n = norm(v);
    return {v.x1 / n, v.x2 / n};
}

// counterclockwise rotation by pi/2
inline Vec2 perp(const Vec2& v) { return {-v.x2, v.x1}; }

}  // namespace abwave

#endif
