// Plane vectors and points.
#pragma once

#include <cmath>

namespace geosaddle {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return s * a; }
    Vec2 operator-() const { return {-x, -y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product; zero iff parallel.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline bool is_zero(Vec2 a) { return a.x == 0.0 && a.y == 0.0; }

/// Counterclockwise quarter turn.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 normalized(Vec2 a)
{
    double n = norm(a);
    return {a.x / n, a.y / n};
}

/// Axis-aligned box in the plane.
struct Region {
    double xmin = -1.0;
    double xmax = 1.0;
    double ymin = -1.0;
    double ymax = 1.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(Vec2 p, double slack = 0.0) const
    {
        return p.x >= xmin - slack && p.x <= xmax + slack
               && p.y >= ymin - slack && p.y <= ymax + slack;
    }
};

} // namespace geosaddle
