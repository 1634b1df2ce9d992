// --------------------------------------------------------------------
// Exact 2D primitives: segments, circles, intersections, on-object
// sampling and point-to-primitive distances. All math is double
// precision over canvas units.
// --------------------------------------------------------------------
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <variant>

#include "geoclidean/random.hpp"

namespace geoclidean {

// Kernel identity tolerance (tangency collapse, on-object checks).
inline constexpr double kGeomTol = 1e-9;
// Scene-level constraint tolerance used by the realizer and verifier.
inline constexpr double kSceneTol = 1e-6;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Finite segment. Constraints bind to the drawn stroke, never to the
// infinite supporting line.
struct Segment {
    Vec2 a;
    Vec2 b;

    double length() const { return distance(a, b); }
    Vec2 point_at(double t) const { return a + (b - a) * t; }
    Vec2 direction() const { return b - a; }
};

struct CircleShape {
    Vec2 center;
    double radius = 0.0;

    Vec2 point_at(double theta) const {
        return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
    }
};

using Primitive = std::variant<Segment, CircleShape>;

struct InvalidPrimitiveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 0-2 intersection points. Tangencies within kGeomTol collapse to one
// point; collinear overlapping segments and identical circles yield the
// empty set.
struct IntersectionSet {
    std::array<Vec2, 2> points{};
    int count = 0;

    void add(Vec2 p) { points[static_cast<std::size_t>(count++)] = p; }
    bool empty() const { return count == 0; }
    const Vec2& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }
};

IntersectionSet intersect(const Primitive& p1, const Primitive& p2);

// Uniform in arc length / segment length.
Vec2 sample_on(const Primitive& p, RandomStream& rng);

// Euclidean distance from c to the nearest point of p; 0 iff c lies on p.
double distance_to(const Primitive& p, Vec2 c);

bool is_degenerate(const Primitive& p);

}  // namespace geoclidean
