// --------------------------------------------------------------------
// Analytic intersection, sampling and distance kernels.
// --------------------------------------------------------------------
#include "geoclidean/geom.hpp"

#include <algorithm>
#include <numbers>

namespace geoclidean {
namespace {

void require_valid(const Primitive& p) {
    if (is_degenerate(p)) throw InvalidPrimitiveError("degenerate primitive (zero length or radius)");
}

IntersectionSet intersect_segments(const Segment& s1, const Segment& s2) {
    IntersectionSet out;
    const Vec2 d1 = s1.direction();
    const Vec2 d2 = s2.direction();
    const double denom = cross(d1, d2);
    const double scale = std::max(d1.norm(), d2.norm());
    if (std::abs(denom) <= kGeomTol * scale * scale) {
        // Parallel. Collinear overlap has no canonical point: empty set.
        return out;
    }
    const Vec2 w = s2.a - s1.a;
    const double t = cross(w, d2) / denom;
    const double u = cross(w, d1) / denom;
    // Parameter slack so that endpoint contact within kGeomTol still counts.
    const double et = kGeomTol / std::max(d1.norm(), kGeomTol);
    const double eu = kGeomTol / std::max(d2.norm(), kGeomTol);
    if (t >= -et && t <= 1.0 + et && u >= -eu && u <= 1.0 + eu) {
        out.add(s1.point_at(std::clamp(t, 0.0, 1.0)));
    }
    return out;
}

IntersectionSet intersect_segment_circle(const Segment& s, const CircleShape& c) {
    IntersectionSet out;
    const Vec2 d = s.direction();
    const double len = d.norm();
    const Vec2 f = s.a - c.center;

    // Distance from center to the supporting line decides tangency.
    const double line_dist = std::abs(cross(d, f)) / len;
    const double et = kGeomTol / len;
    if (std::abs(line_dist - c.radius) <= kGeomTol) {
        const double t = -dot(f, d) / (len * len);  // foot of the perpendicular
        if (t >= -et && t <= 1.0 + et) out.add(s.point_at(std::clamp(t, 0.0, 1.0)));
        return out;
    }
    if (line_dist > c.radius) return out;

    const double aa = dot(d, d);
    const double bb = 2.0 * dot(f, d);
    const double cc = dot(f, f) - c.radius * c.radius;
    const double disc = bb * bb - 4.0 * aa * cc;
    if (disc <= 0.0) return out;
    const double sq = std::sqrt(disc);
    for (double t : {(-bb - sq) / (2.0 * aa), (-bb + sq) / (2.0 * aa)}) {
        if (t >= -et && t <= 1.0 + et) out.add(s.point_at(std::clamp(t, 0.0, 1.0)));
    }
    return out;
}

IntersectionSet intersect_circles(const CircleShape& c1, const CircleShape& c2) {
    IntersectionSet out;
    const double d = distance(c1.center, c2.center);
    if (d <= kGeomTol && std::abs(c1.radius - c2.radius) <= kGeomTol) {
        // Identical circles: no canonical point, same policy as collinear
        // overlapping segments.
        return out;
    }
    const double rsum = c1.radius + c2.radius;
    const double rdiff = std::abs(c1.radius - c2.radius);
    if (std::abs(d - rsum) <= kGeomTol || (d > kGeomTol && std::abs(d - rdiff) <= kGeomTol)) {
        // External or internal tangency: single contact point.
        const Vec2 u = (c2.center - c1.center) * (1.0 / d);
        const double sgn = (c1.radius >= c2.radius || std::abs(d - rsum) <= kGeomTol) ? 1.0 : -1.0;
        out.add(c1.center + u * (c1.radius * sgn));
        return out;
    }
    if (d > rsum || d < rdiff) return out;

    const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    const double h2 = c1.radius * c1.radius - a * a;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const Vec2 u = (c2.center - c1.center) * (1.0 / d);
    const Vec2 mid = c1.center + u * a;
    const Vec2 perp{-u.y, u.x};
    out.add(mid + perp * h);
    out.add(mid - perp * h);
    return out;
}

}  // namespace

bool is_degenerate(const Primitive& p) {
    if (const auto* s = std::get_if<Segment>(&p)) return s->length() <= kGeomTol;
    return std::get<CircleShape>(p).radius <= kGeomTol;
}

IntersectionSet intersect(const Primitive& p1, const Primitive& p2) {
    require_valid(p1);
    require_valid(p2);
    if (const auto* s1 = std::get_if<Segment>(&p1)) {
        if (const auto* s2 = std::get_if<Segment>(&p2)) return intersect_segments(*s1, *s2);
        return intersect_segment_circle(*s1, std::get<CircleShape>(p2));
    }
    const auto& c1 = std::get<CircleShape>(p1);
    if (const auto* s2 = std::get_if<Segment>(&p2)) return intersect_segment_circle(*s2, c1);
    return intersect_circles(c1, std::get<CircleShape>(p2));
}

Vec2 sample_on(const Primitive& p, RandomStream& rng) {
    if (const auto* s = std::get_if<Segment>(&p)) return s->point_at(rng.unit());
    return std::get<CircleShape>(p).point_at(rng.unit() * 2.0 * std::numbers::pi);
}

double distance_to(const Primitive& p, Vec2 c) {
    if (const auto* s = std::get_if<Segment>(&p)) {
        const Vec2 d = s->direction();
        const double len2 = dot(d, d);
        if (len2 <= 0.0) return distance(c, s->a);
        const double t = std::clamp(dot(c - s->a, d) / len2, 0.0, 1.0);
        return distance(c, s->point_at(t));
    }
    const auto& circ = std::get<CircleShape>(p);
    return std::abs(distance(c, circ.center) - circ.radius);
}

}  // namespace geoclidean
