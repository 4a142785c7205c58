#pragma once

#include <cmath>
#include <optional>

namespace foldatlas {

// Genericity separation: intersection incidences closer than this are rejected.
inline constexpr double kEpsGeom = 1e-9;
// Maximum residual between a turning-angle sum and the nearest whole turn.
inline constexpr double kEpsWind = 1e-6;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    return {a.x / n, a.y / n};
}

// Coorientation: the tangent rotated -90 degrees, so det[c t] > 0 and the
// coorientation followed by the orientation is the standard plane orientation.
inline Vec2 coorientation(Vec2 tangent) { return {tangent.y, -tangent.x}; }

inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Signed exterior angle between consecutive directions, in (-pi, pi).
inline double turn_angle(Vec2 d0, Vec2 d1) {
    return std::atan2(cross(d0, d1), dot(d0, d1));
}

struct SegmentHit {
    double t;   // parameter on segment p (0..1)
    double u;   // parameter on segment q (0..1)
    Vec2 point;
};

// Proper interior intersection of segments [p1,p2] and [q1,q2]. Endpoint
// touches and parallel overlaps are not reported here; the genericity
// validator deals with those separately.
inline std::optional<SegmentHit> segment_intersection(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const Vec2 r = p2 - p1;
    const Vec2 s = q2 - q1;
    const double den = cross(r, s);
    if (std::abs(den) < 1e-14 * norm(r) * norm(s)) return std::nullopt;
    const Vec2 pq = q1 - p1;
    const double t = cross(pq, s) / den;
    const double u = cross(pq, r) / den;
    if (t <= 0.0 || t >= 1.0 || u <= 0.0 || u >= 1.0) return std::nullopt;
    return SegmentHit{t, u, p1 + t * r};
}

// Distance from point to segment [a,b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, d) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return dist(p, a + t * d);
}

}  // namespace foldatlas
