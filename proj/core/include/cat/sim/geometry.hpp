#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace cat::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    return n > 0.0 ? Vec2{a.x / n, a.y / n} : Vec2{1.0, 0.0};
}

inline Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Wraps an angle into [-pi, pi).
double wrap_angle(double a);

struct OrientedRect {
    Vec2 center;
    double heading = 0.0;  // rad
    double length = 0.0;   // along heading
    double width = 0.0;

    std::array<Vec2, 4> corners() const;
};

/// Separating-axis overlap test. Touching configurations within `tol`
/// count as overlapping (closed overlap convention).
bool rects_overlap(const OrientedRect& a, const OrientedRect& b, double tol = 1e-9);

/// Intersection polygon of two oriented rectangles (may be empty for
/// touch-only configurations).
std::vector<Vec2> rect_overlap_polygon(const OrientedRect& a, const OrientedRect& b);

/// Area centroid; falls back to the vertex mean for degenerate polygons.
Vec2 polygon_centroid(std::span<const Vec2> pts);

/// Representative contact point for two overlapping rectangles.
Vec2 contact_point(const OrientedRect& a, const OrientedRect& b);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);
double polyline_min_distance(std::span<const Vec2> a, std::span<const Vec2> b);

double polyline_length(std::span<const Vec2> pts);

/// Point at arc-length s along the polyline; extrapolates along the first
/// or last segment direction when s is outside [0, length].
Vec2 polyline_point_at(std::span<const Vec2> pts, double s);

/// Tangent heading (rad) at arc-length s.
double polyline_heading_at(std::span<const Vec2> pts, double s);

/// Arc-length of the closest point of the polyline to p.
double polyline_closest_arc(std::span<const Vec2> pts, Vec2 p);

}  // namespace cat::geom
