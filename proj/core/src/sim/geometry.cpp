#include "cat/sim/geometry.hpp"

#include <algorithm>
#include <limits>

namespace cat::geom {

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * M_PI;
    a = std::fmod(a + M_PI, two_pi);
    if (a < 0.0) a += two_pi;
    return a - M_PI;
}

std::array<Vec2, 4> OrientedRect::corners() const {
    const Vec2 ax = rotate({1.0, 0.0}, heading);
    const Vec2 ay = rotate({0.0, 1.0}, heading);
    const Vec2 dx = ax * (length * 0.5);
    const Vec2 dy = ay * (width * 0.5);
    return {center + dx + dy, center - dx + dy, center - dx - dy, center + dx - dy};
}

namespace {

struct Projection {
    double lo;
    double hi;
};

Projection project(const std::array<Vec2, 4>& corners, Vec2 axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Vec2& c : corners) {
        const double v = dot(c, axis);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

}  // namespace

bool rects_overlap(const OrientedRect& a, const OrientedRect& b, double tol) {
    const auto ca = a.corners();
    const auto cb = b.corners();
    const std::array<Vec2, 4> axes = {
        rotate({1.0, 0.0}, a.heading), rotate({0.0, 1.0}, a.heading),
        rotate({1.0, 0.0}, b.heading), rotate({0.0, 1.0}, b.heading)};
    for (const Vec2& axis : axes) {
        const Projection pa = project(ca, axis);
        const Projection pb = project(cb, axis);
        const double overlap = std::min(pa.hi, pb.hi) - std::max(pa.lo, pb.lo);
        if (overlap < -tol) return false;
    }
    return true;
}

std::vector<Vec2> rect_overlap_polygon(const OrientedRect& a, const OrientedRect& b) {
    // Sutherland-Hodgman clip of a's corners against b's edges.
    const auto ca = a.corners();
    std::vector<Vec2> poly(ca.begin(), ca.end());
    const auto cb = b.corners();
    for (int i = 0; i < 4 && !poly.empty(); ++i) {
        const Vec2 e0 = cb[i];
        const Vec2 e1 = cb[(i + 1) % 4];
        const Vec2 edge = e1 - e0;
        std::vector<Vec2> out;
        out.reserve(poly.size() + 2);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const Vec2 cur = poly[j];
            const Vec2 nxt = poly[(j + 1) % poly.size()];
            const double dc = cross(edge, cur - e0);
            const double dn = cross(edge, nxt - e0);
            const bool cur_in = dc >= -1e-12;
            const bool nxt_in = dn >= -1e-12;
            if (cur_in) out.push_back(cur);
            if (cur_in != nxt_in) {
                const double t = dc / (dc - dn);
                out.push_back(cur + (nxt - cur) * t);
            }
        }
        poly = std::move(out);
    }
    return poly;
}

Vec2 polygon_centroid(std::span<const Vec2> pts) {
    if (pts.empty()) return {};
    double area2 = 0.0;
    Vec2 acc{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 p = pts[i];
        const Vec2 q = pts[(i + 1) % pts.size()];
        const double c = cross(p, q);
        area2 += c;
        acc = acc + (p + q) * c;
    }
    if (std::abs(area2) < 1e-12) {
        Vec2 mean{};
        for (const Vec2& p : pts) mean = mean + p;
        return mean * (1.0 / static_cast<double>(pts.size()));
    }
    return acc * (1.0 / (3.0 * area2));
}

Vec2 contact_point(const OrientedRect& a, const OrientedRect& b) {
    const std::vector<Vec2> poly = rect_overlap_polygon(a, b);
    if (!poly.empty()) return polygon_centroid(poly);
    // Touch-only configuration: no interior polygon. Use the midpoint of the
    // centers projected onto the touching region as a stable stand-in.
    return (a.center + b.center) * 0.5;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

double segment_segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    const Vec2 da = a1 - a0;
    const Vec2 db = b1 - b0;
    const double d = cross(da, db);
    if (std::abs(d) > 1e-12) {
        const double t = cross(b0 - a0, db) / d;
        const double u = cross(b0 - a0, da) / d;
        if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) return 0.0;
    }
    double best = point_segment_distance(a0, b0, b1);
    best = std::min(best, point_segment_distance(a1, b0, b1));
    best = std::min(best, point_segment_distance(b0, a0, a1));
    best = std::min(best, point_segment_distance(b1, a0, a1));
    return best;
}

double polyline_min_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    if (a.size() == 1 && b.size() == 1) return distance(a[0], b[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < a.size() || i == 0; ++i) {
        const Vec2 a0 = a[i];
        const Vec2 a1 = a[std::min(i + 1, a.size() - 1)];
        for (std::size_t j = 0; j + 1 < b.size() || j == 0; ++j) {
            const Vec2 b0 = b[j];
            const Vec2 b1 = b[std::min(j + 1, b.size() - 1)];
            best = std::min(best, segment_segment_distance(a0, a1, b0, b1));
        }
    }
    return best;
}

double polyline_length(std::span<const Vec2> pts) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += distance(pts[i], pts[i + 1]);
    return len;
}

Vec2 polyline_point_at(std::span<const Vec2> pts, double s) {
    if (pts.empty()) return {};
    if (pts.size() == 1) return pts[0];
    if (s <= 0.0) {
        const Vec2 dir = normalized(pts[1] - pts[0]);
        return pts[0] + dir * s;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double seg = distance(pts[i], pts[i + 1]);
        if (acc + seg >= s || i + 2 == pts.size()) {
            const Vec2 dir = normalized(pts[i + 1] - pts[i]);
            return pts[i] + dir * (s - acc);
        }
        acc += seg;
    }
    return pts.back();
}

double polyline_heading_at(std::span<const Vec2> pts, double s) {
    if (pts.size() < 2) return 0.0;
    if (s <= 0.0) {
        const Vec2 d = pts[1] - pts[0];
        return std::atan2(d.y, d.x);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double seg = distance(pts[i], pts[i + 1]);
        if (acc + seg >= s || i + 2 == pts.size()) {
            const Vec2 d = pts[i + 1] - pts[i];
            return std::atan2(d.y, d.x);
        }
        acc += seg;
    }
    const Vec2 d = pts[pts.size() - 1] - pts[pts.size() - 2];
    return std::atan2(d.y, d.x);
}

double polyline_closest_arc(std::span<const Vec2> pts, Vec2 p) {
    if (pts.size() < 2) return 0.0;
    double best_d = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Vec2 a = pts[i];
        const Vec2 b = pts[i + 1];
        const Vec2 ab = b - a;
        const double len2 = dot(ab, ab);
        const double seg = std::sqrt(len2);
        double t = 0.0;
        if (len2 > 0.0) t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
        const double d = distance(p, a + ab * t);
        if (d < best_d) {
            best_d = d;
            best_s = acc + t * seg;
        }
        acc += seg;
    }
    return best_s;
}

}  // namespace cat::geom
