#pragma once

#include <cmath>
#include <vector>

namespace roofrisk::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

/// Closed rings are stored with first point repeated as last point.
using Ring = std::vector<Vec2>;

inline bool ring_is_closed(const Ring& r) {
    return r.size() >= 4 && r.front() == r.back();
}

/// Shoelace formula; positive for counter-clockwise rings in a y-up frame.
double signed_area(const Ring& ring);

/// Even-odd (crossing number) containment test. Points exactly on an edge
/// are classified by the half-open crossing rule; callers that need exact
/// results keep query points off the edges (pixel centers vs. integer
/// corners).
bool point_in_ring_evenodd(const Vec2& p, const Ring& ring);

/// True if segments ab and cd intersect, including endpoint touches and
/// collinear overlap.
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// True if segments ab and cd cross at a point interior to both, or overlap
/// collinearly over more than a point, or an endpoint of one lies in the
/// relative interior of the other. Pure endpoint-to-endpoint touches do not
/// count. This is the test behind the weak-simplicity check used for
/// polygonized rings, which may legitimately touch themselves at pixel
/// corners under 8-connectivity.
bool segments_cross_improperly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Perpendicular distance from p to the infinite line through a and b;
/// falls back to |p - a| when a == b.
double point_line_distance(const Vec2& p, const Vec2& a, const Vec2& b);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

double segment_segment_distance(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

inline double dist(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Centroid of a ring's vertices (duplicate closing vertex ignored).
Vec2 ring_vertex_centroid(const Ring& ring);

/// A ring is weakly simple when no two non-adjacent segments cross
/// improperly; touching at shared vertices is allowed.
bool ring_is_weakly_simple(const Ring& ring);

} // namespace roofrisk::geom
