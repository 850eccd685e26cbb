#pragma once

// Exact 2-D primitives on convex vertex rings (counter-clockwise, no
// repeated or collinear vertices). A ring of one vertex is a point, a ring
// of two vertices is a segment.

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace fuzzvec::geometry::planar {

using Point = Eigen::Vector2d;
using Ring = std::vector<Point>;

double cross(const Point& o, const Point& a, const Point& b);
double segment_distance(const Point& p, const Point& a, const Point& b);
Point segment_projection(const Point& p, const Point& a, const Point& b);

/// Convex hull ring of the points; vertices closer than eps to the hull of
/// the remaining ones are dropped.
Ring convex_ring(std::span<const Point> points, double eps);

/// Nearest point of the ring's convex hull.
Point project(const Ring& ring, const Point& p);

/// Sutherland-Hodgman clip of a convex ring against <t, n> <= h. Vertices
/// within eps of the line count as inside. Returns an empty ring when the
/// intersection is empty.
Ring clip(const Ring& ring, const Point& n, double h, double eps);

/// Outer unit normals of the ring's edges (i -> i+1), in ring order.
std::vector<Point> edge_normals(const Ring& ring);

}  // namespace fuzzvec::geometry::planar
