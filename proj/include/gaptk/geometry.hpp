#pragma once

#include <algorithm>
#include <cmath>

#include "gaptk/core.hpp"

namespace gaptk::geom {

/// Sign of the cross product (b-a) x (c-a): +1 counter-clockwise, -1
/// clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const double d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (d > 0.0) - (d < 0.0);
}

/// Whether p, known to be collinear with segment ab, lies on the closed
/// segment.
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed-segment intersection test. Touching configurations (shared point,
/// endpoint on interior, collinear overlap) count as intersections.
inline bool segments_intersect(const Point& p1, const Point& p2,
                               const Point& q1, const Point& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

/// Strict interior crossing: both segments split by each other. Degenerate
/// touches (collinear or endpoint-on-segment) are excluded.
inline bool proper_crossing(const Point& p1, const Point& p2, const Point& q1,
                            const Point& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

inline double point_distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double point_segment_distance(const Point& p, const Point& a,
                                     const Point& b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return point_distance(p, a);
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return point_distance(p, Point{a.x + t * vx, a.y + t * vy});
}

/// Minimum distance between two closed segments; zero when they intersect.
inline double segment_distance(const Point& p1, const Point& p2,
                               const Point& q1, const Point& q2) {
  if (segments_intersect(p1, p2, q1, q2)) return 0.0;
  return std::min({point_segment_distance(q1, p1, p2),
                   point_segment_distance(q2, p1, p2),
                   point_segment_distance(p1, q1, q2),
                   point_segment_distance(p2, q1, q2)});
}

}  // namespace gaptk::geom
