#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gridcover/point.hpp"

namespace gridcover {

// Sign of the 2D cross product (b-a) x (c-a): >0 left turn, <0 right turn.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  Int128 v = Int128(b[0] - a[0]) * (c[1] - a[1]) - Int128(b[1] - a[1]) * (c[0] - a[0]);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

// Collinearity in any dimension: all 2x2 minors of (b-a | c-a) vanish.
inline bool collinear(const Point& a, const Point& b, const Point& c) {
  const std::size_t d = a.size();
  if (b.size() != d || c.size() != d)
    throw std::invalid_argument("collinear: dimension mismatch");
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Int128 m = Int128(b[i] - a[i]) * (c[j] - a[j]) - Int128(b[j] - a[j]) * (c[i] - a[i]);
      if (m != 0) return false;
    }
  return true;
}

// True iff d lies on the circle through non-collinear a, b, c (2D only).
// Sign test of the standard 4x4 lifted determinant, expanded as a 3x3 after
// translating by d; coordinates up to ~2^20 stay well within __int128.
inline bool concyclic4(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a.size() != 2 || b.size() != 2 || c.size() != 2 || d.size() != 2)
    throw std::invalid_argument("concyclic4 requires dimension 2");
  if (collinear(a, b, c))
    throw std::invalid_argument("concyclic4: first three points are collinear");
  Int128 ax = a[0] - d[0], ay = a[1] - d[1];
  Int128 bx = b[0] - d[0], by = b[1] - d[1];
  Int128 cx = c[0] - d[0], cy = c[1] - d[1];
  Int128 a2 = ax * ax + ay * ay;
  Int128 b2 = bx * bx + by * by;
  Int128 c2 = cx * cx + cy * cy;
  Int128 det = ax * (by * c2 - cy * b2) - ay * (bx * c2 - cx * b2) + a2 * (bx * cy - cx * by);
  return det == 0;
}

enum class HullLabel { vertex, edge_interior, strict_interior };

// Convex hull of 2D points, counter-clockwise, strict corners only
// (collinear boundary points are not vertices). Empty and degenerate
// inputs yield 0/1/2-point hulls.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

// Labels every point of a 2D set relative to the convex hull of the set:
// hull corner, on a hull edge but not a corner, or strictly inside.
// Degenerate (collinear) sets have segment endpoints as vertices and the
// rest edge-interior; a single point is a vertex.
inline std::vector<HullLabel> hull_classify(const PointSet& ps) {
  if (ps.d != 2) throw std::invalid_argument("hull_classify requires dimension 2");
  const auto& pts = ps.points;
  std::vector<HullLabel> labels(pts.size(), HullLabel::strict_interior);
  if (pts.empty()) return labels;
  std::vector<Point> hull = convex_hull(pts);
  if (hull.size() <= 2) {
    // Collinear set: extremes are vertices, the rest lie on the segment.
    for (std::size_t i = 0; i < pts.size(); ++i)
      labels[i] = (pts[i] == hull.front() || pts[i] == hull.back())
                      ? HullLabel::vertex
                      : HullLabel::edge_interior;
    return labels;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    HullLabel label = HullLabel::strict_interior;
    // Vertex test must run before edge tests: segments include their endpoints.
    for (const Point& v : hull)
      if (p == v) {
        label = HullLabel::vertex;
        break;
      }
    if (label != HullLabel::vertex)
      for (std::size_t j = 0; j < hull.size(); ++j)
        if (on_segment(p, hull[j], hull[(j + 1) % hull.size()])) {
          label = HullLabel::edge_interior;
          break;
        }
    labels[i] = label;
  }
  return labels;
}

}  // namespace gridcover
