#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridcover/candidates.hpp"
#include "gridcover/cover.hpp"
#include "gridcover/monotone.hpp"
#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"

namespace gridcover {

// Minimum cover of a full grid by axis-parallel lines: drop the axis with the
// largest extent, one line per point of the remaining projection.
inline Cover line_cover_grid(const GridSpec& spec) {
  PointSet P = grid_points(spec);
  const std::size_t d = std::size_t(spec.d());
  std::size_t axis = 0;
  for (std::size_t j = 1; j < d; ++j)
    if (spec.dims[j] > spec.dims[axis]) axis = j;

  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::line();
  std::size_t count = 1;
  for (std::size_t j = 0; j < d; ++j)
    if (j != axis) count *= std::size_t(spec.dims[j]);

  Point base(d, 1);
  for (std::size_t li = 0; li < count; ++li) {
    Curve c;
    c.family = FamilyKind::line;
    Point dir(d, 0);
    dir[axis] = 1;
    c.witness = LineWitness{base, dir};
    Point p = base;
    for (Int t = 1; t <= spec.dims[axis]; ++t) {
      p[axis] = t;
      c.covers.push_back(P.index_of(p));
    }
    cover.curves.push_back(std::move(c));
    // Advance base through the projection, odometer style.
    for (std::size_t j = d; j-- > 0;) {
      if (j == axis) continue;
      if (++base[j] <= spec.dims[j]) break;
      base[j] = 1;
    }
  }
  cover.method = "axis-parallel lines";
  cover.optimal = true;
  cover.disjoint_on_p = true;
  cover.lower = cover.upper = int(count);
  return cover;
}

// 2n-2 skew lines covering the n x n grid: all 2n-3 lines parallel to the
// off-diagonal except the two through single corners, plus the main diagonal
// to pick those corners up.
inline Cover skew_line_cover(Int n) {
  if (n < 2) throw std::invalid_argument("skew line cover needs n >= 2");
  PointSet P = grid_points(GridSpec({n, n}));
  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::skew_line();

  {
    Curve diag;
    diag.family = FamilyKind::skew_line;
    diag.witness = LineWitness{Point{1, 1}, Point{1, 1}};
    for (Int i = 1; i <= n; ++i) diag.covers.push_back(P.index_of({i, i}));
    cover.curves.push_back(std::move(diag));
  }
  for (Int c = 3; c <= 2 * n - 1; ++c) {
    Curve anti;
    anti.family = FamilyKind::skew_line;
    Int x0 = std::max<Int>(1, c - n);
    anti.witness = LineWitness{Point{x0, c - x0}, Point{1, -1}};
    for (Int x = x0; x <= std::min<Int>(n, c - 1); ++x)
      anti.covers.push_back(P.index_of({x, c - x}));
    cover.curves.push_back(std::move(anti));
  }
  cover.method = "off-diagonal parallels plus the main diagonal";
  cover.optimal = true;
  cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
  cover.lower = cover.upper = int(2 * n - 2);
  return cover;
}

// Nested box boundaries. Ring j is the boundary of [j, k_i+1-j] in every
// axis; rings partition the grid and their count min ceil(k_i/2) is the
// covering number for closed convex hypersurfaces.
inline Cover convex_ring_cover(const GridSpec& spec) {
  if (spec.d() < 2) throw std::invalid_argument("ring cover needs dimension >= 2");
  PointSet P = grid_points(spec);
  const std::size_t d = std::size_t(spec.d());
  Int rings = std::numeric_limits<Int>::max();
  for (Int ki : spec.dims) rings = std::min(rings, (ki + 1) / 2);

  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::closed_convex();
  cover.curves.resize(std::size_t(rings));
  for (Int j = 1; j <= rings; ++j) {
    Point lo(d, j), hi(d);
    for (std::size_t i = 0; i < d; ++i) hi[i] = spec.dims[i] + 1 - j;
    cover.curves[std::size_t(j - 1)].family = FamilyKind::closed_convex;
    cover.curves[std::size_t(j - 1)].witness = BoxWitness{lo, hi};
  }
  // Each point lies on exactly one ring: its L-infinity distance to the grid
  // boundary.
  for (std::size_t idx = 0; idx < P.points.size(); ++idx) {
    const Point& p = P.points[idx];
    Int j = std::numeric_limits<Int>::max();
    for (std::size_t i = 0; i < d; ++i)
      j = std::min({j, p[i] - 1, spec.dims[i] - p[i]});
    cover.curves[std::size_t(j)].covers.push_back(int(idx));
  }
  cover.method = "nested box boundaries";
  cover.optimal = true;
  cover.disjoint_on_p = true;
  cover.lower = cover.upper = int(rings);
  return cover;
}

// Circles about the corner (1,1), one per distinct nonzero squared distance
// occurring in the grid, plus one more through the corner itself.
inline Cover concentric_circle_cover(Int n) {
  if (n < 1) throw std::invalid_argument("grid side must be positive");
  PointSet P = grid_points(GridSpec({n, n}));
  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::circle();

  {
    Curve corner;
    corner.family = FamilyKind::circle;
    corner.witness = CircleWitness{Rat(0), Rat(1), Rat(1)};
    corner.covers.push_back(P.index_of({1, 1}));
    cover.curves.push_back(std::move(corner));
  }
  std::map<Int, std::vector<int>> by_dist;
  for (std::size_t idx = 0; idx < P.points.size(); ++idx) {
    const Point& p = P.points[idx];
    Int s = (p[0] - 1) * (p[0] - 1) + (p[1] - 1) * (p[1] - 1);
    if (s != 0) by_dist[s].push_back(int(idx));
  }
  for (auto& [r2, pts] : by_dist) {
    Curve c;
    c.family = FamilyKind::circle;
    c.witness = CircleWitness{Rat(1), Rat(1), Rat(r2)};
    std::sort(pts.begin(), pts.end());
    c.covers = pts;
    cover.curves.push_back(std::move(c));
  }
  cover.method = "concentric circles about a corner";
  cover.disjoint_on_p = true;
  cover.lower = 1;
  cover.upper = int(cover.curves.size());
  return cover;
}

// Onion peeling by hull vertices: every layer is in strictly convex position,
// so this is a valid (not necessarily minimum) strictly convex cover.
inline Cover strictly_convex_peel(Int n) {
  if (n < 1) throw std::invalid_argument("grid side must be positive");
  PointSet P = grid_points(GridSpec({n, n}));
  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::strictly_convex();

  std::vector<int> alive(P.points.size());
  std::iota(alive.begin(), alive.end(), 0);
  while (!alive.empty()) {
    std::vector<Point> pts;
    pts.reserve(alive.size());
    for (int i : alive) pts.push_back(P.points[std::size_t(i)]);
    std::vector<Point> hull = convex_hull(pts);
    Curve layer;
    layer.family = FamilyKind::strictly_convex;
    layer.witness = HullWitness{hull, true};
    std::vector<int> rest;
    for (int i : alive) {
      const Point& p = P.points[std::size_t(i)];
      if (std::find(hull.begin(), hull.end(), p) != hull.end())
        layer.covers.push_back(i);
      else
        rest.push_back(i);
    }
    std::sort(layer.covers.begin(), layer.covers.end());
    cover.curves.push_back(std::move(layer));
    alive.swap(rest);
  }
  cover.method = "hull-vertex peeling";
  cover.disjoint_on_p = true;
  cover.lower = 1;
  cover.upper = int(cover.curves.size());
  return cover;
}

// ceil(n/k) bundles of at most k horizontal lines each; one bundle is one
// degree-<=k curve (the product of its line forms).
inline Cover algebraic_bundle_cover(Int n, int k) {
  if (n < 1) throw std::invalid_argument("grid side must be positive");
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  PointSet P = grid_points(GridSpec({n, n}));
  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::algebraic(k);
  for (Int row = 1; row <= n; row += k) {
    Curve bundle;
    bundle.family = FamilyKind::algebraic;
    BundleWitness w;
    for (Int r = row; r <= std::min<Int>(n, row + k - 1); ++r) {
      w.lines.push_back(LineEq{0, 1, r});
      for (Int x = 1; x <= n; ++x) bundle.covers.push_back(P.index_of({x, r}));
    }
    std::sort(bundle.covers.begin(), bundle.covers.end());
    bundle.witness = std::move(w);
    cover.curves.push_back(std::move(bundle));
  }
  cover.method = "horizontal line bundles";
  cover.optimal = true;
  cover.disjoint_on_p = true;
  cover.lower = cover.upper = int((n + k - 1) / k);
  return cover;
}

// Per point: does some line of the bundle contain it (equivalently, does the
// product of the line forms vanish there).
inline std::vector<bool> verify_vanishing(const BundleWitness& bundle, const PointSet& P) {
  if (P.d != 2) throw std::invalid_argument("line bundles are 2D");
  std::vector<bool> out(P.points.size(), false);
  for (std::size_t i = 0; i < P.points.size(); ++i)
    for (const LineEq& l : bundle.lines)
      if (l.contains(P.points[i])) {
        out[i] = true;
        break;
      }
  return out;
}

// Closed form for the largest collinear subset of a grid.
inline Int max_points_on_line(const GridSpec& spec) {
  Int best = 0;
  for (Int ki : spec.dims) best = std::max(best, ki);
  return best;
}

// Exhaustive check: group every point pair by its canonical line and take the
// largest class. Works in any dimension.
inline Int max_collinear(const PointSet& P) {
  if (P.points.size() <= 2) return Int(P.points.size());
  std::size_t best = 0;
  for (const auto& members : detail::line_classes(P, false))
    best = std::max(best, members.size());
  return Int(best);
}

}  // namespace gridcover
