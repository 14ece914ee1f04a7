#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridcover/cover.hpp"
#include "gridcover/point.hpp"
#include "gridcover/rational.hpp"

namespace gridcover {

// A curve shape given by the grid points on it, relative to a reference
// point. Tilings place translated copies of the shape.
struct Shape {
  std::string name;
  PointSet offsets;

  int point_count() const { return int(offsets.points.size()); }
};

inline std::vector<Shape> built_in_shapes() {
  auto mk = [](std::string name, std::vector<Point> pts) {
    Shape s;
    s.name = std::move(name);
    s.offsets = PointSet(2, std::move(pts));
    return s;
  };
  return {
      mk("unit-circle", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
      mk("sqrt2-circle", {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}),
      mk("radius2-circle", {{2, 0}, {-2, 0}, {0, 2}, {0, -2}}),
      mk("square2",
         {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}),
      mk("smallest-l",
         {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}, {0, 1}}),
  };
}

inline std::optional<Shape> shape_by_name(const std::string& name) {
  for (Shape& s : built_in_shapes())
    if (s.name == name) return std::move(s);
  return std::nullopt;
}

enum class TilingKind { exact_tiling, tile_like };

// Periodic placement pattern: translates of the shape at
// {p + i*u + j*v : p in placements, i,j integers}. For an exact tiling the
// translates partition Z^2; tile-like patterns cover Z^2 with
// det(u,v)/|placements| = average distinct new points per curve.
struct TilingPattern {
  Shape shape;
  Point u, v;
  std::vector<Point> placements;
  TilingKind kind = TilingKind::exact_tiling;
  Rat average = Rat(0);
};

namespace detail {

// Residue of (X, Y) modulo the lattice spanned by (a,0) and (b,c), as a cell
// index in the fundamental domain {0..a-1} x {0..c-1}.
struct TorusMap {
  Int a = 1, b = 0, c = 1;

  Int cells() const { return a * c; }
  Int index(Int X, Int Y) const {
    Int y = Y % c;
    if (y < 0) y += c;
    Int X2 = X - (Y - y) / c * b;
    Int x = X2 % a;
    if (x < 0) x += a;
    return y * a + x;
  }
};

struct TorusCoverSearch {
  Int cells = 0;
  int per_curve = 0;                       // points per placement
  std::vector<std::vector<Int>> footprint; // placement -> covered cell multiset
  std::vector<std::vector<int>> at;        // cell -> placements covering it
  std::vector<int> mult;
  std::vector<int> chosen;
  std::uint64_t budget = 0;
  bool exhausted_budget = false;

  bool exact_dfs(Int covered) {
    if (covered == cells) return true;
    if (budget-- == 0) {
      exhausted_budget = true;
      return false;
    }
    Int cell = 0;
    while (mult[std::size_t(cell)] > 0) ++cell;
    for (int p : at[std::size_t(cell)]) {
      bool free = true;
      for (Int c2 : footprint[std::size_t(p)])
        if (mult[std::size_t(c2)] > 0) {
          free = false;
          break;
        }
      if (!free) continue;
      for (Int c2 : footprint[std::size_t(p)]) ++mult[std::size_t(c2)];
      chosen.push_back(p);
      if (exact_dfs(covered + Int(footprint[std::size_t(p)].size()))) return true;
      chosen.pop_back();
      for (Int c2 : footprint[std::size_t(p)]) --mult[std::size_t(c2)];
      if (exhausted_budget) return false;
    }
    return false;
  }

  // Cover every cell with exactly `target` placements, overlaps allowed.
  // Branching on the lowest uncovered cell visits every placement set whose
  // members each cover some first-uncovered cell, which includes every
  // irredundant cover.
  bool cover_dfs(Int covered, int target) {
    if (covered == cells) return int(chosen.size()) == target;
    if (int(chosen.size()) == target) return false;
    if (budget-- == 0) {
      exhausted_budget = true;
      return false;
    }
    if (covered + Int(target - int(chosen.size())) * per_curve < cells) return false;
    Int cell = 0;
    while (mult[std::size_t(cell)] > 0) ++cell;
    for (int p : at[std::size_t(cell)]) {
      Int gain = 0;
      for (Int c2 : footprint[std::size_t(p)])
        if (mult[std::size_t(c2)]++ == 0) ++gain;
      chosen.push_back(p);
      if (cover_dfs(covered + gain, target)) return true;
      chosen.pop_back();
      for (Int c2 : footprint[std::size_t(p)]) --mult[std::size_t(c2)];
      if (exhausted_budget) return false;
    }
    return false;
  }
};

}  // namespace detail

// Exhaustive search over period lattices in Hermite normal form u = (a, 0),
// v = (b, c) with det = a*c <= maxPeriod^2, smallest det first, then
// lexicographic basis; within a basis, placements in canonical cell order.
// Returns the first pattern found. For tile_like the target average of
// distinct points per curve must be given (det/placements = average).
inline std::optional<TilingPattern> find_periodic_tiling(
    const Shape& shape, Int max_period, TilingKind kind = TilingKind::exact_tiling,
    std::optional<Rat> average = std::nullopt,
    std::uint64_t node_budget = 2'000'000) {
  if (max_period < 1 || max_period > 12)
    throw std::invalid_argument("max period must be in 1..12");
  if (shape.offsets.points.empty() || shape.offsets.points.size() > 16)
    throw std::invalid_argument("shape must have 1..16 offset points");
  const int k = shape.point_count();
  Rat avg = kind == TilingKind::exact_tiling ? Rat(k) : average.value_or(Rat(0));
  if (kind == TilingKind::tile_like && avg <= Rat(0))
    throw std::invalid_argument("tile-like search needs a positive target average");

  for (Int det = 1; det <= max_period * max_period; ++det) {
    // det cells split into det/average curves.
    Rat t_rat = Rat(det) / avg;
    if (t_rat.den != 1) continue;
    Int t = t_rat.num;
    for (Int a = 1; a <= det; ++a) {
      if (det % a != 0) continue;
      Int c = det / a;
      for (Int b = 0; b < a; ++b) {
        detail::TorusMap torus{a, b, c};
        detail::TorusCoverSearch search;
        search.cells = det;
        search.per_curve = k;
        search.budget = node_budget;
        search.footprint.resize(std::size_t(det));
        search.at.resize(std::size_t(det));
        bool degenerate = false;
        for (Int y = 0; y < c && !degenerate; ++y)
          for (Int x = 0; x < a && !degenerate; ++x) {
            Int p = y * a + x;
            std::vector<Int>& fp = search.footprint[std::size_t(p)];
            for (const Point& o : shape.offsets.points)
              fp.push_back(torus.index(x + o[0], y + o[1]));
            std::sort(fp.begin(), fp.end());
            if (kind == TilingKind::exact_tiling &&
                std::adjacent_find(fp.begin(), fp.end()) != fp.end()) {
              // The shape overlaps its own translates under this lattice;
              // no placement can be part of an exact tiling.
              degenerate = true;
              break;
            }
            for (Int cell : fp) search.at[std::size_t(cell)].push_back(int(p));
          }
        if (degenerate) continue;
        search.mult.assign(std::size_t(det), 0);
        bool found = kind == TilingKind::exact_tiling
                         ? search.exact_dfs(0)
                         : search.cover_dfs(0, int(t));
        if (!found) continue;
        TilingPattern pat;
        pat.shape = shape;
        pat.u = Point{a, 0};
        pat.v = Point{b, c};
        for (int p : search.chosen)
          pat.placements.push_back(Point{Int(p) % a, Int(p) / a});
        std::sort(pat.placements.begin(), pat.placements.end());
        pat.kind = kind;
        pat.average = Rat(det) / Rat(Int(pat.placements.size()));
        return pat;
      }
    }
  }
  return std::nullopt;
}

struct PatternCheck {
  bool ok = false;
  std::map<int, Int> histogram;  // multiplicity -> number of residue cells
  Rat average = Rat(0);
};

// Multiplicity of every residue class of the torus under the pattern.
// Exact tilings need all multiplicities 1; tile-like needs all >= 1.
inline PatternCheck validate_pattern(const TilingPattern& pat) {
  PatternCheck out;
  if (pat.placements.empty()) return out;
  detail::TorusMap torus{pat.u[0], pat.v[0], pat.v[1]};
  if (torus.a < 1 || torus.c < 1 || pat.u[1] != 0) return out;
  std::vector<int> mult(std::size_t(torus.cells()), 0);
  for (const Point& p : pat.placements)
    for (const Point& o : pat.shape.offsets.points)
      ++mult[std::size_t(torus.index(p[0] + o[0], p[1] + o[1]))];
  for (int m : mult) ++out.histogram[m];
  out.average = Rat(torus.cells()) / Rat(Int(pat.placements.size()));
  bool covered = out.histogram.count(0) == 0;
  if (pat.kind == TilingKind::exact_tiling)
    out.ok = covered && out.histogram.size() == 1 && out.histogram.count(1) == 1;
  else
    out.ok = covered && out.average == pat.average;
  return out;
}

// All pattern translates meeting the n x n grid, then a reverse-delete pass
// dropping curves whose points are all covered elsewhere. Minimal, not
// necessarily minimum.
inline Cover clip_to_grid(const TilingPattern& pat, Int n) {
  if (n < 1) throw std::invalid_argument("grid side must be positive");
  PointSet P = grid_points(GridSpec({n, n}));
  Cover cover;
  cover.pointset = P;
  cover.family = CurveFamily::fixed_shape(pat.shape.offsets);

  Int olo_x = pat.shape.offsets.points[0][0], ohi_x = olo_x;
  Int olo_y = pat.shape.offsets.points[0][1], ohi_y = olo_y;
  for (const Point& o : pat.shape.offsets.points) {
    olo_x = std::min(olo_x, o[0]);
    ohi_x = std::max(ohi_x, o[0]);
    olo_y = std::min(olo_y, o[1]);
    ohi_y = std::max(ohi_y, o[1]);
  }
  const Int a = pat.u[0], b = pat.v[0], c = pat.v[1];
  std::vector<Point> translates;
  for (const Point& p : pat.placements) {
    // tau = p + i*u + j*v must satisfy tau + offsets meeting [1,n]^2.
    Int jlo = floor_div(1 - ohi_y - p[1], c);
    Int jhi = floor_div(n - olo_y - p[1], c) + 1;
    for (Int j = jlo; j <= jhi; ++j) {
      Int ty = p[1] + j * c;
      if (ty + ohi_y < 1 || ty + olo_y > n) continue;
      Int ilo = floor_div(1 - ohi_x - p[0] - j * b, a);
      Int ihi = floor_div(n - olo_x - p[0] - j * b, a) + 1;
      for (Int i = ilo; i <= ihi; ++i) {
        Int tx = p[0] + i * a + j * b;
        if (tx + ohi_x < 1 || tx + olo_x > n) continue;
        translates.push_back(Point{tx, ty});
      }
    }
  }
  std::sort(translates.begin(), translates.end());
  translates.erase(std::unique(translates.begin(), translates.end()), translates.end());

  std::vector<Curve> curves;
  for (const Point& t : translates) {
    Curve cv;
    cv.family = FamilyKind::fixed_shape;
    cv.witness = TranslationWitness{t};
    for (const Point& o : pat.shape.offsets.points) {
      int idx = P.index_of(add(t, o));
      if (idx >= 0) cv.covers.push_back(idx);
    }
    std::sort(cv.covers.begin(), cv.covers.end());
    if (!cv.covers.empty()) curves.push_back(std::move(cv));
  }

  std::vector<int> depth(P.points.size(), 0);
  for (const Curve& cv : curves)
    for (int v : cv.covers) ++depth[std::size_t(v)];
  for (std::size_t i = 0; i < P.points.size(); ++i)
    if (depth[i] == 0)
      throw std::logic_error("pattern does not cover the grid; validate it first");
  std::vector<char> keep(curves.size(), 1);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    bool redundant = true;
    for (int v : curves[i].covers)
      if (depth[std::size_t(v)] == 1) {
        redundant = false;
        break;
      }
    if (redundant) {
      keep[i] = 0;
      for (int v : curves[i].covers) --depth[std::size_t(v)];
    }
  }
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (keep[i]) cover.curves.push_back(std::move(curves[i]));

  cover.method = "clipped periodic pattern, redundant curves removed";
  cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
  Int per = pat.shape.name == "square2" ? 7 : Int(pat.shape.point_count());
  cover.lower = int((n * n + per - 1) / per);
  cover.upper = int(cover.curves.size());
  return cover;
}

// Counting bounds for covering the n x n grid with translates of the shape.
// The generic per-curve capacity is the shape's point count; a side-2 square
// boundary can contribute at most 7 new points per curve once curves overlap
// or miss the grid edge, which tightens its bound.
inline BoundsReport small_curve_bounds(const Shape& shape, Int n,
                                       Int max_period = 8) {
  BoundsReport rep;
  Int per = shape.name == "square2" ? 7 : Int(shape.point_count());
  rep.lower = int((n * n + per - 1) / per);
  TilingKind kind =
      shape.name == "square2" ? TilingKind::tile_like : TilingKind::exact_tiling;
  std::optional<Rat> avg;
  if (shape.name == "square2") avg = Rat(7);
  auto pat = find_periodic_tiling(shape, max_period, kind, avg);
  if (!pat) {
    rep.upper = int(n * n);  // one curve per point
    rep.method = "no periodic pattern found within the period cap";
    return rep;
  }
  Cover clipped = clip_to_grid(*pat, n);
  rep.upper = clipped.upper;
  rep.method = "periodic pattern clipped to the grid";
  if (rep.lower == rep.upper) rep.exact = rep.lower;
  return rep;
}

}  // namespace gridcover
