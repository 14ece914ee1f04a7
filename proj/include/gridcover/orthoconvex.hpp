#pragma once

// Rectilinear orthoconvex curves: simple closed axis-parallel polygons whose
// region meets every horizontal and every vertical line in at most one
// segment. Regions with corners on the integer lattice are exactly the
// HV-convex polyominoes: a contiguous range of unit-cell rows, one cell
// interval per row, adjacent intervals overlapping, with the left border
// valley-unimodal (non-increasing then non-decreasing, bottom to top) and the
// right border hill-unimodal. Enumeration, coverability decisions, and corner
// counting all work on that row-interval encoding; polygons are extracted by
// an outline walk.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"

namespace gridcover {

struct RectilinearPolygon {
  std::vector<Point> vertices;  // closed, counter-clockwise, strict corners

  friend bool operator==(const RectilinearPolygon& a, const RectilinearPolygon& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const RectilinearPolygon& a, const RectilinearPolygon& b) {
    return a.vertices < b.vertices;
  }
};

constexpr int kOrthoUnbounded = -1;  // sentinel: no inner-corner bound

struct OrthoEnumCaps {
  Int unbounded_side = 7;  // max box side (in grid points) when corners unbounded
  Int bounded_side = 12;   // max box side when maxInnerCorners <= 2
};

// Cell-row encoding of an orthoconvex polyomino. Row j (absolute cell
// y-coordinate y0 + j) occupies cell columns [lo[j], hi[j]] inclusive; cell
// (c, r) is the unit square [c, c+1] x [r, r+1].
struct OrthoRows {
  Int y0 = 0;
  std::vector<std::pair<Int, Int>> rows;
};

namespace detail {

// Reflex corners created at the junction between two adjacent occupied cell
// rows [l0,h0] (below) and [l1,h1] (above): lattice points at the junction
// height with exactly three of their four incident cells occupied.
inline int junction_reflex(Int l0, Int h0, Int l1, Int h1) {
  // The interval borders are the only candidates: any other point has its
  // below pair and its above pair each fully occupied or fully empty. Two
  // borders may coincide, so dedupe.
  Int cand[4] = {l0, h0 + 1, l1, h1 + 1};
  std::sort(cand, cand + 4);
  int count = 0;
  Int prev = cand[0] - 1;
  for (Int x : cand) {
    if (x == prev) continue;
    prev = x;
    int occ = (l0 <= x - 1 && x - 1 <= h0) + (l0 <= x && x <= h0) +
              (l1 <= x - 1 && x - 1 <= h1) + (l1 <= x && x <= h1);
    if (occ == 3) ++count;
  }
  return count;
}

}  // namespace detail

// Boundary polygon of a row-encoded polyomino, counter-clockwise starting at
// its bottom-left corner.
inline RectilinearPolygon ortho_rows_to_polygon(const OrthoRows& shape) {
  const auto& rows = shape.rows;
  if (rows.empty()) throw std::invalid_argument("empty polyomino");
  const Int y0 = shape.y0;
  const int m = int(rows.size());
  std::vector<Point> path;
  auto push = [&](Int x, Int y) { path.push_back(pt(x, y)); };
  push(rows[0].first, y0);
  push(rows[0].second + 1, y0);  // bottom edge, eastward
  for (int j = 0; j < m; ++j) {  // right side, northward
    push(rows[j].second + 1, y0 + j + 1);
    if (j + 1 < m) push(rows[j + 1].second + 1, y0 + j + 1);
  }
  push(rows[m - 1].first, y0 + m);  // top edge, westward
  for (int j = m - 1; j >= 0; --j) {  // left side, southward
    push(rows[j].first, y0 + j);
    if (j > 0) push(rows[j - 1].first, y0 + j);
  }
  // Compress collinear runs and zero-length moves into strict corners.
  std::vector<Point> out;
  for (const Point& p : path) {
    if (!out.empty() && out.back() == p) continue;
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p))
      out.pop_back();
    out.push_back(p);
  }
  if (out.size() >= 2 && out.back() == out.front()) out.pop_back();
  while (out.size() >= 3 && collinear(out[out.size() - 2], out.back(), out.front()))
    out.pop_back();
  if (out.size() >= 3 && collinear(out.back(), out.front(), out[1]))
    out.erase(out.begin());
  return RectilinearPolygon{std::move(out)};
}

// Number of 270-degree (reflex) corners.
inline int inner_corner_count(const RectilinearPolygon& poly) {
  const auto& v = poly.vertices;
  const int n = int(v.size());
  if (n < 4) throw std::invalid_argument("degenerate rectilinear polygon");
  Int128 area2 = 0;
  for (int i = 0; i < n; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % n];
    area2 += Int128(p[0]) * q[1] - Int128(q[0]) * p[1];
  }
  if (area2 == 0) throw std::invalid_argument("degenerate rectilinear polygon");
  const int ccw = area2 > 0 ? 1 : -1;
  int reflex = 0;
  for (int i = 0; i < n; ++i) {
    int turn = orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
    if (turn == 0) throw std::invalid_argument("polygon has a straight vertex");
    if (turn != ccw) ++reflex;
  }
  return reflex;
}

// All lattice points on the boundary, lex-sorted.
inline std::vector<Point> polygon_trace(const RectilinearPolygon& poly) {
  std::vector<Point> out;
  const auto& v = poly.vertices;
  const int n = int(v.size());
  for (int i = 0; i < n; ++i) {
    Point a = v[i], b = v[(i + 1) % n];
    if (a[0] == b[0]) {
      Int lo = std::min(a[1], b[1]), hi = std::max(a[1], b[1]);
      for (Int y = lo; y < hi; ++y) out.push_back(pt(a[0], y));
      out.push_back(pt(a[0], hi));
    } else if (a[1] == b[1]) {
      Int lo = std::min(a[0], b[0]), hi = std::max(a[0], b[0]);
      for (Int x = lo; x < hi; ++x) out.push_back(pt(x, a[1]));
      out.push_back(pt(hi, a[1]));
    } else {
      throw std::invalid_argument("polygon edge is not axis-parallel");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Structural validity: closed axis-parallel simple polygon with strict
// corners, positive area, orthoconvex region. Throws on malformed input,
// returns false only for valid simple rectilinear polygons that fail
// orthoconvexity.
inline bool validate_orthoconvex(const RectilinearPolygon& poly) {
  const auto& v = poly.vertices;
  const int n = int(v.size());
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("rectilinear polygon needs an even vertex count >= 4");
  for (const Point& p : v)
    if (p.size() != 2) throw std::invalid_argument("rectilinear polygon vertices must be 2D");
  for (int i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a == b) throw std::invalid_argument("zero-length polygon edge");
    if (a[0] != b[0] && a[1] != b[1])
      throw std::invalid_argument("polygon edge is not axis-parallel");
    const Point& c = v[(i + 2) % n];
    bool ab_vert = a[0] == b[0];
    bool bc_vert = b[0] == c[0];
    if (ab_vert == bc_vert) throw std::invalid_argument("polygon has a straight vertex");
  }
  // Simplicity: non-adjacent edges must not touch.
  auto edges_touch = [&](int i, int j) {
    Point a = v[i], b = v[(i + 1) % n], c = v[j], d = v[(j + 1) % n];
    auto between = [](Int lo, Int x, Int hi) {
      return std::min(lo, hi) <= x && x <= std::max(lo, hi);
    };
    if (a[0] == b[0] && c[0] == d[0])  // both vertical
      return a[0] == c[0] &&
             std::max(std::min(a[1], b[1]), std::min(c[1], d[1])) <=
                 std::min(std::max(a[1], b[1]), std::max(c[1], d[1]));
    if (a[1] == b[1] && c[1] == d[1])  // both horizontal
      return a[1] == c[1] &&
             std::max(std::min(a[0], b[0]), std::min(c[0], d[0])) <=
                 std::min(std::max(a[0], b[0]), std::max(c[0], d[0]));
    if (a[0] == b[0])  // vertical vs horizontal
      return between(c[0], a[0], d[0]) && between(a[1], c[1], b[1]);
    return between(a[0], c[0], b[0]) && between(c[1], a[1], d[1]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (edges_touch(i, j)) throw std::invalid_argument("polygon is not simple");
    }
  // Orthoconvexity: every horizontal and vertical line through the interior
  // of the region's span crosses exactly two perpendicular edges.
  for (int axis = 0; axis < 2; ++axis) {
    std::set<Int> coords;
    for (const Point& p : v) coords.insert(p[axis]);
    std::vector<Int> cs(coords.begin(), coords.end());
    for (std::size_t t = 0; t + 1 < cs.size(); ++t) {
      // test line at cs[t] + 1/2 (in doubled coordinates: 2*cs[t] + 1)
      Int line2 = 2 * cs[t] + 1;
      int crossings = 0;
      for (int i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (a[axis] == b[axis]) continue;  // parallel to the test line
        Int lo = 2 * std::min(a[axis], b[axis]), hi = 2 * std::max(a[axis], b[axis]);
        if (lo < line2 && line2 < hi) ++crossings;
      }
      if (crossings > 2) return false;
    }
  }
  return true;
}

// DFS over row-interval encodings of orthoconvex polyominoes inside the cell
// box [cx0, cx1] x [cy0, cy1] (inclusive cell coordinates) with at most
// max_reflex inner corners (kOrthoUnbounded for no bound). Calls visit(shape)
// for each; visit returns false to abort the enumeration.
template <typename Visitor>
inline void enumerate_ortho_rows(Int cx0, Int cx1, Int cy0, Int cy1, int max_reflex,
                                 Visitor&& visit) {
  if (cx1 < cx0 || cy1 < cy0) return;
  OrthoRows shape;
  bool aborted = false;
  // phase 0: left border still in its non-increasing prefix / right border in
  // its non-decreasing prefix; phase 1: the direction has committed.
  auto rec = [&](auto&& self, Int y, Int l, Int h, int phl, int phr, int reflex) -> void {
    if (aborted) return;
    shape.rows.emplace_back(l, h);
    if (!visit(std::as_const(shape))) {
      aborted = true;
      shape.rows.pop_back();
      return;
    }
    if (y < cy1) {
      for (Int l2 = cx0; l2 <= cx1 && !aborted; ++l2) {
        if (l2 > h) break;  // adjacent rows must share a cell column
        int nphl = phl;
        if (l2 > l) nphl = 1;
        else if (l2 < l && phl == 1) continue;
        for (Int h2 = std::max(l2, l); h2 <= cx1 && !aborted; ++h2) {
          int nphr = phr;
          if (h2 < h) nphr = 1;
          else if (h2 > h && phr == 1) continue;
          int r2 = reflex + detail::junction_reflex(l, h, l2, h2);
          if (max_reflex != kOrthoUnbounded && r2 > max_reflex) continue;
          self(self, y + 1, l2, h2, nphl, nphr, r2);
        }
      }
    }
    shape.rows.pop_back();
  };
  for (Int y = cy0; y <= cy1 && !aborted; ++y) {
    shape.y0 = y;
    for (Int l = cx0; l <= cx1 && !aborted; ++l)
      for (Int h = l; h <= cx1 && !aborted; ++h) rec(rec, y, l, h, 0, 0, 0);
  }
}

// Enumerates the orthoconvex polygons with corners at lattice points of the
// box (a 2D grid of points); maxInnerCorners = kOrthoUnbounded for all.
// The box side cap bounds the search space; beyond it the call throws.
inline std::vector<RectilinearPolygon> enumerate_orthoconvex(
    const GridSpec& box, int max_inner_corners, const OrthoEnumCaps& caps = {}) {
  if (box.d() != 2) throw std::invalid_argument("enumerate_orthoconvex requires a 2D box");
  Int side = std::max(box.dims[0], box.dims[1]);
  Int cap = (max_inner_corners != kOrthoUnbounded && max_inner_corners <= 2)
                ? caps.bounded_side
                : caps.unbounded_side;
  if (side > cap)
    throw InstanceTooLarge("orthoconvex enumeration box side " + std::to_string(side) +
                           " exceeds cap " + std::to_string(cap));
  std::vector<RectilinearPolygon> out;
  enumerate_ortho_rows(1, box.dims[0] - 1, 1, box.dims[1] - 1, max_inner_corners,
                       [&](const OrthoRows& rows) {
                         out.push_back(ortho_rows_to_polygon(rows));
                         return true;
                       });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Points of S at a given height, precomputed once: S must be sorted by (y, x).
struct HeightSlices {
  std::map<Int, std::vector<Int>> xs_by_y;
  Int min_y = 0, max_y = 0;
  explicit HeightSlices(const std::vector<Point>& s) {
    for (const auto& p : s) xs_by_y[p[1]].push_back(p[0]);
    for (auto& [y, xs] : xs_by_y) std::sort(xs.begin(), xs.end());
    if (!xs_by_y.empty()) {
      min_y = xs_by_y.begin()->first;
      max_y = xs_by_y.rbegin()->first;
    }
  }
  // All points at height y lie on the boundary given the occupied cell
  // intervals below ([l0,h0]) and above ([l1,h1]) the lattice line at y;
  // an empty interval is encoded l > h. A point is on the boundary iff 1..3
  // of its four incident cells are occupied.
  bool satisfied(Int y, Int l0, Int h0, Int l1, Int h1) const {
    auto it = xs_by_y.find(y);
    if (it == xs_by_y.end()) return true;
    for (Int x : it->second) {
      int occ = (l0 <= x - 1 && x - 1 <= h0) + (l0 <= x && x <= h0) +
                (l1 <= x - 1 && x - 1 <= h1) + (l1 <= x && x <= h1);
      if (occ == 0 || occ == 4) return false;
    }
    return true;
  }
};

}  // namespace detail

// Decides whether some orthoconvex polygon with at most max_reflex inner
// corners and corners inside the given point box covers all of S on its
// boundary; returns a witness. Memoized on (row, interval, phases, reflex):
// once a row state fails, every path reaching it fails, because coverage
// obligations below the current junction are already enforced.
inline std::optional<OrthoRows> ortho_cover_search(Int px0, Int px1, Int py0, Int py1,
                                                   const std::vector<Point>& s,
                                                   int max_reflex) {
  const Int cx0 = px0, cx1 = px1 - 1, cy0 = py0, cy1 = py1 - 1;
  if (cx1 < cx0 || cy1 < cy0) return std::nullopt;
  detail::HeightSlices slices(s);
  if (!s.empty() && (slices.min_y < py0 || slices.max_y > py1)) return std::nullopt;
  std::set<std::tuple<Int, Int, Int, int, int, int>> failed;
  std::vector<std::pair<Int, Int>> stack;

  auto rec = [&](auto&& self, Int y, Int l, Int h, int phl, int phr, int reflex) -> bool {
    auto key = std::make_tuple(y, l, h, phl, phr, max_reflex == kOrthoUnbounded ? 0 : reflex);
    if (failed.count(key)) return false;
    stack.emplace_back(l, h);
    // Closing here: the junction above row y borders empty space.
    bool ok = slices.satisfied(y + 1, l, h, 1, 0) && (s.empty() || slices.max_y <= y + 1);
    if (!ok && y < cy1) {
      for (Int l2 = cx0; l2 <= h && !ok; ++l2) {
        int nphl = phl;
        if (l2 > l) nphl = 1;
        else if (l2 < l && phl == 1) continue;
        for (Int h2 = std::max(l2, l); h2 <= cx1 && !ok; ++h2) {
          int nphr = phr;
          if (h2 < h) nphr = 1;
          else if (h2 > h && phr == 1) continue;
          int r2 = reflex + detail::junction_reflex(l, h, l2, h2);
          if (max_reflex != kOrthoUnbounded && r2 > max_reflex) continue;
          if (!slices.satisfied(y + 1, l, h, l2, h2)) continue;
          ok = self(self, y + 1, l2, h2, nphl, nphr, r2);
        }
      }
    }
    if (!ok) {
      stack.pop_back();
      failed.insert(key);
    }
    return ok;
  };

  for (Int y = cy0; y <= cy1; ++y) {
    if (!s.empty() && y > slices.min_y) break;  // region must reach the lowest point
    for (Int l = cx0; l <= cx1; ++l)
      for (Int h = l; h <= cx1; ++h) {
        // Junction below the first row borders empty space.
        if (!slices.satisfied(y, 1, 0, l, h)) continue;
        stack.clear();
        if (rec(rec, y, l, h, 0, 0, 0)) {
          OrthoRows shape;
          shape.y0 = y;
          shape.rows = stack;
          return shape;
        }
      }
  }
  return std::nullopt;
}

// Largest weight of points of s that a single orthoconvex boundary with
// corners in the given point box can cover; unit weights when w is null, so
// the plain point count. Same row-interval encoding as ortho_cover_search,
// but scoring partial coverage instead of demanding all of it; unbounded
// inner corners only. Weights must be positive and align with s by index.
// When covered is supplied it receives the points of one maximizing curve,
// sorted.
inline Int ortho_max_coverage(Int px0, Int px1, Int py0, Int py1, const std::vector<Point>& s,
                              std::vector<Point>* covered = nullptr,
                              const std::vector<Int>* w = nullptr) {
  const Int cx0 = px0, cx1 = px1 - 1, cy0 = py0, cy1 = py1 - 1;
  if (covered) covered->clear();
  if (cx1 < cx0 || cy1 < cy0) return 0;
  const int W = int(cx1 - cx0 + 1), H = int(cy1 - cy0 + 1);
  // Per lattice height: sorted (x, weight) and a dense weight prefix sum.
  const int PW = W + 2;  // lattice xs per junction: px0 .. px1
  std::vector<std::vector<std::pair<Int, Int>>> xs(std::size_t(H + 1));
  std::vector<std::vector<Int>> pref(std::size_t(H + 1), std::vector<Int>(std::size_t(PW + 1), 0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Point& p = s[i];
    if (p[0] >= px0 && p[0] <= px1 && p[1] >= py0 && p[1] <= py1)
      xs[std::size_t(p[1] - py0)].push_back({p[0], w ? (*w)[i] : Int(1)});
  }
  for (int j = 0; j <= H; ++j) {
    std::sort(xs[std::size_t(j)].begin(), xs[std::size_t(j)].end());
    for (auto& xw : xs[std::size_t(j)]) pref[std::size_t(j)][std::size_t(xw.first - px0 + 1)] += xw.second;
    for (int i = 0; i < PW; ++i)
      pref[std::size_t(j)][std::size_t(i + 1)] += pref[std::size_t(j)][std::size_t(i)];
  }
  // Weight of points at height y with x <= v, clamped to the box.
  auto cnt_le = [&](Int y, Int v) -> Int {
    const auto& pr = pref[std::size_t(y - py0)];
    Int i = std::clamp<Int>(v - px0 + 1, 0, Int(PW));
    return pr[std::size_t(i)];
  };
  // Covered points at lattice height y between cell rows [l0,h0] below and
  // [l1,h1] above (empty encoded l > h): those with 1..3 occupied incident
  // cells. When both intervals are nonempty they overlap, so the uncovered
  // are the ones left of both, right of both, or strictly interior to both.
  auto count_at = [&](Int y, Int l0, Int h0, Int l1, Int h1) -> Int {
    Int total = cnt_le(y, px1);
    if (total == 0) return 0;
    Int lo, hi;       // union of the point shadows [l, h+1]
    Int il, ih;       // intersection of the strict interiors (l, h+1)
    if (l0 > h0 && l1 > h1) return 0;
    if (l0 > h0) {
      lo = l1, hi = h1 + 1;
      il = 1, ih = 0;
    } else if (l1 > h1) {
      lo = l0, hi = h0 + 1;
      il = 1, ih = 0;
    } else {
      lo = std::min(l0, l1), hi = std::max(h0, h1) + 1;
      il = std::max(l0, l1) + 1, ih = std::min(h0, h1);
    }
    Int outside = cnt_le(y, lo - 1) + (total - cnt_le(y, hi));
    Int interior = il > ih ? 0 : cnt_le(y, ih) - cnt_le(y, il - 1);
    return total - outside - interior;
  };
  auto emit_at = [&](Int y, Int l0, Int h0, Int l1, Int h1) {
    for (auto& xw : xs[std::size_t(y - py0)]) {
      Int x = xw.first;
      int occ = (l0 <= x - 1 && x - 1 <= h0) + (l0 <= x && x <= h0) +
                (l1 <= x - 1 && x - 1 <= h1) + (l1 <= x && x <= h1);
      if (occ >= 1 && occ <= 3) covered->push_back(pt(x, y));
    }
  };

  std::vector<Int> memo(std::size_t(H) * W * W * 4, -1);
  auto idx = [&](Int y, Int l, Int h, int phl, int phr) {
    return (((std::size_t(y - cy0) * std::size_t(W) + std::size_t(l - cx0)) * std::size_t(W) +
             std::size_t(h - cx0)) *
                2 +
            std::size_t(phl)) *
               2 +
           std::size_t(phr);
  };
  // Best additional coverage above cell row y occupying [l,h]; phl/phr flag
  // borders already past their turning point.
  auto go = [&](auto&& self, Int y, Int l, Int h, int phl, int phr) -> Int {
    std::size_t k = idx(y, l, h, phl, phr);
    if (memo[k] >= 0) return memo[k];
    Int best = count_at(y + 1, l, h, Int(1), Int(0));  // close the region here
    if (y < cy1) {
      for (Int l2 = cx0; l2 <= h; ++l2) {
        int nphl = phl;
        if (l2 > l)
          nphl = 1;
        else if (l2 < l && phl == 1)
          continue;
        for (Int h2 = std::max(l2, l); h2 <= cx1; ++h2) {
          int nphr = phr;
          if (h2 < h)
            nphr = 1;
          else if (h2 > h && phr == 1)
            continue;
          best = std::max(best, count_at(y + 1, l, h, l2, h2) +
                                    self(self, y + 1, l2, h2, nphl, nphr));
        }
      }
    }
    memo[k] = best;
    return best;
  };
  Int total_best = 0, by = cy0, bl = cx0, bh = cx0;
  for (Int y = cy0; y <= cy1; ++y)
    for (Int l = cx0; l <= cx1; ++l)
      for (Int h = l; h <= cx1; ++h) {
        Int v = count_at(y, Int(1), Int(0), l, h) + go(go, y, l, h, 0, 0);
        if (v > total_best) {
          total_best = v;
          by = y;
          bl = l;
          bh = h;
        }
      }
  if (covered && total_best > 0) {
    Int y = by, l = bl, h = bh;
    int phl = 0, phr = 0;
    emit_at(y, Int(1), Int(0), l, h);
    while (true) {
      Int need = memo[idx(y, l, h, phl, phr)];
      if (need == count_at(y + 1, l, h, Int(1), Int(0))) {
        emit_at(y + 1, l, h, Int(1), Int(0));
        break;
      }
      bool stepped = false;
      for (Int l2 = cx0; l2 <= h && !stepped; ++l2) {
        int nphl = phl;
        if (l2 > l)
          nphl = 1;
        else if (l2 < l && phl == 1)
          continue;
        for (Int h2 = std::max(l2, l); h2 <= cx1 && !stepped; ++h2) {
          int nphr = phr;
          if (h2 < h)
            nphr = 1;
          else if (h2 > h && phr == 1)
            continue;
          Int child = memo[idx(y + 1, l2, h2, nphl, nphr)];
          if (child < 0 || count_at(y + 1, l, h, l2, h2) + child != need) continue;
          emit_at(y + 1, l, h, l2, h2);
          y = y + 1;
          l = l2;
          h = h2;
          phl = nphl;
          phr = nphr;
          stepped = true;
        }
      }
      if (!stepped) break;
    }
    std::sort(covered->begin(), covered->end());
    covered->erase(std::unique(covered->begin(), covered->end()), covered->end());
  }
  return total_best;
}

// Axis grid line: axis is the fixed coordinate (0: vertical line x = offset,
// 1: horizontal line y = offset).
struct GridLine {
  int axis;
  Int offset;
  friend bool operator<(const GridLine& a, const GridLine& b) {
    return a.axis != b.axis ? a.axis < b.axis : a.offset < b.offset;
  }
  friend bool operator==(const GridLine& a, const GridLine& b) {
    return a.axis == b.axis && a.offset == b.offset;
  }
};

// Lattice lines carrying a non-degenerate edge segment of the polygon.
inline std::set<GridLine> grid_lines_hit(const RectilinearPolygon& poly) {
  std::set<GridLine> lines;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (a[0] == b[0] && a[1] != b[1]) lines.insert({0, a[0]});
    if (a[1] == b[1] && a[0] != b[0]) lines.insert({1, a[1]});
  }
  return lines;
}

inline std::set<GridLine> grid_lines_hit(const std::vector<RectilinearPolygon>& curves) {
  std::set<GridLine> lines;
  for (const auto& c : curves) {
    auto l = grid_lines_hit(c);
    lines.insert(l.begin(), l.end());
  }
  return lines;
}

// Grid points covered by no curve but lying on a hit vertical line and a hit
// horizontal line.
inline std::vector<Point> exposed_points(const std::vector<RectilinearPolygon>& curves,
                                         const PointSet& grid) {
  if (grid.d != 2) throw std::invalid_argument("exposed_points requires a 2D grid");
  std::set<Int> vert, horiz;
  for (const GridLine& l : grid_lines_hit(curves))
    (l.axis == 0 ? vert : horiz).insert(l.offset);
  std::set<Point> covered;
  for (const auto& c : curves) {
    auto tr = polygon_trace(c);
    covered.insert(tr.begin(), tr.end());
  }
  std::vector<Point> out;
  for (const Point& p : grid.points)
    if (vert.count(p[0]) && horiz.count(p[1]) && !covered.count(p)) out.push_back(p);
  return out;
}

// Each curve covers at least one grid point covered by no other curve.
inline bool is_good_sequence(const std::vector<RectilinearPolygon>& curves,
                             const PointSet& grid) {
  std::vector<std::vector<Point>> traces;
  traces.reserve(curves.size());
  for (const auto& c : curves) {
    auto tr = polygon_trace(c);
    std::vector<Point> on_grid;
    for (const auto& p : tr)
      if (grid.contains(p)) on_grid.push_back(p);
    traces.push_back(std::move(on_grid));
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    bool has_private = false;
    for (const Point& p : traces[i]) {
      bool elsewhere = false;
      for (std::size_t j = 0; j < curves.size() && !elsewhere; ++j)
        if (j != i && std::binary_search(traces[j].begin(), traces[j].end(), p))
          elsewhere = true;
      if (!elsewhere) {
        has_private = true;
        break;
      }
    }
    if (!has_private) return false;
  }
  return true;
}

}  // namespace gridcover
