#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridcover/coverable.hpp"
#include "gridcover/family.hpp"
#include "gridcover/orthoconvex.hpp"
#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"

namespace gridcover {

// Segment membership in any dimension: p on [a,b].
inline bool on_segment_nd(const Point& p, const Point& a, const Point& b) {
  if (!collinear(a, b, p)) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < std::min(a[i], b[i]) || p[i] > std::max(a[i], b[i])) return false;
  return true;
}

// Exact membership of a point on a curve's witness object. The family is
// needed for translation witnesses, whose geometry lives in the family.
inline bool witness_covers(const CurveFamily& fam, const Witness& w, const Point& p) {
  struct V {
    const CurveFamily& fam;
    const Point& p;
    bool operator()(const LineWitness& l) const {
      if (l.base.size() != p.size()) return false;
      return collinear(l.base, add(l.base, l.dir), p);
    }
    bool operator()(const CircleWitness& c) const {
      if (p.size() != 2) return false;
      return sq_dist({c.cx, c.cy}, p) == c.r2;
    }
    bool operator()(const RectilinearPolygon& poly) const {
      if (p.size() != 2) return false;
      const auto& v = poly.vertices;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (on_segment(p, v[i], v[(i + 1) % v.size()])) return true;
      return false;
    }
    bool operator()(const ChainWitness& ch) const {
      if (ch.points.empty() || ch.points[0].size() != p.size()) return false;
      if (ch.points.size() == 1) return p == ch.points[0];
      for (std::size_t i = 0; i + 1 < ch.points.size(); ++i)
        if (on_segment_nd(p, ch.points[i], ch.points[i + 1])) return true;
      return false;
    }
    bool operator()(const TranslationWitness& t) const {
      if (p.size() != 2 || t.t.size() != 2) return false;
      return fam.offsets.contains(sub(p, t.t));
    }
    bool operator()(const BundleWitness& b) const {
      if (p.size() != 2) return false;
      for (const LineEq& l : b.lines)
        if (l.contains(p)) return true;
      return false;
    }
    bool operator()(const HullWitness& h) const {
      if (p.size() != 2 || h.polygon.empty()) return false;
      if (h.strict) {
        for (const Point& v : h.polygon)
          if (v == p) return true;
        return false;
      }
      if (h.polygon.size() == 1) return p == h.polygon[0];
      if (h.polygon.size() == 2) return on_segment(p, h.polygon[0], h.polygon[1]);
      for (std::size_t i = 0; i < h.polygon.size(); ++i)
        if (on_segment(p, h.polygon[i], h.polygon[(i + 1) % h.polygon.size()])) return true;
      return false;
    }
    bool operator()(const BoxWitness& b) const {
      if (p.size() != b.lo.size()) return false;
      bool on_face = false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < b.lo[i] || p[i] > b.hi[i]) return false;
        if (p[i] == b.lo[i] || p[i] == b.hi[i]) on_face = true;
      }
      return on_face;
    }
  };
  return std::visit(V{fam, p}, w);
}

inline bool curve_covers_point(const CurveFamily& fam, const Curve& c, const Point& p) {
  return witness_covers(fam, c.witness, p);
}

// Fills c.covers with exactly the host points lying on c's witness.
inline void compute_covers(const CurveFamily& fam, Curve& c, const PointSet& host) {
  c.covers.clear();
  for (std::size_t i = 0; i < host.points.size(); ++i)
    if (witness_covers(fam, c.witness, host.points[i])) c.covers.push_back(int(i));
}

namespace detail {

inline std::optional<std::vector<std::vector<Point>>> collinear_classes(
    const std::vector<Point>& s, int k) {
  std::vector<std::vector<Point>> classes;
  if (partition_into_collinear_rec(s, 0, classes, k)) return classes;
  return std::nullopt;
}

}  // namespace detail

// Synthesizes a geometric witness through the given nonempty coverable set.
// Deterministic: the result depends only on the sorted point set.
inline Witness make_witness(std::vector<Point> s, const CurveFamily& fam,
                            const OrthoEnumCaps& caps = {}) {
  if (s.empty()) throw std::invalid_argument("make_witness: empty point set");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  detail::check_family_dim(s, fam);
  const std::size_t d = s[0].size();
  switch (fam.kind) {
    case FamilyKind::line:
    case FamilyKind::skew_line: {
      if (!is_coverable(s, fam, caps))
        throw std::invalid_argument("make_witness: set not on one line");
      Point dir(d, 0);
      if (s.size() >= 2) {
        dir = primitive_direction(s[0], s[1]);
      } else if (fam.kind == FamilyKind::skew_line) {
        dir.assign(d, 1);  // any zero-free direction covers a singleton
      } else {
        dir[0] = 1;
      }
      return LineWitness{s[0], dir};
    }
    case FamilyKind::monotone: {
      if (!is_coverable(s, fam, caps))
        throw std::invalid_argument("make_witness: set is not a chain");
      return ChainWitness{s};
    }
    case FamilyKind::circle: {
      if (!is_coverable(s, fam, caps))
        throw std::invalid_argument("make_witness: set not concyclic");
      if (s.size() == 1)
        return CircleWitness{Rat(s[0][0]) + Rat(1), Rat(s[0][1]), Rat(1)};
      if (s.size() == 2) {
        RatPoint m{Rat(checked_add(s[0][0], s[1][0]), 2), Rat(checked_add(s[0][1], s[1][1]), 2)};
        return CircleWitness{m.x, m.y, sq_dist(m, s[0])};
      }
      int k = detail::noncollinear_third(s);
      RatPoint c = circumcenter(s[0], s[1], s[k]);
      return CircleWitness{c.x, c.y, sq_dist(c, s[0])};
    }
    case FamilyKind::fixed_radius_circle: {
      auto c = detail::find_fixed_radius_center(s, fam);
      if (!c)
        throw std::invalid_argument(
            "make_witness: no lattice center at the required radius");
      return CircleWitness{c->x, c->y, fam.radius2};
    }
    case FamilyKind::closed_convex: {
      if (!is_coverable(s, fam, caps))
        throw std::invalid_argument("make_witness: set has a strict-interior point");
      if (d == 2) return HullWitness{convex_hull(s), false};
      // Higher dimensions: the coverability certificate puts every point on a
      // face of the set's bounding box, so the box surface is a witness.
      Point lo = s[0], hi = s[0];
      for (const Point& p : s)
        for (std::size_t i = 0; i < d; ++i) {
          lo[i] = std::min(lo[i], p[i]);
          hi[i] = std::max(hi[i], p[i]);
        }
      return BoxWitness{lo, hi};
    }
    case FamilyKind::strictly_convex: {
      if (!is_coverable(s, fam, caps))
        throw std::invalid_argument("make_witness: set not in strictly convex position");
      return HullWitness{convex_hull(s), true};
    }
    case FamilyKind::orthoconvex: {
      Int minx = s[0][0], maxx = s[0][0], miny = s[0][1], maxy = s[0][1];
      for (const Point& p : s) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
      }
      if (detail::coverable_orthoconvex(s, fam, caps) == Coverability::unknown)
        throw CoverabilityUnknown("make_witness: orthoconvex instance beyond decision cap");
      auto rows = ortho_cover_search(minx - 1, maxx + 1, miny - 1, maxy + 1, s,
                                     fam.max_inner_corners);
      if (!rows)
        throw std::invalid_argument("make_witness: no orthoconvex boundary through set");
      return ortho_rows_to_polygon(*rows);
    }
    case FamilyKind::algebraic: {
      auto classes = detail::collinear_classes(s, fam.degree);
      if (!classes)
        throw std::invalid_argument(
            "make_witness: no partition into few collinear classes");
      BundleWitness b;
      for (const auto& cls : *classes) {
        if (cls.size() >= 2)
          b.lines.push_back(LineEq::through(cls[0], cls[1]));
        else
          b.lines.push_back(LineEq{0, 1, cls[0][1]});  // horizontal through the point
      }
      std::sort(b.lines.begin(), b.lines.end());
      return b;
    }
    case FamilyKind::fixed_shape: {
      std::optional<Point> best;
      for (const Point& o : fam.offsets.points) {
        Point t = sub(s[0], o);
        bool ok = true;
        for (const Point& p : s)
          if (!fam.offsets.contains(sub(p, t))) {
            ok = false;
            break;
          }
        if (ok && (!best || t < *best)) best = t;
      }
      if (!best)
        throw std::invalid_argument("make_witness: no translate contains the set");
      return TranslationWitness{*best};
    }
  }
  throw std::logic_error("unknown family kind");
}

// Builds a curve through the host points with the given indices; the coverage
// set is recomputed from the witness and may be a superset of the seed.
inline Curve make_curve(const std::vector<int>& idx, const CurveFamily& fam,
                        const PointSet& host, const OrthoEnumCaps& caps = {}) {
  std::vector<Point> s;
  s.reserve(idx.size());
  for (int i : idx) s.push_back(host.points.at(std::size_t(i)));
  Curve c;
  c.family = fam.kind;
  c.witness = make_witness(std::move(s), fam, caps);
  compute_covers(fam, c, host);
  return c;
}

// A curve cover of a point set. Coverage sets are index sets into pointset;
// bounds carry the solver's certificate (lower == upper == curves.size() for
// proven-optimal covers).
struct Cover {
  PointSet pointset;
  CurveFamily family;
  std::vector<Curve> curves;
  bool disjoint_on_p = false;
  bool optimal = false;
  std::string method;
  int lower = 0;
  int upper = 0;
};

struct BoundsReport {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::string method;

  bool consistent() const {
    if (lower > upper) return false;
    if (exact && (*exact < lower || *exact > upper)) return false;
    return true;
  }
};

inline bool covers_pairwise_disjoint(const std::vector<Curve>& curves) {
  std::vector<int> seen;
  for (const Curve& c : curves)
    for (int i : c.covers) seen.push_back(i);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

struct VerifyResult {
  bool ok = true;
  std::vector<Point> uncovered;
  std::vector<int> bad_curves;  // indices of curves failing witness checks
  std::vector<std::string> notes;

  void fail(int curve_idx, const std::string& msg) {
    ok = false;
    if (curve_idx >= 0) bad_curves.push_back(curve_idx);
    notes.push_back(msg);
  }
};

// Re-derives every curve's coverage from its witness and checks the union
// condition; diagnostic rather than throwing.
inline VerifyResult verify_cover(const Cover& cover, const OrthoEnumCaps& caps = {}) {
  VerifyResult r;
  const std::size_t n = cover.pointset.points.size();
  std::vector<char> hit(n, 0);
  for (std::size_t ci = 0; ci < cover.curves.size(); ++ci) {
    const Curve& c = cover.curves[ci];
    std::ostringstream tag;
    tag << "curve " << ci;
    if (c.covers.empty()) {
      r.fail(int(ci), tag.str() + ": empty coverage set");
      continue;
    }
    if (!std::is_sorted(c.covers.begin(), c.covers.end()) ||
        std::adjacent_find(c.covers.begin(), c.covers.end()) != c.covers.end()) {
      r.fail(int(ci), tag.str() + ": coverage indices not strictly increasing");
      continue;
    }
    if (c.covers.front() < 0 || std::size_t(c.covers.back()) >= n) {
      r.fail(int(ci), tag.str() + ": coverage index out of range");
      continue;
    }
    if (c.family != cover.family.kind)
      r.fail(int(ci), tag.str() + ": family tag differs from the cover's family");
    Curve recomputed = c;
    compute_covers(cover.family, recomputed, cover.pointset);
    if (recomputed.covers != c.covers) {
      r.fail(int(ci), tag.str() + ": witness mismatch (coverage set is not the witness trace)");
      continue;
    }
    std::vector<Point> pts;
    for (int i : c.covers) pts.push_back(cover.pointset.points[std::size_t(i)]);
    Coverability cv = coverable(pts, cover.family, caps);
    if (cv == Coverability::no)
      r.fail(int(ci), tag.str() + ": covered set fails the family predicate");
    else if (cv == Coverability::unknown)
      r.notes.push_back(tag.str() + ": family predicate undecided at this size (witness accepted)");
    for (int i : c.covers) hit[std::size_t(i)] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!hit[i]) r.uncovered.push_back(cover.pointset.points[i]);
  if (!r.uncovered.empty()) {
    r.ok = false;
    r.notes.push_back("uncovered points remain: " + std::to_string(r.uncovered.size()));
  }
  if (cover.disjoint_on_p && !covers_pairwise_disjoint(cover.curves))
    r.fail(-1, "cover is flagged disjoint but coverage sets overlap");
  return r;
}

}  // namespace gridcover
