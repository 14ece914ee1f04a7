#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gridcover/family.hpp"
#include "gridcover/orthoconvex.hpp"
#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"
#include "gridcover/rational.hpp"

namespace gridcover {

enum class Coverability { no, yes, unknown };

struct CoverabilityUnknown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RatPoint {
  Rat x, y;
  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

inline Rat sq_dist(const RatPoint& c, const Point& p) {
  return sqr(c.x - Rat(p[0])) + sqr(c.y - Rat(p[1]));
}

// Exact circumcenter of three non-collinear 2D points.
inline RatPoint circumcenter(const Point& a, const Point& b, const Point& c) {
  Int128 d = 2 * (Int128(b[0] - a[0]) * (c[1] - a[1]) - Int128(b[1] - a[1]) * (c[0] - a[0]));
  if (d == 0) throw std::invalid_argument("circumcenter of collinear points");
  Int128 nb = Int128(b[0]) * b[0] + Int128(b[1]) * b[1] - Int128(a[0]) * a[0] - Int128(a[1]) * a[1];
  Int128 nc = Int128(c[0]) * c[0] + Int128(c[1]) * c[1] - Int128(a[0]) * a[0] - Int128(a[1]) * a[1];
  Int128 ux = nb * (c[1] - a[1]) - nc * (b[1] - a[1]);
  Int128 uy = nc * (b[0] - a[0]) - nb * (c[0] - a[0]);
  return {Rat(checked_cast(ux), checked_cast(d)), Rat(checked_cast(uy), checked_cast(d))};
}

inline bool on_center_lattice(const RatPoint& c, CenterLattice lat) {
  if (lat == CenterLattice::integer) return c.x.is_integer() && c.y.is_integer();
  return (c.x * Rat(2)).is_integer() && (c.y * Rat(2)).is_integer();
}

namespace detail {

inline void check_family_dim(const std::vector<Point>& s, const CurveFamily& fam) {
  if (s.empty()) return;
  const std::size_t d = s[0].size();
  for (const auto& p : s)
    if (p.size() != d) throw std::invalid_argument("mixed dimensions in point set");
  switch (fam.kind) {
    case FamilyKind::circle:
    case FamilyKind::fixed_radius_circle:
    case FamilyKind::strictly_convex:
    case FamilyKind::orthoconvex:
    case FamilyKind::fixed_shape:
    case FamilyKind::algebraic:
      if (d != 2)
        throw std::invalid_argument(family_name(fam.kind) + " requires dimension 2");
      break;
    default:
      break;  // line, skew_line, monotone, closed_convex: any dimension
  }
}

inline bool all_collinear(const std::vector<Point>& s) {
  if (s.size() <= 2) return true;
  for (std::size_t i = 2; i < s.size(); ++i)
    if (!collinear(s[0], s[1], s[i])) return false;
  return true;
}

// Index of a point making a non-collinear triple with s[0], s[1], or -1.
inline int noncollinear_third(const std::vector<Point>& s) {
  for (std::size_t i = 2; i < s.size(); ++i)
    if (!collinear(s[0], s[1], s[i])) return int(i);
  return -1;
}

// Candidate centers at equal squared distance r2 from every point of s
// (|s| >= 2, not all collinear handled by caller via circumcenter).
inline std::vector<RatPoint> two_point_centers(const Point& p, const Point& q, const Rat& r2) {
  // Centers lie on the perpendicular bisector m + t*n with n = rot90(q - p);
  // |c - p|^2 = |h|^2 + t^2 |n|^2 where h = (q - p)/2 is orthogonal to n.
  RatPoint m{Rat(checked_add(p[0], q[0]), 2), Rat(checked_add(p[1], q[1]), 2)};
  Int nx = -(q[1] - p[1]), ny = q[0] - p[0];
  Rat n2 = Rat(checked_cast(Int128(nx) * nx + Int128(ny) * ny));
  Rat h2 = (sqr(Rat(q[0], 2) - Rat(p[0], 2)) + sqr(Rat(q[1], 2) - Rat(p[1], 2)));
  Rat t2 = (r2 - h2) / n2;
  if (t2 < Rat(0)) return {};
  Rat t;
  if (!rational_sqrt(t2, t)) return {};  // irrational offset: never on a lattice
  std::vector<RatPoint> out;
  out.push_back({m.x + t * Rat(nx), m.y + t * Rat(ny)});
  if (t != Rat(0)) out.push_back({m.x - t * Rat(nx), m.y - t * Rat(ny)});
  return out;
}

inline Coverability coverable_line(const std::vector<Point>& s, bool skew) {
  if (s.size() <= 1) return Coverability::yes;
  if (!all_collinear(s)) return Coverability::no;
  if (skew) {
    Point dir = primitive_direction(s[0], s[1]);
    for (Int v : dir)
      if (v == 0) return Coverability::no;
  }
  return Coverability::yes;
}

inline Coverability coverable_monotone(std::vector<Point> s) {
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!leq_coordwise(s[i], s[i + 1])) return Coverability::no;
  return Coverability::yes;
}

inline Coverability coverable_circle(const std::vector<Point>& s) {
  if (s.size() <= 2) return Coverability::yes;
  int k = noncollinear_third(s);
  if (k < 0) return Coverability::no;  // three or more collinear points
  const Point &a = s[0], &b = s[1], &c = s[k];
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (int(i) == k) continue;
    if (!concyclic4(a, b, c, s[i])) return Coverability::no;
  }
  return Coverability::yes;
}

// Lattice center with every point of s at squared distance r2, if one exists.
// For |s| >= 2 the center is pinned down by bisector equations; for a single
// point the representations of r2 as a sum of two squares are scanned.
inline std::optional<RatPoint> find_fixed_radius_center(const std::vector<Point>& s,
                                                        const CurveFamily& fam) {
  if (s.empty()) return std::nullopt;
  std::vector<RatPoint> centers;
  if (s.size() == 1) {
    // Need (dx, dy) on the center lattice with dx^2 + dy^2 = r2. Scale by 2
    // so both lattices become integral: u^2 + v^2 = 4*r2 with u, v integers
    // (even ones for the integer lattice).
    Rat n4 = fam.radius2 * Rat(4);
    if (!n4.is_integer()) return std::nullopt;
    Int target = n4.num;
    Int step = fam.lattice == CenterLattice::integer ? 2 : 1;
    for (Int u = 0; u * u <= target; u += step) {
      Int rem = target - u * u;
      Int v = Int(std::sqrt(double(rem)));
      while (v > 0 && v * v > rem) --v;
      while ((v + 1) * (v + 1) <= rem) ++v;
      if (v * v != rem) continue;
      if (fam.lattice == CenterLattice::integer && v % 2 != 0) continue;
      centers.push_back({Rat(s[0][0]) - Rat(u, 2), Rat(s[0][1]) - Rat(v, 2)});
      break;
    }
  } else {
    int k = s.size() >= 3 ? noncollinear_third(s) : -1;
    if (k >= 0) {
      centers.push_back(circumcenter(s[0], s[1], s[k]));
    } else if (s.size() >= 3) {
      return std::nullopt;  // collinear triple fits no circle
    } else {
      centers = two_point_centers(s[0], s[1], fam.radius2);
    }
  }
  for (const RatPoint& c : centers) {
    if (!on_center_lattice(c, fam.lattice)) continue;
    bool ok = true;
    for (const Point& p : s)
      if (sq_dist(c, p) != fam.radius2) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

inline Coverability coverable_fixed_radius(const std::vector<Point>& s, const CurveFamily& fam) {
  if (s.size() <= 1) return Coverability::yes;
  return find_fixed_radius_center(s, fam) ? Coverability::yes : Coverability::no;
}

inline Coverability coverable_closed_convex(const std::vector<Point>& s) {
  if (s.empty()) return Coverability::yes;
  const std::size_t d = s[0].size();
  if (d == 2) {
    PointSet ps(2, s);
    for (HullLabel l : hull_classify(ps))
      if (l == HullLabel::strict_interior) return Coverability::no;
    return Coverability::yes;
  }
  // Higher dimensions: certify via bounding-box faces. A point touching a
  // face of the set's bounding box has that face's hyperplane as a support,
  // so it is not interior to the hull. Sets where some point touches no face
  // are undecided (an exact interior test would need linear programming).
  Point lo = s[0], hi = s[0];
  for (const Point& p : s)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  for (const Point& p : s) {
    bool on_face = false;
    for (std::size_t i = 0; i < d && !on_face; ++i)
      on_face = p[i] == lo[i] || p[i] == hi[i];
    if (!on_face) return Coverability::unknown;
  }
  return Coverability::yes;
}

inline Coverability coverable_strictly_convex(const std::vector<Point>& s) {
  PointSet ps(2, s);
  for (HullLabel l : hull_classify(ps))
    if (l != HullLabel::vertex) return Coverability::no;
  return Coverability::yes;
}

inline Coverability coverable_orthoconvex(const std::vector<Point>& s, const CurveFamily& fam,
                                          const OrthoEnumCaps& caps) {
  if (s.empty()) return Coverability::yes;
  Int minx = s[0][0], maxx = s[0][0], miny = s[0][1], maxy = s[0][1];
  for (const Point& p : s) {
    minx = std::min(minx, p[0]);
    maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  }
  // Any covering curve can be clipped to the bounding box of S inflated by
  // one lattice unit; the clipped region is still orthoconvex, gains no
  // inner corners, and keeps S on its boundary. The decision cap applies to
  // the bounding box of S itself; the inflation is an internal detail.
  Int side = std::max(maxx - minx, maxy - miny) + 1;
  Int cap = (fam.max_inner_corners != kOrthoUnbounded && fam.max_inner_corners <= 2)
                ? caps.bounded_side
                : caps.unbounded_side;
  if (side > cap) return Coverability::unknown;
  auto rows = ortho_cover_search(minx - 1, maxx + 1, miny - 1, maxy + 1, s,
                                 fam.max_inner_corners);
  return rows ? Coverability::yes : Coverability::no;
}

inline bool partition_into_collinear(const std::vector<Point>& s, int k);

inline Coverability coverable_algebraic(const std::vector<Point>& s, const CurveFamily& fam) {
  // Sufficient test only: degree-k curves include products of k lines, so a
  // partition into <= k collinear classes certifies coverability. Sets
  // without such a partition may still lie on some degree-k curve, so the
  // answer is unknown rather than no.
  if (s.size() <= std::size_t(2 * fam.degree)) return Coverability::yes;
  if (s.size() > 40) return Coverability::unknown;
  return partition_into_collinear(s, fam.degree) ? Coverability::yes : Coverability::unknown;
}

inline bool partition_into_collinear_rec(const std::vector<Point>& s, std::size_t i,
                                         std::vector<std::vector<Point>>& classes, int k) {
  if (i == s.size()) return true;
  // Index access only: recursion below can grow `classes` and reallocate.
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    auto& cls = classes[ci];
    if (cls.size() >= 2 && !collinear(cls[0], cls[1], s[i])) continue;
    cls.push_back(s[i]);
    if (partition_into_collinear_rec(s, i + 1, classes, k)) return true;
    classes[ci].pop_back();
  }
  if (int(classes.size()) < k) {
    classes.push_back({s[i]});
    if (partition_into_collinear_rec(s, i + 1, classes, k)) return true;
    classes.pop_back();
  }
  return false;
}

inline bool partition_into_collinear(const std::vector<Point>& s, int k) {
  std::vector<std::vector<Point>> classes;
  return partition_into_collinear_rec(s, 0, classes, k);
}

inline Coverability coverable_fixed_shape(const std::vector<Point>& s, const CurveFamily& fam) {
  if (s.empty()) return Coverability::yes;
  for (const Point& o : fam.offsets.points) {
    Point t = sub(s[0], o);
    bool ok = true;
    for (const Point& p : s)
      if (!fam.offsets.contains(sub(p, t))) {
        ok = false;
        break;
      }
    if (ok) return Coverability::yes;
  }
  return Coverability::no;
}

}  // namespace detail

// Tri-state coverability of a finite point set by one curve of the family.
// "unknown" arises only for orthoconvex queries beyond the enumeration cap
// and for algebraic sets where the collinear-partition certificate fails.
inline Coverability coverable(const std::vector<Point>& s, const CurveFamily& fam,
                              const OrthoEnumCaps& caps = {}) {
  detail::check_family_dim(s, fam);
  switch (fam.kind) {
    case FamilyKind::line: return detail::coverable_line(s, false);
    case FamilyKind::skew_line: return detail::coverable_line(s, true);
    case FamilyKind::monotone: return detail::coverable_monotone(s);
    case FamilyKind::circle: return detail::coverable_circle(s);
    case FamilyKind::fixed_radius_circle: return detail::coverable_fixed_radius(s, fam);
    case FamilyKind::closed_convex: return detail::coverable_closed_convex(s);
    case FamilyKind::strictly_convex: return detail::coverable_strictly_convex(s);
    case FamilyKind::orthoconvex: return detail::coverable_orthoconvex(s, fam, caps);
    case FamilyKind::algebraic: return detail::coverable_algebraic(s, fam);
    case FamilyKind::fixed_shape: return detail::coverable_fixed_shape(s, fam);
  }
  throw std::logic_error("unknown family kind");
}

// Boolean convenience wrapper; throws when the answer is genuinely unknown.
inline bool is_coverable(const std::vector<Point>& s, const CurveFamily& fam,
                         const OrthoEnumCaps& caps = {}) {
  switch (coverable(s, fam, caps)) {
    case Coverability::yes: return true;
    case Coverability::no: return false;
    default:
      throw CoverabilityUnknown("coverability undecided for " + family_name(fam.kind) +
                                " (instance beyond decision cap)");
  }
}

}  // namespace gridcover
