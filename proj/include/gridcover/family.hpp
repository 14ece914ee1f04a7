#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridcover/orthoconvex.hpp"
#include "gridcover/point.hpp"
#include "gridcover/rational.hpp"

namespace gridcover {

enum class FamilyKind {
  line,
  skew_line,
  monotone,
  circle,
  fixed_radius_circle,
  closed_convex,
  strictly_convex,
  orthoconvex,
  algebraic,
  fixed_shape,
};

enum class CenterLattice { integer, half_integer };

// A curve family is the type parameter of covering problems: which point sets
// a single curve may cover.
struct CurveFamily {
  FamilyKind kind = FamilyKind::line;
  Rat radius2 = Rat(1);                                  // fixed_radius_circle
  CenterLattice lattice = CenterLattice::integer;        // fixed_radius_circle
  int max_inner_corners = kOrthoUnbounded;               // orthoconvex
  int degree = 1;                                        // algebraic
  PointSet offsets;                                      // fixed_shape, 2D

  static CurveFamily line() { return {FamilyKind::line}; }
  static CurveFamily skew_line() { return {FamilyKind::skew_line}; }
  static CurveFamily monotone() { return {FamilyKind::monotone}; }
  static CurveFamily circle() { return {FamilyKind::circle}; }
  static CurveFamily fixed_radius_circle(Rat r2, CenterLattice lat = CenterLattice::integer) {
    CurveFamily f{FamilyKind::fixed_radius_circle};
    if (r2 <= Rat(0)) throw std::invalid_argument("squared radius must be positive");
    f.radius2 = r2;
    f.lattice = lat;
    return f;
  }
  static CurveFamily closed_convex() { return {FamilyKind::closed_convex}; }
  static CurveFamily strictly_convex() { return {FamilyKind::strictly_convex}; }
  static CurveFamily orthoconvex(int max_corners = kOrthoUnbounded) {
    if (max_corners != kOrthoUnbounded && max_corners < 0)
      throw std::invalid_argument("negative inner-corner bound");
    CurveFamily f{FamilyKind::orthoconvex};
    f.max_inner_corners = max_corners;
    return f;
  }
  static CurveFamily algebraic(int deg) {
    if (deg < 1) throw std::invalid_argument("degree must be >= 1");
    CurveFamily f{FamilyKind::algebraic};
    f.degree = deg;
    return f;
  }
  static CurveFamily fixed_shape(PointSet offs) {
    if (offs.d != 2) throw std::invalid_argument("fixed shape offsets must be 2D");
    if (offs.points.empty()) throw std::invalid_argument("fixed shape needs offsets");
    CurveFamily f{FamilyKind::fixed_shape};
    f.offsets = std::move(offs);
    return f;
  }
};

inline std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::line: return "line";
    case FamilyKind::skew_line: return "skew-line";
    case FamilyKind::monotone: return "monotone";
    case FamilyKind::circle: return "circle";
    case FamilyKind::fixed_radius_circle: return "fixed-radius-circle";
    case FamilyKind::closed_convex: return "closed-convex";
    case FamilyKind::strictly_convex: return "strictly-convex";
    case FamilyKind::orthoconvex: return "orthoconvex";
    case FamilyKind::algebraic: return "algebraic";
    case FamilyKind::fixed_shape: return "fixed-shape";
  }
  throw std::logic_error("unknown family kind");
}

inline std::optional<FamilyKind> parse_family(const std::string& s) {
  for (FamilyKind k : {FamilyKind::line, FamilyKind::skew_line, FamilyKind::monotone,
                       FamilyKind::circle, FamilyKind::fixed_radius_circle,
                       FamilyKind::closed_convex, FamilyKind::strictly_convex,
                       FamilyKind::orthoconvex, FamilyKind::algebraic,
                       FamilyKind::fixed_shape})
    if (family_name(k) == s) return k;
  return std::nullopt;
}

// Line a*x + b*y = c with gcd(a,b) = 1 and (a, b) sign-canonical: a > 0, or
// a == 0 and b > 0.
struct LineEq {
  Int a = 0, b = 0, c = 0;

  static LineEq through(const Point& p, const Point& q) {
    if (p == q) throw std::invalid_argument("line through equal points");
    LineEq l;
    l.a = q[1] - p[1];
    l.b = p[0] - q[0];
    Int g = std::gcd(l.a < 0 ? -l.a : l.a, l.b < 0 ? -l.b : l.b);
    l.a /= g;
    l.b /= g;
    if (l.a < 0 || (l.a == 0 && l.b < 0)) {
      l.a = -l.a;
      l.b = -l.b;
    }
    l.c = checked_cast(Int128(l.a) * p[0] + Int128(l.b) * p[1]);
    return l;
  }
  bool contains(const Point& p) const {
    return Int128(a) * p[0] + Int128(b) * p[1] == c;
  }
  friend bool operator<(const LineEq& x, const LineEq& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }
  friend bool operator==(const LineEq& x, const LineEq& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// Witnesses: the geometric object behind a curve, family-specific.
struct LineWitness {
  Point base;  // any point of the line
  Point dir;   // primitive direction, lex-positive
};
struct CircleWitness {
  Rat cx, cy, r2;
};
struct ChainWitness {
  std::vector<Point> points;  // coordinate-wise non-decreasing
};
struct TranslationWitness {
  Point t;
};
struct BundleWitness {
  std::vector<LineEq> lines;
};
struct HullWitness {
  std::vector<Point> polygon;  // convex polygon (possibly degenerate), ccw
  // Strict witnesses cover only the polygon vertices: a strictly convex curve
  // through lattice points in convex position passes through no other lattice
  // point. Non-strict ones cover the whole boundary.
  bool strict = false;
};
struct BoxWitness {
  Point lo, hi;  // axis box; the curve is its boundary
};

using Witness = std::variant<LineWitness, CircleWitness, RectilinearPolygon,
                             ChainWitness, TranslationWitness, BundleWitness,
                             HullWitness, BoxWitness>;

// One curve in a cover: the family it belongs to, its geometric witness, and
// the sorted indices of host-set points it covers.
struct Curve {
  FamilyKind family = FamilyKind::line;
  Witness witness;
  std::vector<int> covers;
};

// Canonical primitive direction: divides out the gcd and fixes the sign so
// the first nonzero coordinate is positive.
inline Point primitive_direction(const Point& from, const Point& to) {
  Point d = sub(to, from);
  Int g = 0;
  for (Int v : d) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) throw std::invalid_argument("zero direction");
  for (Int& v : d) v /= g;
  for (Int v : d) {
    if (v > 0) break;
    if (v < 0) {
      for (Int& w : d) w = -w;
      break;
    }
  }
  return d;
}

}  // namespace gridcover
