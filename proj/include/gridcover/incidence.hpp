#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "gridcover/cover.hpp"
#include "gridcover/family.hpp"
#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"
#include "gridcover/rational.hpp"

namespace gridcover {

struct LineSet {
  std::vector<LineEq> lines;

  void canonicalize() {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  }
  bool contains(const LineEq& l) const {
    return std::binary_search(lines.begin(), lines.end(), l);
  }
};

// n horizontal lines with n integer points each, chosen greedily so that no
// line outside the set ever collects a third point: x is accepted for row i
// unless (x, i) lies on a line through two accepted points of different rows.
inline std::pair<PointSet, LineSet> build_counterexample(Int n) {
  if (n < 2) throw std::invalid_argument("construction needs n >= 2");
  LineSet L;
  for (Int i = 1; i <= n; ++i) L.lines.push_back(LineEq{0, 1, i});
  L.canonicalize();

  std::vector<Point> accepted;
  for (Int i = 1; i <= n; ++i) {
    // A line through accepted points q, r in distinct rows crosses row i in
    // exactly one point; collect the integer crossings as forbidden.
    std::unordered_set<Int> forbidden;
    for (std::size_t qi = 0; qi < accepted.size(); ++qi)
      for (std::size_t ri = qi + 1; ri < accepted.size(); ++ri) {
        const Point& q = accepted[qi];
        const Point& r = accepted[ri];
        if (q[1] == r[1]) continue;
        Int128 num = Int128(q[0]) * (r[1] - q[1]) + Int128(i - q[1]) * (r[0] - q[0]);
        Int128 den = r[1] - q[1];
        if (num % den != 0) continue;
        forbidden.insert(checked_cast(num / den));
      }
    Int placed = 0;
    for (Int x = 1; placed < n; ++x)
      if (!forbidden.count(x)) {
        accepted.push_back(Point{x, i});
        ++placed;
      }
  }
  return {PointSet(2, accepted), L};
}

// True iff every line carrying three or more points of P belongs to L.
inline bool check_star_property(const PointSet& P, const LineSet& L) {
  if (P.d != 2) throw std::invalid_argument("star property is 2D");
  const auto& pts = P.points;
  std::map<LineEq, std::vector<int>> classes;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto& cls = classes[LineEq::through(pts[i], pts[j])];
      cls.push_back(int(i));
      cls.push_back(int(j));
    }
  for (auto& [line, members] : classes) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() >= 3 && !L.contains(line)) return false;
  }
  return true;
}

// Total number of (point, curve) membership pairs. Coverage lists must be
// strictly increasing and in range.
inline Int count_incidences(const PointSet& P, const std::vector<Curve>& curves) {
  Int total = 0;
  for (const Curve& c : curves) {
    for (std::size_t i = 0; i < c.covers.size(); ++i) {
      int v = c.covers[i];
      if (v < 0 || std::size_t(v) >= P.points.size() ||
          (i > 0 && c.covers[i - 1] >= v))
        throw std::invalid_argument("inconsistent coverage list");
    }
    total += Int(c.covers.size());
  }
  return total;
}

struct IncidenceInstance {
  PointSet points;
  std::vector<Curve> curves;
  Int incidences = 0;
};

namespace detail {

inline Witness translate_witness(const Witness& w, const Point& t) {
  struct V {
    const Point& t;
    Witness operator()(const LineWitness& l) const {
      return LineWitness{add(l.base, t), l.dir};
    }
    Witness operator()(const CircleWitness& c) const {
      return CircleWitness{c.cx + Rat(t[0]), c.cy + Rat(t[1]), c.r2};
    }
    Witness operator()(const RectilinearPolygon& p) const {
      RectilinearPolygon out = p;
      for (Point& v : out.vertices) v = add(v, t);
      return out;
    }
    Witness operator()(const ChainWitness& c) const {
      ChainWitness out = c;
      for (Point& v : out.points) v = add(v, t);
      return out;
    }
    Witness operator()(const TranslationWitness& tr) const {
      return TranslationWitness{add(tr.t, t)};
    }
    Witness operator()(const BundleWitness& b) const {
      BundleWitness out = b;
      for (LineEq& l : out.lines)
        l.c = checked_cast(Int128(l.c) + Int128(l.a) * t[0] + Int128(l.b) * t[1]);
      return out;
    }
    Witness operator()(const HullWitness& h) const {
      HullWitness out = h;
      for (Point& v : out.polygon) v = add(v, t);
      return out;
    }
    Witness operator()(const BoxWitness& b) const {
      return BoxWitness{add(b.lo, t), add(b.hi, t)};
    }
  };
  return std::visit(V{t}, w);
}

}  // namespace detail

// Translate both the covering curves and the grid by every grid vector: the
// Minkowski-doubled point set with |S| * n^2 curves carries at least n^4
// incidences, because each original incidence reappears once per translate.
inline IncidenceInstance blow_up(const std::vector<Curve>& S, Int n,
                                 const CurveFamily& fam) {
  PointSet grid = grid_points(GridSpec({n, n}));
  {
    std::vector<char> covered(grid.points.size(), 0);
    for (const Curve& c : S)
      for (int v : c.covers) {
        if (v < 0 || std::size_t(v) >= grid.points.size())
          throw std::invalid_argument("coverage index out of range");
        covered[std::size_t(v)] = 1;
      }
    for (char f : covered)
      if (!f) throw std::invalid_argument("input curves do not cover the grid");
  }
  IncidenceInstance inst;
  std::vector<Point> doubled;
  doubled.reserve(std::size_t((2 * n - 1) * (2 * n - 1)));
  for (Int x = 2; x <= 2 * n; ++x)
    for (Int y = 2; y <= 2 * n; ++y) doubled.push_back(Point{x, y});
  inst.points = PointSet(2, std::move(doubled));

  for (const Curve& c : S)
    for (const Point& t : grid.points) {
      Curve tc;
      tc.family = c.family;
      tc.witness = detail::translate_witness(c.witness, t);
      compute_covers(fam, tc, inst.points);
      inst.curves.push_back(std::move(tc));
    }
  inst.incidences = count_incidences(inst.points, inst.curves);
  return inst;
}

struct FreedomReport {
  bool ok = false;
  Int max_pair_intersection = 0;  // largest |trace_i and trace_j|, i != j
  Int max_through = 0;            // most curves through any k common points
  bool sampled = false;
};

// Checks the two freedom conditions on the instance: trace pairs share at
// most k points, and any k points lie on at most s curves. Subset counting
// walks k-subsets of traces only (subsets on no curve are trivially fine);
// beyond the work cap it samples curve pairs and is labeled as such.
inline FreedomReport check_freedom(const std::vector<Curve>& curves, int k, int s,
                                   std::size_t work_cap = 4000000) {
  if (k < 1 || s < 0) throw std::invalid_argument("need k >= 1, s >= 0");
  FreedomReport rep;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(curves[i].covers.begin(), curves[i].covers.end(),
                            curves[j].covers.begin(), curves[j].covers.end(),
                            std::back_inserter(common));
      rep.max_pair_intersection = std::max(rep.max_pair_intersection, Int(common.size()));
    }

  auto choose = [](std::size_t a, int b) {
    double v = 1;
    for (int i = 0; i < b; ++i) v *= double(a - std::size_t(i)) / (i + 1);
    return v;
  };
  double subsets = 0;
  for (const Curve& c : curves)
    if (int(c.covers.size()) >= k) subsets += choose(c.covers.size(), k);
  if (subsets > double(work_cap)) {
    rep.sampled = true;
    // Sampled fallback: pairwise data only; the subset condition is reported
    // from curve pairs (a k-subset on >= 2 curves lies in some pairwise
    // intersection of size >= k).
    rep.max_through = rep.max_pair_intersection >= Int(k) ? 2 : 1;
    rep.ok = rep.max_pair_intersection <= Int(k) && rep.max_through <= Int(s);
    return rep;
  }
  std::map<std::vector<int>, Int> through;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (const Curve& c : curves) {
    const auto& cov = c.covers;
    if (int(cov.size()) < k) continue;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[std::size_t(i)] = i;
    while (true) {
      for (int i = 0; i < k; ++i) subset[std::size_t(i)] = cov[std::size_t(pick[std::size_t(i)])];
      rep.max_through = std::max(rep.max_through, ++through[subset]);
      int pos = k - 1;
      while (pos >= 0 && pick[std::size_t(pos)] == int(cov.size()) - k + pos) --pos;
      if (pos < 0) break;
      ++pick[std::size_t(pos)];
      for (int i = pos + 1; i < k; ++i) pick[std::size_t(i)] = pick[std::size_t(i - 1)] + 1;
    }
  }
  if (curves.empty()) rep.max_through = 0;
  rep.ok = rep.max_pair_intersection <= Int(k) && rep.max_through <= Int(s);
  return rep;
}

enum class BoundStyle { pach_sharir, circle_conjecture };

// Dominant term of the incidence bound, approximated as a rational with
// denominator 10^6: (mn)^(2/3) + m + n, with a log^c(mn) factor on the first
// term for the conjectured circle bound.
inline Rat bound_diagnostic(Int m, Int n, BoundStyle style, int c = 0) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
  double main = std::cbrt(double(m) * double(m)) * std::cbrt(double(n) * double(n));
  if (style == BoundStyle::circle_conjecture && c > 0)
    main *= std::pow(std::log(double(m) * double(n)), c);
  double value = main + double(m) + double(n);
  return Rat(Int(std::llround(value * 1e6)), 1000000);
}

inline Rat incidence_ratio(Int incidences, Int m, Int n, BoundStyle style, int c = 0) {
  return Rat(incidences) / bound_diagnostic(m, n, style, c);
}

}  // namespace gridcover
