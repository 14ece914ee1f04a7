#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "gridcover/cover.hpp"
#include "gridcover/coverable.hpp"
#include "gridcover/family.hpp"
#include "gridcover/orthoconvex.hpp"
#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"

namespace gridcover {

// Per-family instance-size caps for candidate enumeration. Pair grouping is
// quadratic, circle grouping cubic, and convex-position search output-bound,
// so the caps differ by orders of magnitude.
struct CandidateCaps {
  std::size_t line_points = 2000;
  std::size_t circle_points = 160;
  std::size_t fixed_radius_points = 100000;
  std::size_t convex_points = 40;
  std::size_t fixed_shape_points = 200000;
  std::size_t max_candidates = 2000000;
};

namespace detail {

// Canonical representative of the lattice line through p with direction dir:
// step back so the first nonzero direction coordinate lands in [0, dir[ax]).
inline Point line_anchor(const Point& p, const Point& dir) {
  std::size_t ax = 0;
  while (dir[ax] == 0) ++ax;
  Int q = floor_div(p[ax], dir[ax]);
  Point a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    a[i] = checked_sub(p[i], checked_mul(q, dir[i]));
  return a;
}

// Groups indices of P by the lattice line through each pair. Classes of
// size >= 2; every returned index list is sorted and duplicate-free.
inline std::vector<std::vector<int>> line_classes(const PointSet& P, bool skew) {
  std::map<std::pair<Point, Point>, std::vector<int>> classes;
  const auto& pts = P.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point dir = primitive_direction(pts[i], pts[j]);
      if (skew) {
        bool zero = false;
        for (Int v : dir) zero |= v == 0;
        if (zero) continue;
      }
      auto& members = classes[{dir, line_anchor(pts[i], dir)}];
      members.push_back(int(i));
      members.push_back(int(j));
    }
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// Strictly-convex-position subsets of P with >= 3 points, reported as CCW
// vertex index cycles starting at the lexicographically least member. Every
// such subset admits exactly one CCW order rooted at its least point, so each
// is visited once.
template <typename Visit>
inline void enumerate_convex_position(const PointSet& P, std::size_t max_out, Visit visit) {
  const auto& pts = P.points;
  const int n = int(pts.size());
  std::size_t emitted = 0;
  std::vector<int> order, chain;
  for (int v0 = 0; v0 < n; ++v0) {
    order.clear();
    for (int q = v0 + 1; q < n; ++q) order.push_back(q);
    const Point& base = pts[v0];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int o = orientation(base, pts[a], pts[b]);
      if (o != 0) return o > 0;  // smaller polar angle first
      // Same ray from base: nearer point first.
      Int128 da = 0, db = 0;
      for (std::size_t t = 0; t < base.size(); ++t) {
        da += Int128(pts[a][t] - base[t]) * (pts[a][t] - base[t]);
        db += Int128(pts[b][t] - base[t]) * (pts[b][t] - base[t]);
      }
      return da < db;
    });
    chain.assign(1, v0);
    // Iterative DFS over (position in order, chain); recursion depth is the
    // chain length, small in practice, so plain recursion via lambda.
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      if (emitted >= max_out)
        throw InstanceTooLarge("convex candidate enumeration exceeded the output cap");
      for (std::size_t t = from; t < order.size(); ++t) {
        int q = order[t];
        std::size_t k = chain.size();
        if (k >= 2 && orientation(pts[chain[k - 2]], pts[chain[k - 1]], pts[q]) <= 0)
          continue;
        chain.push_back(q);
        k = chain.size();
        if (k >= 3 && orientation(pts[chain[k - 2]], pts[chain[k - 1]], base) > 0 &&
            orientation(pts[chain[k - 1]], base, pts[chain[1]]) > 0) {
          ++emitted;
          visit(chain);
        }
        self(self, t + 1);
        chain.pop_back();
      }
    };
    dfs(dfs, 0);
  }
}

inline std::array<Int, 6> rat_circle_key(const RatPoint& c, const Rat& r2) {
  return {c.x.num, c.x.den, c.y.num, c.y.den, r2.num, r2.den};
}

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw InstanceTooLarge(std::string("candidate enumeration cap exceeded for ") + what);
}

}  // namespace detail

// Removes every candidate whose coverage set is a strict subset of another's;
// equal coverage sets must already be deduplicated. Keeps input order of the
// survivors.
inline void maximality_filter(std::vector<Curve>& cands, std::size_t n_points) {
  const std::size_t words = (n_points + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(cands.size(),
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (int v : cands[i].covers) bits[i][std::size_t(v) / 64] |= 1ull << (v % 64);
  std::vector<std::size_t> by_size(cands.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].covers.size() > cands[b].covers.size();
  });
  // kept_at[p]: kept candidates containing point p; a strict superset of c
  // must contain c's first point, so only that bucket is scanned.
  std::vector<std::vector<std::size_t>> kept_at(n_points);
  std::vector<char> drop(cands.size(), 0);
  for (std::size_t idx : by_size) {
    const auto& c = cands[idx].covers;
    bool dominated = false;
    for (std::size_t other : kept_at[std::size_t(c.front())]) {
      if (cands[other].covers.size() <= c.size()) continue;
      bool subset = true;
      for (std::size_t w = 0; w < words && subset; ++w)
        subset = (bits[idx][w] & ~bits[other][w]) == 0;
      if (subset) {
        dominated = true;
        break;
      }
    }
    if (dominated) {
      drop[idx] = 1;
    } else {
      for (int v : c) kept_at[std::size_t(v)].push_back(idx);
    }
  }
  std::vector<Curve> out;
  out.reserve(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!drop[i]) out.push_back(std::move(cands[i]));
  cands = std::move(out);
}

// All candidate curves on P for an enumerable family. Coverage sets are exact
// witness traces; with maximal=true the result is an inclusion antichain and
// every point that any curve of the family can cover appears somewhere.
// Monotone and algebraic families have no finite candidate pool and are
// rejected.
inline std::vector<Curve> enumerate_candidates(const PointSet& P, const CurveFamily& fam,
                                               bool maximal,
                                               const CandidateCaps& caps = {},
                                               const OrthoEnumCaps& ocaps = {}) {
  const auto& pts = P.points;
  std::vector<Curve> cands;
  auto push_exact = [&](std::vector<int> covers, Witness w) {
    Curve c;
    c.family = fam.kind;
    c.witness = std::move(w);
    c.covers = std::move(covers);
    cands.push_back(std::move(c));
  };
  auto push_seed = [&](const std::vector<int>& seed) {
    // Witness synthesized from the seed; coverage recomputed, so it may grow.
    cands.push_back(make_curve(seed, fam, P, ocaps));
  };

  switch (fam.kind) {
    case FamilyKind::monotone:
      throw std::invalid_argument(
          "monotone curves have no candidate pool; use the chain decomposition");
    case FamilyKind::algebraic:
      throw std::invalid_argument(
          "algebraic curves have no candidate pool; use the bundle construction");

    case FamilyKind::line:
    case FamilyKind::skew_line: {
      detail::require_cap(pts.size(), caps.line_points, "line");
      for (auto& cls : detail::line_classes(P, fam.kind == FamilyKind::skew_line))
        push_seed(cls);
      break;
    }

    case FamilyKind::circle: {
      detail::require_cap(pts.size(), caps.circle_points, "circle");
      std::map<std::array<Int, 6>, std::vector<int>> classes;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          for (std::size_t k = j + 1; k < pts.size(); ++k) {
            if (collinear(pts[i], pts[j], pts[k])) continue;
            RatPoint c = circumcenter(pts[i], pts[j], pts[k]);
            auto& m = classes[detail::rat_circle_key(c, sq_dist(c, pts[i]))];
            m.push_back(int(i));
            m.push_back(int(j));
            m.push_back(int(k));
          }
      for (auto& [key, m] : classes) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        push_exact(std::move(m),
                   CircleWitness{Rat(key[0], key[1]), Rat(key[2], key[3]), Rat(key[4], key[5])});
      }
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          push_seed({int(i), int(j)});
      break;
    }

    case FamilyKind::fixed_radius_circle: {
      detail::require_cap(pts.size(), caps.fixed_radius_points, "fixed-radius circle");
      Rat n4 = fam.radius2 * Rat(4);
      if (!n4.is_integer()) break;  // radius fits no lattice center at all
      Int target = n4.num;
      std::vector<std::pair<Int, Int>> reps;  // (u, v) = 2 * center offset
      for (Int u = 0; u * u <= target; ++u) {
        Int rem = target - u * u;
        Int v = Int(std::sqrt(double(rem)));
        while (v > 0 && v * v > rem) --v;
        while ((v + 1) * (v + 1) <= rem) ++v;
        if (v * v != rem) continue;
        for (Int su : {u, -u})
          for (Int sv : {v, -v}) {
            if (fam.lattice == CenterLattice::integer && (su % 2 != 0 || sv % 2 != 0))
              continue;
            reps.emplace_back(su, sv);
            if (sv == 0) break;
          }
        if (u == 0) continue;
      }
      std::sort(reps.begin(), reps.end());
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      std::map<std::array<Int, 4>, std::vector<int>> classes;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (auto [u, v] : reps) {
          Rat cx = Rat(pts[i][0]) - Rat(u, 2), cy = Rat(pts[i][1]) - Rat(v, 2);
          classes[{cx.num, cx.den, cy.num, cy.den}].push_back(int(i));
        }
      for (auto& [key, m] : classes) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        push_exact(std::move(m),
                   CircleWitness{Rat(key[0], key[1]), Rat(key[2], key[3]), fam.radius2});
      }
      break;
    }

    case FamilyKind::closed_convex:
    case FamilyKind::strictly_convex: {
      detail::require_cap(pts.size(), caps.convex_points, "convex");
      const bool strict = fam.kind == FamilyKind::strictly_convex;
      if (P.d != 2) {
        // Beyond the plane only whole-set coverability is decidable (via the
        // bounding-box face certificate), so the pool is the full set when it
        // lies on one surface, plus per-point fallbacks below.
        if (coverable(P.points, fam) != Coverability::yes)
          throw CoverabilityUnknown(
              "convex candidate pool is incomplete for this set in dimension >= 3");
        std::vector<int> all(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) all[i] = int(i);
        push_seed(all);
        break;
      }
      detail::enumerate_convex_position(P, caps.max_candidates, [&](const std::vector<int>& cyc) {
        std::vector<Point> poly;
        poly.reserve(cyc.size());
        for (int i : cyc) poly.push_back(pts[std::size_t(i)]);
        Curve c;
        c.family = fam.kind;
        c.witness = HullWitness{std::move(poly), strict};
        compute_covers(fam, c, P);
        cands.push_back(std::move(c));
      });
      if (strict) {
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j)
            push_seed({int(i), int(j)});
      } else {
        for (auto& cls : detail::line_classes(P, false)) push_seed(cls);
      }
      break;
    }

    case FamilyKind::orthoconvex: {
      Int minx = pts[0][0], maxx = pts[0][0], miny = pts[0][1], maxy = pts[0][1];
      for (const Point& p : pts) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
      }
      // Enumerate over the bounding box inflated by one unit on each side;
      // enumerate_orthoconvex enforces its own box-side cap.
      Int w = maxx - minx + 3, h = maxy - miny + 3;
      GridSpec box{std::vector<Int>{w, h}};
      for (RectilinearPolygon poly :
           enumerate_orthoconvex(box, fam.max_inner_corners, ocaps)) {
        for (Point& v : poly.vertices) {
          v[0] += minx - 2;  // box coordinates start at (1,1); shift to bbox-1
          v[1] += miny - 2;
        }
        Curve c;
        c.family = fam.kind;
        c.witness = poly;
        compute_covers(fam, c, P);
        if (!c.covers.empty()) cands.push_back(std::move(c));
        if (cands.size() > caps.max_candidates)
          throw InstanceTooLarge("orthoconvex candidate enumeration exceeded the output cap");
      }
      break;
    }

    case FamilyKind::fixed_shape: {
      detail::require_cap(pts.size(), caps.fixed_shape_points, "fixed shape");
      std::map<Point, std::vector<int>> classes;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (const Point& o : fam.offsets.points)
          classes[sub(pts[i], o)].push_back(int(i));
      for (auto& [t, m] : classes) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        push_exact(std::move(m), TranslationWitness{t});
      }
      break;
    }
  }

  // Singleton fallbacks for points no candidate reaches (and the 1-point set).
  {
    std::vector<char> covered(pts.size(), 0);
    for (const Curve& c : cands)
      for (int i : c.covers) covered[std::size_t(i)] = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (covered[i]) continue;
      try {
        push_seed({int(i)});
      } catch (const std::invalid_argument&) {
        // Family admits no singleton here (e.g. unrepresentable fixed radius);
        // the point stays uncoverable and solvers report that honestly.
      }
    }
  }

  if (cands.size() > caps.max_candidates)
    throw InstanceTooLarge("candidate enumeration exceeded the output cap");

  // Deduplicate by coverage set, keeping the first witness.
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Curve& a, const Curve& b) { return a.covers < b.covers; });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Curve& a, const Curve& b) { return a.covers == b.covers; }),
              cands.end());
  if (maximal && !cands.empty()) maximality_filter(cands, pts.size());
  return cands;
}

}  // namespace gridcover
