#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "gridcover/candidates.hpp"
#include "gridcover/cover.hpp"
#include "gridcover/coverable.hpp"
#include "gridcover/monotone.hpp"
#include "gridcover/point.hpp"

namespace gridcover {

struct SolveOptions {
  std::optional<double> time_budget_sec;
  int threads = 1;
  enum class Route { automatic, partition, candidates };
  Route route = Route::automatic;
  OrthoEnumCaps ortho_caps{};
  CandidateCaps cand_caps{};
};

// Result of an exact solve: the best cover found (if any) plus the bound
// certificate. proven_optimal implies cover is present and lower == upper.
struct SolveResult {
  std::optional<Cover> cover;
  BoundsReport bounds;
  bool proven_optimal = false;
};

namespace detail {

struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;
  std::atomic<bool> expired_flag{false};

  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      at = std::chrono::steady_clock::now() +
           std::chrono::microseconds(std::int64_t(*seconds * 1e6));
  }
  explicit Deadline(std::optional<std::chrono::steady_clock::time_point> tp) : at(tp) {}
  bool expired() {
    if (!at) return false;
    if (expired_flag.load(std::memory_order_relaxed)) return true;
    if (std::chrono::steady_clock::now() >= *at) {
      expired_flag.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

inline Int ceil_div_int(Int a, Int b) { return (a + b - 1) / b; }

// Largest possible single-curve coverage on P, from the candidate pool when
// one is supplied, else from family-specific counting bounds. Only an upper
// bound on coverage is needed for valid lower bounds on the cover size.
inline Int max_coverage_bound(const PointSet& P, const CurveFamily& fam,
                              const std::vector<Curve>* cands) {
  if (cands && !cands->empty()) {
    std::size_t m = 0;
    for (const Curve& c : *cands) m = std::max(m, c.covers.size());
    return Int(m);
  }
  const Int n = Int(P.points.size());
  if (n == 0) return 1;
  switch (fam.kind) {
    case FamilyKind::line:
    case FamilyKind::skew_line:
      if (auto box = as_full_box(P)) {
        Int k = 0;
        for (Int ki : box->dims) k = std::max(k, ki);
        return k;  // a line meets an axis box in at most max side points
      }
      return n;
    case FamilyKind::monotone: {
      Point lo = P.points.front(), hi = P.points.front();
      for (const Point& p : P.points)
        for (std::size_t i = 0; i < p.size(); ++i) {
          lo[i] = std::min(lo[i], p[i]);
          hi[i] = std::max(hi[i], p[i]);
        }
      Int len = 1;
      for (std::size_t i = 0; i < lo.size(); ++i) len += hi[i] - lo[i];
      return std::min(n, len);  // a chain gains rank at every step
    }
    case FamilyKind::orthoconvex: {
      if (P.d != 2) return n;
      Point lo = P.points.front(), hi = P.points.front();
      for (const Point& p : P.points) {
        lo[0] = std::min(lo[0], p[0]);
        lo[1] = std::min(lo[1], p[1]);
        hi[0] = std::max(hi[0], p[0]);
        hi[1] = std::max(hi[1], p[1]);
      }
      Int w = hi[0] - lo[0] + 1, h = hi[1] - lo[1] + 1;
      // A rectilinear boundary inside a w x h box has at most the box
      // perimeter in lattice points.
      return std::min(n, std::max<Int>(1, 2 * (w + h) - 4));
    }
    case FamilyKind::fixed_shape:
      return std::min<Int>(n, Int(fam.offsets.points.size()));
    default:
      return n;
  }
}

}  // namespace detail

// Generic counting lower bound plus the family-specific grid bounds.
inline int lower_bound(const PointSet& P, const CurveFamily& fam,
                       const std::vector<Curve>* cands = nullptr) {
  if (P.points.empty()) return 0;
  const Int n = Int(P.points.size());
  // For the small-corner-budget orthoconvex families the reported bound is
  // the dedicated grid closed form below; the generic perimeter term can
  // exceed it on small grids and is kept only as an internal search prune.
  bool corner_budget = fam.kind == FamilyKind::orthoconvex &&
                       fam.max_inner_corners != kOrthoUnbounded &&
                       fam.max_inner_corners <= 2;
  Int lb = 1;
  if (cands || !corner_budget)
    lb = detail::ceil_div_int(n, detail::max_coverage_bound(P, fam, cands));
  if (auto box = as_full_box(P)) {
    const auto& k = box->dims;
    if (fam.kind == FamilyKind::closed_convex && box->d() == 2)
      lb = std::max(lb, detail::ceil_div_int(std::min(k[0], k[1]), 2));
    if (fam.kind == FamilyKind::orthoconvex && box->d() == 2 && k[0] == k[1]) {
      lb = std::max(lb, detail::ceil_div_int(k[0] + 1, 4));
      if (fam.max_inner_corners != kOrthoUnbounded) {
        if (fam.max_inner_corners <= 1)
          lb = std::max(lb, detail::ceil_div_int(2 * k[0], 5));
        else if (fam.max_inner_corners == 2)
          lb = std::max(lb, detail::ceil_div_int(2 * k[0], 7));
      }
    }
  }
  return int(lb);
}

// Greedy set cover over the candidate pool: repeatedly the candidate covering
// the most uncovered points, ties to the lexicographically smallest coverage
// set. Valid but not necessarily minimal.
inline Cover greedy_cover(const PointSet& P, const CurveFamily& fam,
                          const CandidateCaps& caps = {}, const OrthoEnumCaps& ocaps = {}) {
  Cover cover;
  cover.pointset = P;
  cover.family = fam;
  cover.method = "greedy";
  if (P.points.empty()) {
    cover.optimal = true;
    return cover;
  }
  std::vector<Curve> cands = enumerate_candidates(P, fam, true, caps, ocaps);
  std::vector<char> covered(P.points.size(), 0);
  std::size_t remaining = P.points.size();
  while (remaining > 0) {
    std::size_t best = cands.size(), best_gain = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      std::size_t gain = 0;
      for (int v : cands[i].covers) gain += !covered[std::size_t(v)];
      if (gain > best_gain) {  // lex-least wins ties: pool is sorted by covers
        best_gain = gain;
        best = i;
      }
    }
    if (best == cands.size())
      throw std::runtime_error("greedy cover: some point lies on no candidate curve");
    for (int v : cands[best].covers) {
      remaining -= !covered[std::size_t(v)];
      covered[std::size_t(v)] = 1;
    }
    cover.curves.push_back(cands[best]);
  }
  cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
  cover.lower = lower_bound(P, fam, &cands);
  cover.upper = int(cover.curves.size());
  return cover;
}

namespace detail {

// ---- candidate-based exact set cover (branch and bound) ----

struct SetCoverSearch {
  const PointSet& P;
  const std::vector<Curve>& cands;
  Deadline& deadline;
  std::size_t words;
  std::vector<std::vector<std::uint64_t>> bits;   // candidate masks
  std::vector<std::vector<int>> lists;            // per point: candidate ids
  Int maxcov = 1;
  std::vector<int> chosen, best;
  std::size_t best_size;
  bool timed_out = false;
  std::uint64_t nodes = 0;

  SetCoverSearch(const PointSet& p, const std::vector<Curve>& c, Deadline& dl,
                 std::size_t incumbent)
      : P(p), cands(c), deadline(dl), best_size(incumbent) {
    words = (P.points.size() + 63) / 64;
    bits.assign(cands.size(), std::vector<std::uint64_t>(words, 0));
    lists.assign(P.points.size(), {});
    for (std::size_t i = 0; i < cands.size(); ++i) {
      maxcov = std::max<Int>(maxcov, Int(cands[i].covers.size()));
      for (int v : cands[i].covers) {
        bits[i][std::size_t(v) / 64] |= 1ull << (v % 64);
        lists[std::size_t(v)].push_back(int(i));
      }
    }
  }

  void dfs(std::vector<std::uint64_t>& covered, std::size_t uncovered) {
    if (uncovered == 0) {
      best = chosen;  // strictly better than the incumbent by the prune below
      best_size = chosen.size();
      return;
    }
    if ((++nodes & 1023) == 0 && deadline.expired()) {
      timed_out = true;
      return;
    }
    if (chosen.size() + std::size_t(ceil_div_int(Int(uncovered), maxcov)) >= best_size)
      return;
    // Branch on the uncovered point with the fewest candidates.
    std::size_t pivot = P.points.size();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < P.points.size(); ++v) {
      if (covered[v / 64] >> (v % 64) & 1) continue;
      if (lists[v].size() < fewest) {
        fewest = lists[v].size();
        pivot = v;
      }
    }
    if (fewest == 0) return;  // a point no candidate covers
    for (int ci : lists[pivot]) {
      std::vector<std::uint64_t> nc(words);
      std::size_t nu = uncovered;
      for (std::size_t w = 0; w < words; ++w) {
        nc[w] = covered[w] | bits[std::size_t(ci)][w];
        nu -= std::size_t(__builtin_popcountll(nc[w] ^ covered[w]));
      }
      chosen.push_back(ci);
      dfs(nc, nu);
      chosen.pop_back();
      if (timed_out) return;
    }
  }
};

inline SolveResult solve_candidates(const PointSet& P, const CurveFamily& fam,
                                    const SolveOptions& opt, Deadline& deadline) {
  SolveResult res;
  std::vector<Curve> cands = enumerate_candidates(P, fam, true, opt.cand_caps, opt.ortho_caps);
  {
    std::vector<char> covered(P.points.size(), 0);
    for (const Curve& c : cands)
      for (int v : c.covers) covered[std::size_t(v)] = 1;
    for (std::size_t v = 0; v < covered.size(); ++v)
      if (!covered[v])
        throw std::runtime_error("no curve of the family passes through point index " +
                                 std::to_string(v));
  }
  // Greedy incumbent over the same pool seeds the branch and bound.
  std::vector<int> incumbent;
  {
    std::vector<char> covered(P.points.size(), 0);
    std::size_t remaining = P.points.size();
    while (remaining > 0) {
      std::size_t best = cands.size(), best_gain = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        std::size_t gain = 0;
        for (int v : cands[i].covers) gain += !covered[std::size_t(v)];
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      for (int v : cands[best].covers) {
        remaining -= !covered[std::size_t(v)];
        covered[std::size_t(v)] = 1;
      }
      incumbent.push_back(int(best));
    }
  }
  int lb = lower_bound(P, fam, &cands);
  if (int(incumbent.size()) <= lb) {
    // The greedy cover already meets the counting lower bound.
    Cover cover;
    cover.pointset = P;
    cover.family = fam;
    for (int ci : incumbent) cover.curves.push_back(cands[std::size_t(ci)]);
    std::sort(cover.curves.begin(), cover.curves.end(),
              [](const Curve& a, const Curve& b) { return a.covers < b.covers; });
    cover.method = "greedy cover meeting the counting lower bound";
    cover.optimal = true;
    cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
    cover.lower = cover.upper = int(incumbent.size());
    res.bounds = {cover.lower, cover.upper, cover.upper, cover.method};
    res.proven_optimal = true;
    res.cover = std::move(cover);
    return res;
  }

  SetCoverSearch search(P, cands, deadline, incumbent.size());
  std::vector<std::uint64_t> covered(search.words, 0);
  search.dfs(covered, P.points.size());

  Cover cover;
  cover.pointset = P;
  cover.family = fam;
  const std::vector<int>& pick = search.best.empty() ? incumbent : search.best;
  for (int ci : pick) cover.curves.push_back(cands[std::size_t(ci)]);
  std::sort(cover.curves.begin(), cover.curves.end(),
            [](const Curve& a, const Curve& b) { return a.covers < b.covers; });
  bool proven = !search.timed_out;
  std::ostringstream method;
  method << "set-cover branch and bound over " << cands.size() << " candidates";
  if (search.timed_out) method << " (budget exhausted)";
  cover.method = method.str();
  cover.optimal = proven;
  cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
  cover.lower = proven ? int(cover.curves.size()) : lb;
  cover.upper = int(cover.curves.size());
  res.bounds = {cover.lower, cover.upper,
                proven ? std::optional<int>(cover.upper) : std::nullopt, cover.method};
  res.proven_optimal = proven;
  res.cover = std::move(cover);
  return res;
}

// ---- partition backtracking (iterative deepening on the cover size) ----

struct PartitionSearch {
  const PointSet& P;
  const CurveFamily& fam;
  const OrthoEnumCaps& ocaps;
  Deadline* deadline = nullptr;           // per-level budget, set by run_level
  int m = 0;                              // group budget this level
  Int maxcov = 1;                         // capacity bound per group
  std::vector<std::vector<int>> groups;
  std::vector<int> assignment;            // point -> group or -1
  bool timed_out = false;
  std::uint64_t nodes = 0;
  // Coverability memo keyed by the flattened sorted point list. Infeasibility
  // is hereditary (supersets of an uncoverable set stay uncoverable), so
  // entries stay valid as groups grow and shrink.
  std::unordered_map<std::string, bool> memo;

  PartitionSearch(const PointSet& p, const CurveFamily& f, const OrthoEnumCaps& oc)
      : P(p), fam(f), ocaps(oc) {
    maxcov = max_coverage_bound(P, fam, nullptr);
  }

  bool group_feasible(const std::vector<int>& group, int pt) {
    if (Int(group.size()) + 1 > maxcov) return false;
    std::vector<int> idx(group);
    idx.push_back(pt);
    std::sort(idx.begin(), idx.end());
    // One byte per index when the host set is small enough.
    std::string key;
    if (P.points.size() <= 256) {
      key.resize(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) key[i] = char(idx[i]);
    } else {
      key.assign(reinterpret_cast<const char*>(idx.data()), idx.size() * sizeof(int));
    }
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(P.points[std::size_t(i)]);
    Coverability c = coverable(pts, fam, ocaps);
    if (c == Coverability::unknown)
      throw CoverabilityUnknown("partition solver: coverability undecided for a subset (" +
                                family_name(fam.kind) + ")");
    bool ok = c == Coverability::yes;
    if (memo.size() < (1u << 21)) memo.emplace(std::move(key), ok);
    return ok;
  }

  static Int cheb(const Point& a, const Point& b) {
    Int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
  }

  // Randomized greedy dives: grow maximal coverable groups around shuffled
  // seed points, nearest points first on alternate attempts. Dives only find
  // covers; impossibility proofs stay with the exhaustive pass.
  bool dive_maximal(std::mt19937_64& rng, bool near_first) {
    std::vector<int> todo(P.points.size());
    std::iota(todo.begin(), todo.end(), 0);
    std::shuffle(todo.begin(), todo.end(), rng);
    std::vector<std::vector<int>> built;
    for (int g = 0; g < m && !todo.empty(); ++g) {
      int seed = todo.front();
      if (near_first) {
        const Point& s = P.points[std::size_t(seed)];
        std::stable_sort(todo.begin() + 1, todo.end(), [&](int a, int b) {
          return cheb(P.points[std::size_t(a)], s) < cheb(P.points[std::size_t(b)], s);
        });
      }
      std::vector<int> grown{seed};
      std::vector<int> left;
      for (std::size_t i = 1; i < todo.size(); ++i) {
        // Feasible additions only shrink as the group grows, so one pass
        // yields a maximal coverable set for this order.
        if (group_feasible(grown, todo[i]))
          grown.push_back(todo[i]);
        else
          left.push_back(todo[i]);
      }
      built.push_back(std::move(grown));
      todo = std::move(left);
    }
    if (!todo.empty()) return false;
    groups = std::move(built);
    return true;
  }

  // Balanced flavor: seed all m groups far apart, then assign each point to
  // the nearest feasible group in one pass, so no group overshoots into a
  // shape that strands the remainder.
  bool dive_balanced(std::mt19937_64& rng) {
    const std::size_t n = P.points.size();
    if (int(n) < m) return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<int>> built;
    std::vector<char> seeded(n, 0);
    built.push_back({order[0]});
    seeded[std::size_t(order[0])] = 1;
    while (int(built.size()) < m) {  // farthest-point seeding
      int best = -1;
      Int best_d = -1;
      for (int v : order) {
        if (seeded[std::size_t(v)]) continue;
        Int d = std::numeric_limits<Int>::max();
        for (const auto& g : built)
          d = std::min(d, cheb(P.points[std::size_t(v)], P.points[std::size_t(g[0])]));
        if (d > best_d) {
          best_d = d;
          best = v;
        }
      }
      built.push_back({best});
      seeded[std::size_t(best)] = 1;
    }
    for (int v : order) {
      if (seeded[std::size_t(v)]) continue;
      int pick = -1;
      Int pick_d = std::numeric_limits<Int>::max();
      for (std::size_t g = 0; g < built.size(); ++g) {
        Int d = cheb(P.points[std::size_t(v)], P.points[std::size_t(built[g][0])]);
        if (d < pick_d && group_feasible(built[g], v)) {
          pick_d = d;
          pick = int(g);
        }
      }
      if (pick < 0) return false;
      built[std::size_t(pick)].push_back(v);
    }
    groups = std::move(built);
    return true;
  }

  bool dive_once(std::mt19937_64& rng, int attempt) {
    switch (attempt % 3) {
      case 0: return dive_maximal(rng, false);
      case 1: return dive_maximal(rng, true);
      default: return dive_balanced(rng);
    }
  }

  // Plane orthoconvex groups admit a graded objective: member count minus the
  // best single-curve coverage, zero exactly when the group is coverable.
  // uncov receives the group members off one maximizing curve.
  Int group_cost(const std::vector<int>& g, std::vector<int>* uncov) {
    if (uncov) uncov->clear();
    if (g.empty()) return 0;
    Int x0 = P.points[std::size_t(g[0])][0], x1 = x0;
    Int y0 = P.points[std::size_t(g[0])][1], y1 = y0;
    std::vector<Point> pts;
    pts.reserve(g.size());
    for (int i : g) {
      const Point& p = P.points[std::size_t(i)];
      x0 = std::min(x0, p[0]);
      x1 = std::max(x1, p[0]);
      y0 = std::min(y0, p[1]);
      y1 = std::max(y1, p[1]);
      pts.push_back(p);
    }
    std::vector<Point> cov;
    Int c = ortho_max_coverage(x0 - 1, x1 + 1, y0 - 1, y1 + 1, pts, uncov ? &cov : nullptr);
    if (uncov)
      for (int i : g)
        if (!std::binary_search(cov.begin(), cov.end(), P.points[std::size_t(i)]))
          uncov->push_back(i);
    return Int(g.size()) - c;
  }

  // Min-conflicts walk on that objective: repeatedly shift a random uncovered
  // point into the group that minimizes the new total cost. Plain moves stall
  // once a single straggler is left (relocating it just moves the conflict),
  // so non-improving steps escalate to swaps that trade the straggler for a
  // member of the target group. A short tabu on reversals keeps the plateau
  // walk from two-cycling. Short runs from varied starts beat one long run.
  bool dive_min_conflicts(std::mt19937_64& rng, int run, Deadline& dl) {
    const std::size_t n = P.points.size();
    if (int(n) < m || m <= 1) return false;
    std::vector<std::vector<int>> gs(static_cast<std::size_t>(m));
    if (run % 2 == 0) {
      // Greedy seeding: grow m maximal coverable groups over a shuffled
      // order, then drop each straggler into the group whose cost rises the
      // least. Starts the walk next to the plateau with few conflicts.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> left;
      for (int g = 0; g < m; ++g) {
        std::vector<int>& grown = gs[std::size_t(g)];
        for (int v : order) {
          if (grown.empty() || group_feasible(grown, v))
            grown.push_back(v);
          else
            left.push_back(v);
        }
        order = std::move(left);
        left.clear();
      }
      for (int v : order) {
        int pick = 0;
        Int pick_rise = std::numeric_limits<Int>::max();
        for (int g = 0; g < m; ++g) {
          auto& gg = gs[std::size_t(g)];
          Int before = group_cost(gg, nullptr);
          gg.push_back(v);
          Int rise = group_cost(gg, nullptr) - before;
          gg.pop_back();
          if (rise < pick_rise) {
            pick_rise = rise;
            pick = g;
          }
        }
        gs[std::size_t(pick)].push_back(v);
      }
    } else {
      for (std::size_t v = 0; v < n; ++v) gs[rng() % std::uint64_t(m)].push_back(int(v));
    }
    std::vector<Int> cost(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> uncov(static_cast<std::size_t>(m));
    Int total = 0;
    for (int g = 0; g < m; ++g) {
      cost[std::size_t(g)] = group_cost(gs[std::size_t(g)], &uncov[std::size_t(g)]);
      total += cost[std::size_t(g)];
    }
    // tabu[v] = (group v may not rejoin, move index the ban expires at)
    std::vector<std::pair<int, int>> tabu(n, {-1, 0});
    auto erase_from = [&](std::vector<int>& g, int v) {
      g.erase(std::find(g.begin(), g.end(), v));
    };
    for (int mv = 0; mv < 120 && total > 0; ++mv) {
      if ((mv & 3) == 0 && dl.expired()) return false;
      // Uncovered lists have cost[g] entries each, so a uniform draw over
      // their concatenation weights groups by conflict count.
      Int t = Int(rng() % std::uint64_t(total));
      int from = 0;
      while (t >= cost[std::size_t(from)]) t -= cost[std::size_t(from++)];
      int p = uncov[std::size_t(from)][std::size_t(t)];
      auto& gf = gs[std::size_t(from)];
      erase_from(gf, p);
      Int c_from = group_cost(gf, nullptr);
      int to = -1, swap_q = -1;
      Int best = std::numeric_limits<Int>::max();
      if (rng() % 16 == 0) {
        to = int(rng() % std::uint64_t(m - 1));
        if (to >= from) ++to;
      } else {
        int ties = 0;
        for (int h = 0; h < m; ++h) {
          if (h == from) continue;
          if (tabu[std::size_t(p)].first == h && tabu[std::size_t(p)].second > mv) continue;
          auto& gh = gs[std::size_t(h)];
          gh.push_back(p);
          Int nt = total - cost[std::size_t(from)] - cost[std::size_t(h)] + c_from +
                   group_cost(gh, nullptr);
          gh.pop_back();
          if (nt < best) {
            best = nt;
            to = h;
            ties = 1;
          } else if (nt == best && rng() % std::uint64_t(++ties) == 0) {
            to = h;
          }
        }
        if (best >= total) {
          // Plateau: look for a trade. p joins h while some q leaves h for
          // the donor group; both groups are re-scored exactly.
          for (int h = 0; h < m; ++h) {
            if (h == from) continue;
            auto cand = gs[std::size_t(h)];
            std::shuffle(cand.begin(), cand.end(), rng);
            if (cand.size() > 8) cand.resize(8);
            for (int q : cand) {
              if (tabu[std::size_t(q)].first == from && tabu[std::size_t(q)].second > mv)
                continue;
              auto gh2 = gs[std::size_t(h)];
              erase_from(gh2, q);
              gh2.push_back(p);
              auto gf2 = gf;
              gf2.push_back(q);
              Int nt = total - cost[std::size_t(from)] - cost[std::size_t(h)] +
                       group_cost(gf2, nullptr) + group_cost(gh2, nullptr);
              if (nt < best) {
                best = nt;
                to = h;
                swap_q = q;
              }
            }
          }
        }
        if (to < 0) {  // every target tabu-blocked: fall back to random
          to = int(rng() % std::uint64_t(m - 1));
          if (to >= from) ++to;
          swap_q = -1;
        }
      }
      gs[std::size_t(to)].push_back(p);
      tabu[std::size_t(p)] = {from, mv + 6};
      if (swap_q >= 0) {
        erase_from(gs[std::size_t(to)], swap_q);
        gf.push_back(swap_q);
        tabu[std::size_t(swap_q)] = {to, mv + 6};
      }
      total -= cost[std::size_t(from)] + cost[std::size_t(to)];
      cost[std::size_t(from)] = group_cost(gs[std::size_t(from)], &uncov[std::size_t(from)]);
      cost[std::size_t(to)] = group_cost(gs[std::size_t(to)], &uncov[std::size_t(to)]);
      total += cost[std::size_t(from)] + cost[std::size_t(to)];
    }
    if (total != 0) return false;
    groups.clear();
    for (auto& g : gs)
      if (!g.empty()) groups.push_back(std::move(g));
    return true;
  }

  bool dfs(std::size_t assigned) {
    if (assigned == P.points.size()) return true;
    if ((++nodes & 255) == 0 && deadline->expired()) {
      timed_out = true;
      return false;
    }
    // Capacity prune: every group covers at most maxcov points.
    {
      Int room = Int(m - int(groups.size())) * maxcov;
      for (const auto& g : groups) room += maxcov - Int(g.size());
      if (Int(P.points.size() - assigned) > room) return false;
    }
    // MRV: branch on the unassigned point with the fewest feasible placements.
    int pivot = -1;
    int fewest = std::numeric_limits<int>::max();
    std::vector<int> pivot_feasible;
    std::vector<int> feasible;
    for (std::size_t v = 0; v < P.points.size(); ++v) {
      if (assignment[v] >= 0) continue;
      feasible.clear();
      for (std::size_t g = 0; g < groups.size(); ++g)
        if (group_feasible(groups[g], int(v))) feasible.push_back(int(g));
      int count = int(feasible.size()) + (int(groups.size()) < m ? 1 : 0);
      if (count < fewest) {
        fewest = count;
        pivot = int(v);
        pivot_feasible = feasible;
        if (count == 0) return false;
      }
    }
    // Nearest group first: extending the group closest to the pivot tends to
    // keep groups compact, which is where covers live.
    std::stable_sort(pivot_feasible.begin(), pivot_feasible.end(), [&](int a, int b) {
      Int da = std::numeric_limits<Int>::max(), db = da;
      for (int v : groups[std::size_t(a)])
        da = std::min(da, cheb(P.points[std::size_t(pivot)], P.points[std::size_t(v)]));
      for (int v : groups[std::size_t(b)])
        db = std::min(db, cheb(P.points[std::size_t(pivot)], P.points[std::size_t(v)]));
      return da < db;
    });
    for (int g : pivot_feasible) {
      groups[std::size_t(g)].push_back(pivot);
      assignment[std::size_t(pivot)] = g;
      if (dfs(assigned + 1)) return true;
      assignment[std::size_t(pivot)] = -1;
      groups[std::size_t(g)].pop_back();
      if (timed_out) return false;
    }
    if (int(groups.size()) < m) {
      groups.push_back({pivot});
      assignment[std::size_t(pivot)] = int(groups.size()) - 1;
      if (dfs(assigned + 1)) return true;
      assignment[std::size_t(pivot)] = -1;
      groups.pop_back();
    }
    return false;
  }

  // Runs one deepening level. Returns: 1 found, 0 exhausted, -1 timed out.
  int run_level(int level, Deadline& dl) {
    m = level;
    deadline = &dl;
    groups.clear();
    assignment.assign(P.points.size(), -1);
    timed_out = false;
    // Dive phase first: cheap to try, and a hit settles the level without
    // touching the exhaustive tree. Capped at a slice of the level budget.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull + std::uint64_t(level));
    Deadline dive_dl(dl.at);
    if (dl.at) {
      auto now = std::chrono::steady_clock::now();
      dive_dl.at = now + (*dl.at - now) * 2 / 5;
    }
    bool graded = fam.kind == FamilyKind::orthoconvex &&
                  fam.max_inner_corners == kOrthoUnbounded && P.d == 2;
    int mc_runs = 0;
    for (int a = 0; a < 5000 && !dive_dl.expired(); ++a) {
      bool hit = graded && a % 2 == 0 ? dive_min_conflicts(rng, mc_runs++, dive_dl)
                                      : dive_once(rng, a);
      if (hit) return 1;
    }
    bool found = dfs(0);
    if (found) return 1;
    return timed_out ? -1 : 0;
  }
};

inline SolveResult solve_partition(const PointSet& P, const CurveFamily& fam,
                                   const SolveOptions& opt, Deadline& deadline) {
  SolveResult res;
  int proven_lb = std::max(lower_bound(P, fam, nullptr), 1);
  PartitionSearch search(P, fam, opt.ortho_caps);
  std::optional<std::vector<std::vector<int>>> solution;
  bool interrupted = false;
  int found_at = -1;
  for (int m = proven_lb; m <= int(P.points.size()); ++m) {
    if (deadline.expired()) {
      interrupted = true;
      break;
    }
    // Each level gets half the remaining budget, so an exhaustion that stalls
    // still leaves time to find covers at higher levels.
    Deadline level_dl(deadline.at);
    if (deadline.at) {
      auto now = std::chrono::steady_clock::now();
      level_dl.at = now + (*deadline.at - now) / 2;
    }
    int r = search.run_level(m, level_dl);
    if (r == 1) {
      solution = search.groups;
      found_at = int(solution->size());  // a dive may use fewer groups than the level
      break;
    }
    if (r == 0) {
      if (!interrupted) proven_lb = m + 1;  // level exhausted: no cover of that size
    } else {
      interrupted = true;  // level unresolved; keep looking for covers above it
    }
  }
  std::ostringstream method;
  method << "partition backtracking, iterative deepening";
  if (interrupted) method << " (budget exhausted)";
  if (!solution) {
    // Fall back to one curve per point when singletons are admissible, so the
    // reported upper bound always comes with a cover behind it.
    Cover trivial;
    trivial.pointset = P;
    trivial.family = fam;
    try {
      for (std::size_t v = 0; v < P.points.size(); ++v)
        trivial.curves.push_back(make_curve({int(v)}, fam, P, opt.ortho_caps));
    } catch (const std::invalid_argument&) {
      res.bounds = {proven_lb, int(P.points.size()), std::nullopt, method.str()};
      return res;
    }
    trivial.method = method.str() + ", singleton fallback";
    trivial.disjoint_on_p = covers_pairwise_disjoint(trivial.curves);
    trivial.lower = proven_lb;
    trivial.upper = int(trivial.curves.size());
    res.bounds = {trivial.lower, trivial.upper, std::nullopt, trivial.method};
    res.cover = std::move(trivial);
    return res;
  }
  Cover cover;
  cover.pointset = P;
  cover.family = fam;
  for (const auto& g : *solution) cover.curves.push_back(make_curve(g, fam, P, opt.ortho_caps));
  std::sort(cover.curves.begin(), cover.curves.end(),
            [](const Curve& a, const Curve& b) { return a.covers < b.covers; });
  bool proven = !interrupted && found_at == proven_lb;
  cover.method = method.str();
  cover.optimal = proven;
  cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
  cover.lower = proven_lb;
  cover.upper = found_at;
  res.bounds = {cover.lower, cover.upper,
                proven ? std::optional<int>(found_at) : std::nullopt, cover.method};
  res.proven_optimal = proven;
  res.cover = std::move(cover);
  return res;
}

inline bool candidates_feasible(const PointSet& P, const CurveFamily& fam,
                                const CandidateCaps& caps) {
  const std::size_t n = P.points.size();
  switch (fam.kind) {
    case FamilyKind::line:
    case FamilyKind::skew_line:
      return n <= caps.line_points;
    case FamilyKind::circle:
      return n <= caps.circle_points;
    case FamilyKind::fixed_radius_circle:
      return n <= caps.fixed_radius_points;
    case FamilyKind::closed_convex:
    case FamilyKind::strictly_convex:
      return P.d == 2 && n <= caps.convex_points;
    case FamilyKind::fixed_shape:
      return n <= caps.fixed_shape_points;
    default:
      return false;
  }
}

}  // namespace detail

// Exact minimum cover. Dispatch: monotone instances use the polynomial chain
// decomposition; families with enumerable candidate pools use set-cover
// branch and bound; everything else uses partition backtracking with
// iterative deepening. A time budget turns the proof into best-effort bounds.
inline SolveResult exact_min_cover(const PointSet& P, const CurveFamily& fam,
                                   const SolveOptions& opt = {}) {
  SolveResult res;
  if (P.points.empty()) {
    Cover empty;
    empty.pointset = P;
    empty.family = fam;
    empty.optimal = true;
    empty.method = "empty instance";
    res.cover = std::move(empty);
    res.bounds = {0, 0, 0, "empty instance"};
    res.proven_optimal = true;
    return res;
  }
  detail::Deadline deadline(opt.time_budget_sec);

  if (fam.kind == FamilyKind::monotone && opt.route != SolveOptions::Route::partition) {
    ChainDecomposition cd = monotone_cover(P);
    Cover cover;
    cover.pointset = P;
    cover.family = fam;
    for (const auto& chain : cd.chains) cover.curves.push_back(make_curve(chain, fam, P));
    std::sort(cover.curves.begin(), cover.curves.end(),
              [](const Curve& a, const Curve& b) { return a.covers < b.covers; });
    cover.method = "minimum chain decomposition";
    cover.optimal = true;
    cover.disjoint_on_p = covers_pairwise_disjoint(cover.curves);
    cover.lower = cover.upper = int(cd.chains.size());
    res.bounds = {cover.lower, cover.upper, cover.upper, cover.method};
    res.proven_optimal = true;
    res.cover = std::move(cover);
    return res;
  }

  bool use_candidates;
  switch (opt.route) {
    case SolveOptions::Route::candidates: use_candidates = true; break;
    case SolveOptions::Route::partition: use_candidates = false; break;
    default: use_candidates = detail::candidates_feasible(P, fam, opt.cand_caps); break;
  }
  return use_candidates ? detail::solve_candidates(P, fam, opt, deadline)
                        : detail::solve_partition(P, fam, opt, deadline);
}

}  // namespace gridcover
