#pragma once

// Reproduction suite: one entry per published acceptance check, shared by the
// `reproduce` CLI command and the acceptance test binary. Each criterion is
// self-contained and reports pass/fail plus a short measurement summary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "gridcover/constructions.hpp"
#include "gridcover/incidence.hpp"
#include "gridcover/monotone.hpp"
#include "gridcover/solver.hpp"
#include "gridcover/tilings.hpp"

namespace gridcover {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace repro {

struct Check {
  bool ok = true;
  int checked = 0;
  std::string log;

  void count() { ++checked; }
  void fail(const std::string& msg) {
    ok = false;
    if (log.size() > 600) return;  // keep the report line readable
    if (!log.empty()) log += "; ";
    log += msg;
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream os;
    os << checked << " instances";
    if (!extra.empty()) os << ", " << extra;
    if (!log.empty()) os << " [" << log << "]";
    return os.str();
  }
};

inline PointSet make_grid(const std::vector<Int>& dims) {
  return grid_points(GridSpec{dims});
}

inline std::string dims_str(const std::vector<Int>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(dims[i]);
  }
  return s;
}

// Visits every nondecreasing dimension tuple with entries >= min_dim and
// product <= max_product. Dimension order never changes any quantity below.
inline void sorted_grids(Int max_product, int max_d, Int min_dim,
                         const std::function<void(const std::vector<Int>&)>& visit) {
  std::vector<Int> dims;
  std::function<void(Int, Int)> rec = [&](Int prod, Int lo) {
    if (!dims.empty()) visit(dims);
    if (int(dims.size()) == max_d) return;
    for (Int k = lo; prod * k <= max_product; ++k) {
      dims.push_back(k);
      rec(prod * k, k);
      dims.pop_back();
    }
  };
  rec(1, min_dim);
}

// --- criterion 1: minimum line covers of small boxes ---

inline std::pair<bool, std::string> crit_line_covers() {
  Check ch;
  auto run_one = [&](const std::vector<Int>& dims) {
    PointSet P = make_grid(dims);
    Int expect = std::numeric_limits<Int>::max();
    for (std::size_t j = 0; j < dims.size(); ++j) {
      Int prod = 1;
      for (std::size_t i = 0; i < dims.size(); ++i)
        if (i != j) prod *= dims[i];
      expect = std::min(expect, prod);
    }
    SolveResult r = exact_min_cover(P, CurveFamily{FamilyKind::line});
    ch.count();
    if (!r.proven_optimal || !r.bounds.exact) {
      ch.fail(dims_str(dims) + ": not proven");
      return;
    }
    if (Int(*r.bounds.exact) != expect) {
      ch.fail(dims_str(dims) + ": got " + std::to_string(*r.bounds.exact) + " want " +
              std::to_string(expect));
      return;
    }
    ch.require(verify_cover(*r.cover).ok, dims_str(dims) + ": cover failed verification");
  };
  sorted_grids(20, 4, 2, run_one);
  for (Int n = 2; n <= 20; ++n) run_one({n});
  run_one({3, 4});
  run_one({4, 3});
  run_one({5, 2, 2});
  return {ch.ok, ch.summary()};
}

// --- criterion 2: largest collinear subset of a box ---

inline std::pair<bool, std::string> crit_max_collinear() {
  Check ch;
  auto run_one = [&](const std::vector<Int>& dims) {
    PointSet P = make_grid(dims);
    GridSpec spec{dims};
    Int expect = *std::max_element(dims.begin(), dims.end());
    ch.count();
    ch.require(max_points_on_line(spec) == expect, dims_str(dims) + ": formula mismatch");
    Int got = max_collinear(P);
    if (got != expect)
      ch.fail(dims_str(dims) + ": got " + std::to_string(got) + " want " +
              std::to_string(expect));
  };
  sorted_grids(200, 7, 2, run_one);
  for (Int n = 2; n <= 200; ++n) run_one({n});
  return {ch.ok, ch.summary()};
}

// --- criterion 3: skew line covers of the square ---

inline std::pair<bool, std::string> crit_skew_lines() {
  Check ch;
  for (Int n = 2; n <= 100; ++n) {
    Cover c = skew_line_cover(n);
    ch.count();
    if (Int(c.curves.size()) != 2 * n - 2) {
      ch.fail("n=" + std::to_string(n) + ": " + std::to_string(c.curves.size()) +
              " curves, want " + std::to_string(2 * n - 2));
      continue;
    }
    ch.require(verify_cover(c).ok, "n=" + std::to_string(n) + ": cover failed verification");
  }
  for (Int n = 2; n <= 5; ++n) {
    PointSet P = make_grid({n, n});
    SolveResult r = exact_min_cover(P, CurveFamily{FamilyKind::skew_line});
    ch.count();
    if (!r.proven_optimal || !r.bounds.exact || Int(*r.bounds.exact) != 2 * n - 2)
      ch.fail("exact n=" + std::to_string(n) + ": want " + std::to_string(2 * n - 2) +
              ", got " +
              (r.bounds.exact ? std::to_string(*r.bounds.exact) : std::string("unproven")));
  }
  return {ch.ok, ch.summary()};
}

// --- criterion 4: monotone chain decompositions ---

inline std::pair<bool, std::string> crit_monotone() {
  Check ch;
  auto run_one = [&](const std::vector<Int>& dims) {
    GridSpec spec{dims};
    PointSet P = make_grid(dims);
    ChainDecomposition cd = monotone_cover(P);
    ch.count();
    Int want = grid_width_formula(spec);
    if (Int(cd.count()) != want) {
      ch.fail(dims_str(dims) + ": " + std::to_string(cd.count()) + " chains, want " +
              std::to_string(want));
      return;
    }
    std::vector<char> seen(P.points.size(), 0);
    for (const auto& chain : cd.chains) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        int v = chain[i];
        if (v < 0 || std::size_t(v) >= P.points.size() || seen[std::size_t(v)]) {
          ch.fail(dims_str(dims) + ": chains overlap or index out of range");
          return;
        }
        seen[std::size_t(v)] = 1;
        if (i > 0 && !leq_coordwise(P.points[std::size_t(chain[i - 1])],
                                    P.points[std::size_t(v)])) {
          ch.fail(dims_str(dims) + ": chain not increasing");
          return;
        }
      }
    }
    for (char s : seen)
      if (!s) {
        ch.fail(dims_str(dims) + ": point left uncovered");
        return;
      }
  };
  sorted_grids(4096, 8, 2, run_one);
  // Named closed forms: squares/rectangles and hypercubes.
  for (Int k1 = 2; k1 <= 12; ++k1)
    for (Int k2 = k1; k2 <= 12; ++k2) {
      ch.count();
      ch.require(grid_width_formula(GridSpec{{k1, k2}}) == std::min(k1, k2),
                 dims_str({k1, k2}) + ": 2D width formula mismatch");
    }
  const Int binom_mid[] = {0, 1, 2, 3, 6, 10};  // C(d, floor(d/2)) for d = 0..5
  for (int d = 1; d <= 5; ++d) {
    std::vector<Int> dims(std::size_t(d), 2);
    ch.count();
    ch.require(grid_width_formula(GridSpec{dims}) == binom_mid[d],
               dims_str(dims) + ": hypercube width mismatch");
  }
  // The decomposition is also the exact minimum cover through the solver API.
  {
    SolveResult r = exact_min_cover(make_grid({4, 4}), CurveFamily{FamilyKind::monotone});
    ch.count();
    ch.require(r.proven_optimal && r.bounds.exact && *r.bounds.exact == 4 &&
                   verify_cover(*r.cover).ok && r.cover->disjoint_on_p,
               "4x4 monotone solve mismatch");
  }
  return {ch.ok, ch.summary()};
}

// --- criterion 5: closed convex covers and the nested ring construction ---

inline bool box_ring_cover_sound(const Cover& c) {
  // Constructive check, linear in the point count: every point sits in
  // exactly one ring and on that ring's box surface.
  std::vector<char> seen(c.pointset.points.size(), 0);
  for (const Curve& cv : c.curves) {
    if (!std::holds_alternative<BoxWitness>(cv.witness)) return false;
    for (int idx : cv.covers) {
      if (idx < 0 || std::size_t(idx) >= seen.size() || seen[std::size_t(idx)]) return false;
      seen[std::size_t(idx)] = 1;
      if (!witness_covers(c.family, cv.witness, c.pointset.points[std::size_t(idx)]))
        return false;
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

inline std::pair<bool, std::string> crit_convex_covers() {
  Check ch;
  CurveFamily fam{FamilyKind::closed_convex};
  for (Int n = 2; n <= 6; ++n) {
    SolveResult r = exact_min_cover(make_grid({n, n}), fam);
    ch.count();
    Int want = (n + 1) / 2;
    if (!r.proven_optimal || !r.bounds.exact || Int(*r.bounds.exact) != want)
      ch.fail("exact " + std::to_string(n) + "x" + std::to_string(n) + ": want " +
              std::to_string(want));
    else
      ch.require(verify_cover(*r.cover).ok, "exact cover failed verification");
  }
  for (Int m = 1; m <= 5; ++m)
    for (Int n = m; n <= 5; ++n) {
      SolveResult r = exact_min_cover(make_grid({m, n}), fam);
      ch.count();
      Int want = std::min((m + 1) / 2, (n + 1) / 2);
      if (!r.proven_optimal || !r.bounds.exact || Int(*r.bounds.exact) != want)
        ch.fail(dims_str({m, n}) + ": want " + std::to_string(want));
    }
  auto ring_one = [&](const std::vector<Int>& dims, bool full_verify) {
    Cover c = convex_ring_cover(GridSpec{dims});
    ch.count();
    Int want = (*std::min_element(dims.begin(), dims.end()) + 1) / 2;
    if (Int(c.curves.size()) != want) {
      ch.fail("rings " + dims_str(dims) + ": " + std::to_string(c.curves.size()) +
              " want " + std::to_string(want));
      return;
    }
    ch.require(box_ring_cover_sound(c), "rings " + dims_str(dims) + ": unsound");
    if (full_verify) ch.require(verify_cover(c).ok, "rings " + dims_str(dims) + ": invalid");
  };
  for (Int m = 1; m <= 64; ++m)
    for (Int n = m; n <= 64; ++n) ring_one({m, n}, m * n <= 600);
  sorted_grids(20 * 20 * 20, 3, 1, [&](const std::vector<Int>& dims) {
    if (dims.size() == 3 && *std::max_element(dims.begin(), dims.end()) <= 20)
      ring_one(dims, false);
  });
  for (Int c3 : {24, 32, 48, 64}) {
    ring_one({2, 2, c3}, false);
    ring_one({3, 5, c3}, false);
    ring_one({c3, c3, c3}, false);
  }
  sorted_grids(10 * 10 * 10 * 10, 4, 1, [&](const std::vector<Int>& dims) {
    if (dims.size() == 4 && *std::max_element(dims.begin(), dims.end()) <= 10)
      ring_one(dims, false);
  });
  ring_one({16, 16, 16, 16}, false);
  ring_one({31, 31, 31, 31}, false);
  ring_one({2, 3, 5, 64}, false);
  return {ch.ok, ch.summary()};
}

// --- criterion 6: orthoconvex covers of squares ---

inline std::pair<bool, std::string> crit_orthoconvex() {
  Check ch;
  std::string statuses;
  SolveOptions opt;
  opt.time_budget_sec = 60.0;
  opt.ortho_caps.unbounded_side = 12;
  opt.ortho_caps.bounded_side = 12;
  {
    SolveResult r = exact_min_cover(make_grid({5, 5}), CurveFamily::orthoconvex(1), opt);
    ch.count();
    if (!r.proven_optimal || !r.bounds.exact || *r.bounds.exact != 2)
      ch.fail("5x5 with one inner corner: want exact 2");
    else
      ch.require(verify_cover(*r.cover, opt.ortho_caps).ok,
                 "5x5 one-corner cover failed verification");
  }
  for (Int n = 2; n <= 20; ++n) {
    PointSet P = make_grid({n, n});
    ch.count();
    ch.require(lower_bound(P, CurveFamily::orthoconvex(1)) == int((2 * n + 4) / 5),
               "n=" + std::to_string(n) + ": one-corner lower bound");
    ch.require(lower_bound(P, CurveFamily::orthoconvex(2)) == int((2 * n + 6) / 7),
               "n=" + std::to_string(n) + ": two-corner lower bound");
  }
  const Int expect_upper[] = {0, 0, 0, 0, 2, 2, 2, 3, 3, 3, 4};  // index = n
  for (Int n = 4; n <= 10; ++n) {
    SolveResult r = exact_min_cover(make_grid({n, n}), CurveFamily::orthoconvex(), opt);
    ch.count();
    bool exact_needed = n <= 6;
    if (!r.cover) {
      ch.fail("n=" + std::to_string(n) + ": no cover found in budget");
      continue;
    }
    if (Int(r.bounds.upper) > expect_upper[n]) {
      ch.fail("n=" + std::to_string(n) + ": upper " + std::to_string(r.bounds.upper) +
              " exceeds " + std::to_string(expect_upper[n]));
      continue;
    }
    if (exact_needed && (!r.proven_optimal || Int(*r.bounds.exact) != expect_upper[n])) {
      ch.fail("n=" + std::to_string(n) + ": want proven exact " +
              std::to_string(expect_upper[n]));
      continue;
    }
    ch.require(verify_cover(*r.cover, opt.ortho_caps).ok,
               "n=" + std::to_string(n) + ": cover failed verification");
    if (!statuses.empty()) statuses += " ";
    statuses += "n" + std::to_string(n) + "=" + std::to_string(r.bounds.upper) +
                (r.proven_optimal ? "(exact)" : "(upper)");
  }
  return {ch.ok, ch.summary(statuses)};
}

// --- criterion 7: degree-k bundle covers ---

inline std::pair<bool, std::string> crit_bundles() {
  Check ch;
  for (Int n = 1; n <= 50; ++n) {
    PointSet P = make_grid({n, n});
    for (int k = 1; k <= int(n); ++k) {
      Cover c = algebraic_bundle_cover(n, k);
      ch.count();
      Int want = (n + k - 1) / k;
      if (Int(c.curves.size()) != want) {
        ch.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": count");
        break;
      }
      std::vector<char> seen(P.points.size(), 0);
      bool sound = true;
      for (const Curve& cv : c.curves) {
        const auto* b = std::get_if<BundleWitness>(&cv.witness);
        if (!b || int(b->lines.size()) > k) sound = false;
        for (int idx : cv.covers)
          if (idx < 0 || std::size_t(idx) >= seen.size())
            sound = false;
          else
            seen[std::size_t(idx)] = 1;
        if (!sound) break;
        std::vector<bool> vanish = verify_vanishing(*b, P);
        for (int idx : cv.covers)
          if (!vanish[std::size_t(idx)]) sound = false;
      }
      for (char s : seen) sound &= s != 0;
      if (!sound) {
        ch.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": unsound");
        break;
      }
      if (n <= 10) ch.require(verify_cover(c).ok, "verify n=" + std::to_string(n));
    }
  }
  return {ch.ok, ch.summary()};
}

// --- criterion 8: concentric circle covers ---

inline std::pair<bool, std::string> crit_concentric() {
  Check ch;
  auto distinct_radii = [](Int n) {
    std::unordered_set<Int> radii;
    for (Int a = 0; a < n; ++a)
      for (Int b = 0; b < n; ++b)
        if (a != 0 || b != 0) radii.insert(a * a + b * b);
    return Int(radii.size());
  };
  for (Int n = 1; n <= 256; ++n) {
    Cover c = concentric_circle_cover(n);
    ch.count();
    Int want = 1 + distinct_radii(n);
    if (Int(c.curves.size()) != want) {
      ch.fail("n=" + std::to_string(n) + ": count " + std::to_string(c.curves.size()) +
              " want " + std::to_string(want));
      continue;
    }
    // Constructive soundness: each point on its circle, all points covered.
    std::vector<char> seen(c.pointset.points.size(), 0);
    bool sound = true;
    for (const Curve& cv : c.curves)
      for (int idx : cv.covers) {
        const Point& p = c.pointset.points[std::size_t(idx)];
        if (!witness_covers(c.family, cv.witness, p)) sound = false;
        seen[std::size_t(idx)] = 1;
      }
    for (char s : seen) sound &= s != 0;
    ch.require(sound, "n=" + std::to_string(n) + ": unsound");
    if (n <= 24) ch.require(verify_cover(c).ok, "n=" + std::to_string(n) + ": invalid");
  }
  double lo = 0, hi = 0;
  std::string ratios;
  for (Int n = 16; n <= 1024; n *= 2) {
    Int count = 1 + distinct_radii(n);
    double ratio = double(count) * std::sqrt(std::log(double(n))) / double(n * n);
    if (lo == 0 || ratio < lo) lo = ratio;
    if (ratio > hi) hi = ratio;
    ch.count();
  }
  std::ostringstream os;
  os << "density ratio spread " << hi / lo;
  ch.require(hi / lo < 3.0, os.str());
  return {ch.ok, ch.summary(os.str())};
}

// --- criterion 9: periodic tilings and clipped covers ---

inline std::pair<bool, std::string> crit_tilings() {
  Check ch;
  struct Job {
    const char* shape;
    TilingKind kind;
    // count bound on [n]^2 as count*den <= a*n^2/den ... expressed via
    // den*count <= n*n*num_scale + linear terms; stored as coefficients of
    // (n^2, n, 1) with a common denominator.
    Int den, cn2, cn, c1;
    bool has_bound;
  };
  const Job jobs[] = {
      {"unit-circle", TilingKind::exact_tiling, 4, 1, 8, 16, true},   // n^2/4 + 2n + 4
      {"sqrt2-circle", TilingKind::exact_tiling, 1, 0, 0, 0, false},
      {"radius2-circle", TilingKind::exact_tiling, 1, 0, 0, 0, false},
      {"smallest-l", TilingKind::exact_tiling, 8, 1, 8, 16, true},    // n^2/8 + n + 2
      {"square2", TilingKind::tile_like, 7, 1, 28, 0, true},          // n^2/7 + 4n
  };
  for (const Job& job : jobs) {
    auto shape = shape_by_name(job.shape);
    if (!shape) {
      ch.fail(std::string(job.shape) + ": unknown shape");
      continue;
    }
    std::optional<Rat> avg;
    if (job.kind == TilingKind::tile_like) avg = Rat(7);
    auto pat = find_periodic_tiling(*shape, 8, job.kind, avg);
    ch.count();
    if (!pat) {
      ch.fail(std::string(job.shape) + ": no pattern within period 8");
      continue;
    }
    PatternCheck pc = validate_pattern(*pat);
    if (!pc.ok) {
      ch.fail(std::string(job.shape) + ": pattern failed validation");
      continue;
    }
    if (job.kind == TilingKind::tile_like && pat->average != Rat(7)) {
      ch.fail(std::string(job.shape) + ": average is " + pat->average.str());
      continue;
    }
    if (!job.has_bound) continue;
    for (Int n = 1; n <= 64; ++n) {
      Cover clip = clip_to_grid(*pat, n);
      ch.count();
      if (!verify_cover(clip).ok) {
        ch.fail(std::string(job.shape) + " n=" + std::to_string(n) + ": clip invalid");
        break;
      }
      Int count = Int(clip.curves.size());
      if (job.den * count > job.cn2 * n * n + job.cn * n + job.c1) {
        ch.fail(std::string(job.shape) + " n=" + std::to_string(n) + ": " +
                std::to_string(count) + " curves exceed the bound");
        break;
      }
    }
  }
  return {ch.ok, ch.summary()};
}

// --- criterion 10: minimum cover by one fixed shape ---

inline std::pair<bool, std::string> crit_fixed_shape_min() {
  Check ch;
  auto shape = shape_by_name("sqrt2-circle");
  if (!shape) return {false, "missing built-in shape"};
  SolveResult r =
      exact_min_cover(make_grid({4, 4}), CurveFamily::fixed_shape(shape->offsets));
  ch.count();
  ch.require(r.proven_optimal && r.bounds.exact && *r.bounds.exact == 4,
             "4x4 diagonal-circle cover: want exact 4");
  if (r.cover) ch.require(verify_cover(*r.cover).ok, "cover failed verification");
  return {ch.ok, ch.summary()};
}

// --- criterion 11: the star-property counterexample ---

inline std::pair<bool, std::string> crit_counterexample() {
  Check ch;
  for (Int n = 2; n <= 30; ++n) {
    auto [P, L] = build_counterexample(n);
    ch.count();
    if (!check_star_property(P, L)) {
      ch.fail("n=" + std::to_string(n) + ": star property violated");
      continue;
    }
    Int mc = max_collinear(P);
    if (mc != n) {
      ch.fail("n=" + std::to_string(n) + ": max collinear " + std::to_string(mc));
      continue;
    }
    for (const LineEq& l : L.lines) {
      Int on = 0;
      for (const Point& p : P.points) on += l.contains(p);
      if (on != n) {
        ch.fail("n=" + std::to_string(n) + ": a chosen line holds " + std::to_string(on) +
                " points");
        break;
      }
    }
  }
  return {ch.ok, ch.summary()};
}

// --- criterion 12: incidence amplification ---

inline std::pair<bool, std::string> crit_blow_up() {
  Check ch;
  for (Int n = 2; n <= 6; ++n) {
    struct Entry {
      std::string label;
      Cover cover;
    };
    std::vector<Entry> entries;
    entries.push_back({"lines", line_cover_grid(GridSpec{{n, n}})});
    entries.push_back({"skew", skew_line_cover(n)});
    {
      SolveResult r = exact_min_cover(make_grid({n, n}), CurveFamily{FamilyKind::monotone});
      entries.push_back({"monotone", *r.cover});
    }
    entries.push_back({"rings", convex_ring_cover(GridSpec{{n, n}})});
    entries.push_back({"circles", concentric_circle_cover(n)});
    entries.push_back({"peel", strictly_convex_peel(n)});
    entries.push_back({"bundles", algebraic_bundle_cover(n, 2)});
    for (const Entry& e : entries) {
      ch.count();
      IncidenceInstance inst = blow_up(e.cover.curves, n, e.cover.family);
      Int recount = count_incidences(inst.points, inst.curves);
      if (recount != inst.incidences) {
        ch.fail(e.label + " n=" + std::to_string(n) + ": incidence recount mismatch");
        continue;
      }
      if (inst.incidences < n * n * n * n)
        ch.fail(e.label + " n=" + std::to_string(n) + ": " +
                std::to_string(inst.incidences) + " < n^4");
    }
  }
  return {ch.ok, ch.summary()};
}

// --- criterion 13: strictly convex peeling growth ---

inline std::pair<bool, std::string> crit_peeling() {
  Check ch;
  std::vector<double> xs, ys;
  CurveFamily strict{FamilyKind::strictly_convex};
  std::string counts;
  for (Int n = 8; n <= 128; n *= 2) {
    Cover c = strictly_convex_peel(n);
    ch.count();
    bool layers_ok = true;
    std::vector<char> seen(c.pointset.points.size(), 0);
    for (const Curve& cv : c.curves) {
      std::vector<Point> layer;
      for (int idx : cv.covers) {
        layer.push_back(c.pointset.points[std::size_t(idx)]);
        if (seen[std::size_t(idx)]) layers_ok = false;
        seen[std::size_t(idx)] = 1;
      }
      if (coverable(layer, strict) != Coverability::yes) layers_ok = false;
      if (!layers_ok) break;
    }
    for (char s : seen) layers_ok &= s != 0;
    ch.require(layers_ok, "n=" + std::to_string(n) + ": bad layer");
    xs.push_back(std::log(double(n)));
    ys.push_back(std::log(double(c.curves.size())));
    if (!counts.empty()) counts += " ";
    counts += "L(" + std::to_string(n) + ")=" + std::to_string(c.curves.size());
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double k = double(xs.size());
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  std::ostringstream os;
  os << counts << ", slope " << slope;
  ch.require(slope >= 1.2 && slope <= 1.5, "slope out of range");
  return {ch.ok, ch.summary(os.str())};
}

// --- criterion 14: the two exact solvers agree ---

inline std::pair<bool, std::string> crit_cross_validation() {
  Check ch;
  auto shape = shape_by_name("unit-circle");
  auto run_pair = [&](const PointSet& P, const CurveFamily& fam, const std::string& label) {
    SolveOptions part, cand;
    part.route = SolveOptions::Route::partition;
    cand.route = SolveOptions::Route::candidates;
    SolveResult a = exact_min_cover(P, fam, part);
    SolveResult b = exact_min_cover(P, fam, cand);
    ch.count();
    if (!a.proven_optimal || !b.proven_optimal) {
      ch.fail(label + ": a route failed to prove");
      return;
    }
    if (*a.bounds.exact != *b.bounds.exact) {
      ch.fail(label + ": partition " + std::to_string(*a.bounds.exact) + " vs candidates " +
              std::to_string(*b.bounds.exact));
      return;
    }
    ch.require(verify_cover(*a.cover).ok && verify_cover(*b.cover).ok,
               label + ": cover failed verification");
  };
  std::vector<std::vector<Int>> grids;
  sorted_grids(20, 4, 2, [&](const std::vector<Int>& dims) { grids.push_back(dims); });
  for (Int n = 2; n <= 20; ++n) grids.push_back({n});
  for (const auto& dims : grids) {
    PointSet P = make_grid(dims);
    run_pair(P, CurveFamily{FamilyKind::line}, dims_str(dims) + " line");
    if (dims.size() == 2) {
      run_pair(P, CurveFamily{FamilyKind::circle}, dims_str(dims) + " circle");
      run_pair(P, CurveFamily::fixed_shape(shape->offsets), dims_str(dims) + " shape");
    }
    if (dims.size() >= 2)
      run_pair(P, CurveFamily{FamilyKind::closed_convex}, dims_str(dims) + " convex");
  }
  return {ch.ok, ch.summary()};
}

}  // namespace repro

inline const std::vector<std::pair<std::string, std::pair<bool, std::string> (*)()>>&
acceptance_criteria() {
  static const std::vector<std::pair<std::string, std::pair<bool, std::string> (*)()>> items =
      {
          {"line-covers", &repro::crit_line_covers},
          {"max-collinear", &repro::crit_max_collinear},
          {"skew-lines", &repro::crit_skew_lines},
          {"monotone-chains", &repro::crit_monotone},
          {"convex-covers", &repro::crit_convex_covers},
          {"orthoconvex-covers", &repro::crit_orthoconvex},
          {"algebraic-bundles", &repro::crit_bundles},
          {"concentric-circles", &repro::crit_concentric},
          {"periodic-tilings", &repro::crit_tilings},
          {"fixed-shape-minimum", &repro::crit_fixed_shape_min},
          {"star-counterexample", &repro::crit_counterexample},
          {"incidence-blowup", &repro::crit_blow_up},
          {"convex-peeling", &repro::crit_peeling},
          {"solver-cross-validation", &repro::crit_cross_validation},
      };
  return items;
}

// Runs the acceptance table, optionally restricted to ids or name substrings.
inline std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only = {}) {
  std::vector<CriterionResult> out;
  const auto& items = acceptance_criteria();
  for (std::size_t i = 0; i < items.size(); ++i) {
    int id = int(i) + 1;
    if (!only.empty()) {
      bool wanted = false;
      for (const std::string& sel : only)
        if (sel == std::to_string(id) || items[i].first.find(sel) != std::string::npos)
          wanted = true;
      if (!wanted) continue;
    }
    CriterionResult r;
    r.id = id;
    r.name = items[i].first;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = items[i].second();
      r.pass = ok;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gridcover
