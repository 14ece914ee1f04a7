#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gridcover/point.hpp"

namespace gridcover {

// A partition of a point set into chains of the coordinate-wise order, as
// index sequences that are increasing under <=.
struct ChainDecomposition {
  std::vector<std::vector<int>> chains;

  std::size_t count() const { return chains.size(); }
};

// A[m] = number of grid points with coordinate sum m; indexless ranks live in
// [d, k1+...+kd]. The profile is symmetric and unimodal.
struct RankProfile {
  Int min_rank = 0;
  std::vector<Int> counts;

  Int at(Int rank) const {
    Int i = rank - min_rank;
    if (i < 0 || std::size_t(i) >= counts.size()) return 0;
    return counts[std::size_t(i)];
  }
  Int max_count() const {
    Int m = 0;
    for (Int c : counts) m = std::max(m, c);
    return m;
  }
};

// Rank profile of [k1] x ... x [kd] by iterated convolution of indicator
// vectors of the factors.
inline RankProfile rank_profile(const GridSpec& spec) {
  RankProfile r;
  r.min_rank = Int(spec.d());
  r.counts = {1};
  std::vector<Int> next;
  for (Int k : spec.dims) {
    next.assign(r.counts.size() + std::size_t(k) - 1, 0);
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      for (Int j = 0; j < k; ++j) next[i + std::size_t(j)] += r.counts[i];
    r.counts = next;
  }
  return r;
}

// Width of the grid poset: the rank profile value at the middle rank
// floor((k1+...+kd+d)/2), which equals the maximum by symmetry+unimodality.
inline Int grid_width_formula(const GridSpec& spec, RankProfile* profile_out = nullptr) {
  RankProfile r = rank_profile(spec);
  Int sum = std::accumulate(spec.dims.begin(), spec.dims.end(), Int(0));
  Int mid = (sum + spec.d()) / 2;
  Int w = r.at(mid);
  if (w != r.max_count())
    throw std::logic_error("rank profile peak is not at the middle rank");
  if (profile_out) *profile_out = std::move(r);
  return w;
}

// Detects whether P is a full axis-aligned box of lattice points; returns its
// side lengths. P must be in canonical (sorted, deduplicated) form.
inline std::optional<GridSpec> as_full_box(const PointSet& P, Point* lo_out = nullptr) {
  if (P.points.empty()) return std::nullopt;
  Point lo = P.points.front(), hi = P.points.front();
  for (const Point& p : P.points)
    for (int i = 0; i < P.d; ++i) {
      lo[std::size_t(i)] = std::min(lo[std::size_t(i)], p[std::size_t(i)]);
      hi[std::size_t(i)] = std::max(hi[std::size_t(i)], p[std::size_t(i)]);
    }
  Int128 volume = 1;
  std::vector<Int> dims;
  for (int i = 0; i < P.d; ++i) {
    dims.push_back(hi[std::size_t(i)] - lo[std::size_t(i)] + 1);
    volume *= dims.back();
  }
  if (volume != Int128(P.points.size())) return std::nullopt;
  if (lo_out) *lo_out = lo;
  return GridSpec{dims};
}

namespace detail {

// Minimum chain decomposition of a full grid via nested hook peeling: the
// product of a chain C (length L) with a new [k] factor splits into min(L,k)
// hooks, hook i running along C[i-1] for the first k+1-i values of the new
// coordinate and then up through C[i..] at that final value. Hooks partition
// the product and stay symmetric about the middle rank, so the final chain
// count is the width.
inline std::vector<std::vector<Point>> grid_hook_chains(const GridSpec& spec) {
  std::vector<std::vector<Point>> chains{{Point{}}};
  for (Int k : spec.dims) {
    std::vector<std::vector<Point>> next;
    for (const auto& c : chains) {
      const Int L = Int(c.size());
      for (Int i = 1; i <= std::min(L, k); ++i) {
        std::vector<Point> hook;
        for (Int j = 1; j <= k + 1 - i; ++j) {
          Point p = c[std::size_t(i - 1)];
          p.push_back(j);
          hook.push_back(std::move(p));
        }
        for (Int r = i; r < L; ++r) {
          Point p = c[std::size_t(r)];
          p.push_back(k + 1 - i);
          hook.push_back(std::move(p));
        }
        next.push_back(std::move(hook));
      }
    }
    chains = std::move(next);
  }
  return chains;
}

// Hopcroft-Karp maximum matching. adj[l] lists right-vertices of left l.
struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  int nl, nr;
  std::vector<int> match_l, match_r, dist;
  static constexpr int kInf = 1 << 30;

  HopcroftKarp(const std::vector<std::vector<int>>& a, int nleft, int nright)
      : adj(a), nl(nleft), nr(nright), match_l(nleft, -1), match_r(nright, -1) {}

  bool bfs() {
    std::queue<int> q;
    dist.assign(std::size_t(nl), kInf);
    for (int l = 0; l < nl; ++l)
      if (match_l[std::size_t(l)] < 0) {
        dist[std::size_t(l)] = 0;
        q.push(l);
      }
    bool reachable = false;
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj[std::size_t(l)]) {
        int l2 = match_r[std::size_t(r)];
        if (l2 < 0) {
          reachable = true;
        } else if (dist[std::size_t(l2)] == kInf) {
          dist[std::size_t(l2)] = dist[std::size_t(l)] + 1;
          q.push(l2);
        }
      }
    }
    return reachable;
  }

  bool dfs(int l) {
    for (int r : adj[std::size_t(l)]) {
      int l2 = match_r[std::size_t(r)];
      if (l2 < 0 || (dist[std::size_t(l2)] == dist[std::size_t(l)] + 1 && dfs(l2))) {
        match_l[std::size_t(l)] = r;
        match_r[std::size_t(r)] = l;
        return true;
      }
    }
    dist[std::size_t(l)] = kInf;
    return false;
  }

  int run() {
    int matching = 0;
    while (bfs())
      for (int l = 0; l < nl; ++l)
        if (match_l[std::size_t(l)] < 0 && dfs(l)) ++matching;
    return matching;
  }
};

}  // namespace detail

// Minimum chain decomposition of an arbitrary point set: maximum bipartite
// matching on the comparability graph gives a minimum path cover of the
// (already transitively closed) dominance DAG. Chains come out sorted by
// their first point; full boxes take the linear-time hook construction.
inline ChainDecomposition monotone_cover(const PointSet& P) {
  ChainDecomposition out;
  const auto& pts = P.points;
  if (pts.empty()) return out;

  Point lo;
  if (auto box = as_full_box(P, &lo)) {
    for (auto& chain : detail::grid_hook_chains(*box)) {
      std::vector<int> idx;
      idx.reserve(chain.size());
      for (Point& p : chain) {
        for (int i = 0; i < P.d; ++i) p[std::size_t(i)] += lo[std::size_t(i)] - 1;
        idx.push_back(P.index_of(p));
      }
      out.chains.push_back(std::move(idx));
    }
  } else {
    const int n = int(pts.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && leq_coordwise(pts[std::size_t(i)], pts[std::size_t(j)]))
          adj[std::size_t(i)].push_back(j);
    detail::HopcroftKarp hk(adj, n, n);
    hk.run();
    std::vector<char> is_head(std::size_t(n), 1);
    for (int i = 0; i < n; ++i)
      if (hk.match_l[std::size_t(i)] >= 0) is_head[std::size_t(hk.match_l[std::size_t(i)])] = 0;
    for (int i = 0; i < n; ++i) {
      if (!is_head[std::size_t(i)]) continue;
      std::vector<int> chain{i};
      for (int cur = i; hk.match_l[std::size_t(cur)] >= 0; cur = hk.match_l[std::size_t(cur)])
        chain.push_back(hk.match_l[std::size_t(cur)]);
      out.chains.push_back(std::move(chain));
    }
  }
  std::sort(out.chains.begin(), out.chains.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return out;
}

// Checks that a decomposition partitions 0..n-1 into coordinate-wise chains.
inline bool valid_chain_decomposition(const ChainDecomposition& cd, const PointSet& P) {
  std::vector<char> seen(P.points.size(), 0);
  for (const auto& chain : cd.chains) {
    if (chain.empty()) return false;
    for (std::size_t t = 0; t < chain.size(); ++t) {
      int i = chain[t];
      if (i < 0 || std::size_t(i) >= P.points.size() || seen[std::size_t(i)]) return false;
      seen[std::size_t(i)] = 1;
      if (t > 0 && !leq_coordwise(P.points[std::size_t(chain[t - 1])], P.points[std::size_t(i)]))
        return false;
    }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

}  // namespace gridcover
