#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gridcover/rational.hpp"

namespace gridcover {

constexpr int kMaxDim = 8;
constexpr std::size_t kDefaultInstanceCap = 1'000'000;

struct InstanceTooLarge : std::length_error {
  using std::length_error::length_error;
};

// Integer lattice point, d = coords.size() <= kMaxDim.
using Point = std::vector<Int>;

inline Point pt(Int x, Int y) { return Point{x, y}; }

inline Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline bool leq_coordwise(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = p.size();
    for (Int v : p) h = h * 1000003u ^ std::hash<Int>()(std::size_t(v));
    return h;
  }
};

// Finite set of distinct points of common dimension, kept lex-sorted.
struct PointSet {
  int d = 0;
  std::vector<Point> points;

  PointSet() = default;
  explicit PointSet(int dim) : d(dim) { check_dim(dim); }
  PointSet(int dim, std::vector<Point> pts) : d(dim), points(std::move(pts)) {
    check_dim(dim);
    for (const auto& p : points)
      if (int(p.size()) != d) throw std::invalid_argument("point dimension mismatch");
    canonicalize();
  }

  static void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
      throw std::invalid_argument("dimension out of range 1.." + std::to_string(kMaxDim));
  }

  void canonicalize() {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }

  std::size_t size() const { return points.size(); }
  bool contains(const Point& p) const {
    return std::binary_search(points.begin(), points.end(), p);
  }
  // Index of p in lex order, or -1.
  int index_of(const Point& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return -1;
    return int(it - points.begin());
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.d == b.d && a.points == b.points;
  }
};

// Grid [1..k_1] x ... x [1..k_d], 1-indexed per side.
struct GridSpec {
  std::vector<Int> dims;

  GridSpec() = default;
  explicit GridSpec(std::vector<Int> k) : dims(std::move(k)) {
    PointSet::check_dim(int(dims.size()));
    for (Int ki : dims)
      if (ki < 1) throw std::invalid_argument("grid side must be >= 1");
  }
  GridSpec(std::initializer_list<Int> k) : GridSpec(std::vector<Int>(k)) {}

  int d() const { return int(dims.size()); }

  std::size_t point_count() const {
    Int128 n = 1;
    for (Int ki : dims) {
      n *= ki;
      if (n > Int128(1) << 62) throw InstanceTooLarge("grid too large to count");
    }
    return std::size_t(n);
  }
};

inline PointSet grid_points(const GridSpec& spec,
                            std::size_t cap = kDefaultInstanceCap) {
  std::size_t n = spec.point_count();
  if (n > cap)
    throw InstanceTooLarge("grid has " + std::to_string(n) +
                           " points, cap is " + std::to_string(cap));
  PointSet ps(spec.d());
  ps.points.reserve(n);
  Point cur(spec.d(), 1);
  for (std::size_t i = 0; i < n; ++i) {
    ps.points.push_back(cur);
    for (int j = spec.d() - 1; j >= 0; --j) {
      if (cur[j] < spec.dims[j]) {
        ++cur[j];
        break;
      }
      cur[j] = 1;
    }
  }
  ps.canonicalize();
  return ps;
}

}  // namespace gridcover
