#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "gridcover/point.hpp"
#include "gridcover/predicates.hpp"
#include "gridcover/rational.hpp"

using namespace gridcover;

TEST_CASE("rational reduction and arithmetic", "[rational]") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0, -3).den == 1);
  CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
  CHECK((Rat(1, 2) - Rat(1, 3)) == Rat(1, 6));
  CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
  CHECK((Rat(2, 3) / Rat(4, 3)) == Rat(1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(7).is_integer());
  CHECK_FALSE(Rat(7, 2).is_integer());
  CHECK(Rat(-5, 10).str() == "-1/2");
  CHECK(Rat(4, 2).str() == "2");
  CHECK(Rat::parse("-3/9") == Rat(-1, 3));
  CHECK(Rat::parse("12") == Rat(12));
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(INT64_MAX) + Rat(1), OverflowError);
}

TEST_CASE("exact rational square roots", "[rational]") {
  Rat r;
  REQUIRE(rational_sqrt(Rat(9, 4), r));
  CHECK(r == Rat(3, 2));
  REQUIRE(rational_sqrt(Rat(0), r));
  CHECK(r == Rat(0));
  CHECK_FALSE(rational_sqrt(Rat(2), r));
  CHECK_FALSE(rational_sqrt(Rat(1, 2), r));
  CHECK_FALSE(rational_sqrt(Rat(-4), r));
}

TEST_CASE("grid point generation", "[point]") {
  PointSet g = grid_points(GridSpec{3, 2});
  REQUIRE(g.size() == 6);
  CHECK(g.d == 2);
  CHECK(g.points.front() == pt(1, 1));
  CHECK(g.points.back() == pt(3, 2));
  CHECK(std::is_sorted(g.points.begin(), g.points.end()));
  CHECK(g.contains(pt(2, 2)));
  CHECK_FALSE(g.contains(pt(0, 1)));
  CHECK(g.index_of(pt(1, 2)) == 1);
  CHECK(g.index_of(pt(9, 9)) == -1);

  PointSet cube = grid_points(GridSpec{2, 2, 2});
  CHECK(cube.size() == 8);
  CHECK(cube.points.front() == Point{1, 1, 1});

  CHECK_THROWS_AS(grid_points(GridSpec{101, 101}, 10000), InstanceTooLarge);
  CHECK_THROWS_AS(GridSpec{std::vector<Int>{}}, std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{3, 0}), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{1, 1, 1, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("collinearity in several dimensions", "[predicates]") {
  CHECK(collinear(pt(0, 0), pt(1, 1), pt(5, 5)));
  CHECK_FALSE(collinear(pt(0, 0), pt(1, 1), pt(5, 4)));
  CHECK(collinear(Point{0, 0, 0}, Point{1, 2, 3}, Point{3, 6, 9}));
  CHECK_FALSE(collinear(Point{0, 0, 0}, Point{1, 2, 3}, Point{3, 6, 8}));
  CHECK(collinear(pt(2, 7), pt(2, 7), pt(9, 9)));  // repeated point is degenerate-true
  CHECK_THROWS_AS(collinear(pt(0, 0), Point{1, 1, 1}, pt(2, 2)), std::invalid_argument);

  // Permutation and translation invariance on deterministic pseudo-random triples.
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<Int> coord(-30, 30);
  for (int d : {2, 3, 5}) {
    for (int iter = 0; iter < 200; ++iter) {
      Point a(d), b(d), c(d), t(d);
      for (int i = 0; i < d; ++i) {
        a[i] = coord(rng);
        b[i] = coord(rng);
        c[i] = coord(rng);
        t[i] = coord(rng);
      }
      bool base = collinear(a, b, c);
      CHECK(collinear(b, c, a) == base);
      CHECK(collinear(c, a, b) == base);
      CHECK(collinear(b, a, c) == base);
      CHECK(collinear(add(a, t), add(b, t), add(c, t)) == base);
    }
  }
}

namespace {

// Independent concyclicity oracle: exact rational circumcenter from two
// perpendicular-bisector equations, then squared-distance comparison.
bool concyclic_oracle(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto sq = [](Rat v) { return v * v; };
  Rat abx(2 * (b[0] - a[0])), aby(2 * (b[1] - a[1]));
  Rat acx(2 * (c[0] - a[0])), acy(2 * (c[1] - a[1]));
  Rat rb(b[0] * b[0] + b[1] * b[1] - a[0] * a[0] - a[1] * a[1]);
  Rat rc(c[0] * c[0] + c[1] * c[1] - a[0] * a[0] - a[1] * a[1]);
  Rat det = abx * acy - aby * acx;
  REQUIRE(det != Rat(0));
  Rat cx = (rb * acy - rc * aby) / det;
  Rat cy = (rc * abx - rb * acx) / det;
  Rat ra2 = sq(cx - Rat(a[0])) + sq(cy - Rat(a[1]));
  Rat rd2 = sq(cx - Rat(d[0])) + sq(cy - Rat(d[1]));
  return ra2 == rd2;
}

}  // namespace

TEST_CASE("concyclicity agrees with the circumcenter oracle", "[predicates][oracle]") {
  PointSet g = grid_points(GridSpec{4, 4});
  const auto& p = g.points;
  int concyclic_count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        if (collinear(p[i], p[j], p[k])) continue;
        for (std::size_t l = k + 1; l < p.size(); ++l) {
          bool got = concyclic4(p[i], p[j], p[k], p[l]);
          bool want = concyclic_oracle(p[i], p[j], p[k], p[l]);
          REQUIRE(got == want);
          concyclic_count += got;
        }
      }
  CHECK(concyclic_count > 0);
}

TEST_CASE("concyclic4 basics", "[predicates]") {
  CHECK(concyclic4(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));   // unit square
  CHECK_FALSE(concyclic4(pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 2)));
  CHECK(concyclic4(pt(1, 0), pt(-1, 0), pt(0, 1), pt(0, -1)));  // unit circle
  CHECK_THROWS_AS(concyclic4(pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(concyclic4(Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{1, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("hull classification of grids", "[predicates]") {
  PointSet g = grid_points(GridSpec{3, 3});
  auto labels = hull_classify(g);
  int v = 0, e = 0, s = 0;
  for (auto l : labels) {
    v += l == HullLabel::vertex;
    e += l == HullLabel::edge_interior;
    s += l == HullLabel::strict_interior;
  }
  CHECK(v == 4);
  CHECK(e == 4);
  CHECK(s == 1);
  CHECK(labels[g.index_of(pt(2, 2))] == HullLabel::strict_interior);
  CHECK(labels[g.index_of(pt(1, 1))] == HullLabel::vertex);
  CHECK(labels[g.index_of(pt(2, 1))] == HullLabel::edge_interior);

  // Square grids have exactly (n-2)^2 strictly interior points.
  for (Int n = 2; n <= 8; ++n) {
    PointSet gn = grid_points(GridSpec{n, n});
    auto ls = hull_classify(gn);
    Int interior = std::count(ls.begin(), ls.end(), HullLabel::strict_interior);
    CHECK(interior == (n - 2) * (n - 2));
  }
}

TEST_CASE("hull classification degenerate cases", "[predicates]") {
  PointSet single(2, {pt(5, 7)});
  CHECK(hull_classify(single) == std::vector<HullLabel>{HullLabel::vertex});

  PointSet segment(2, {pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)});
  auto labels = hull_classify(segment);
  CHECK(labels[0] == HullLabel::vertex);
  CHECK(labels[1] == HullLabel::edge_interior);
  CHECK(labels[2] == HullLabel::edge_interior);
  CHECK(labels[3] == HullLabel::vertex);

  PointSet empty(2);
  CHECK(hull_classify(empty).empty());

  CHECK_THROWS_AS(hull_classify(PointSet(3, {Point{1, 1, 1}})), std::invalid_argument);
}

TEST_CASE("convex hull is counter-clockwise with strict corners", "[predicates]") {
  auto hull = convex_hull({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 0), pt(1, 1)});
  REQUIRE(hull.size() == 4);  // (1,0) lies on an edge, (1,1) inside
  CHECK(hull[0] == pt(0, 0));
  Int128 area2 = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& p = hull[i];
    const Point& q = hull[(i + 1) % hull.size()];
    area2 += Int128(p[0]) * q[1] - Int128(q[0]) * p[1];
  }
  CHECK(area2 == 8);  // ccw orientation: positive doubled area
}

TEST_CASE("point set canonical form", "[point]") {
  PointSet ps(2, {pt(3, 1), pt(1, 2), pt(3, 1), pt(0, 9)});
  REQUIRE(ps.size() == 3);
  CHECK(ps.points[0] == pt(0, 9));
  CHECK(ps.points[1] == pt(1, 2));
  CHECK(ps.points[2] == pt(3, 1));
  CHECK_THROWS_AS(PointSet(2, {Point{1, 2, 3}}), std::invalid_argument);
}
