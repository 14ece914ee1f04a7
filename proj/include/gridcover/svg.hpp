#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridcover/cover.hpp"
#include "gridcover/family.hpp"
#include "gridcover/point.hpp"
#include "gridcover/tilings.hpp"

namespace gridcover {
namespace svgdet {

// Output must be byte-stable across runs, so every number goes through one
// fixed-precision formatter and no floating state leaks in.
inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

inline const char* palette(std::size_t i) {
  static const char* kColors[] = {"#1b6ca8", "#c6412b", "#2c8a4b", "#8a2ca0",
                                  "#b8860b", "#17818c", "#b03060", "#556b2f",
                                  "#7b5235", "#36454f"};
  return kColors[i % 10];
}

struct Frame {
  double lox, loy, hix, hiy;
  double scale = 40.0;
  double margin = 30.0;

  double x(double gx) const { return (gx - lox) * scale + margin; }
  // SVG y grows downward; grid y grows upward.
  double y(double gy) const { return (hiy - gy) * scale + margin; }
  double width() const { return (hix - lox) * scale + 2 * margin; }
  double height() const { return (hiy - loy) * scale + 2 * margin; }
};

inline Frame frame_for(const PointSet& ps) {
  if (ps.d != 2) throw std::invalid_argument("svg rendering needs 2D data");
  Frame f{0, 0, 1, 1};
  if (!ps.points.empty()) {
    f.lox = f.hix = double(ps.points[0][0]);
    f.loy = f.hiy = double(ps.points[0][1]);
    for (const Point& p : ps.points) {
      f.lox = std::min(f.lox, double(p[0]));
      f.hix = std::max(f.hix, double(p[0]));
      f.loy = std::min(f.loy, double(p[1]));
      f.hiy = std::max(f.hiy, double(p[1]));
    }
  }
  return f;
}

inline void open_svg(std::string& out, const Frame& f) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(f.width()) +
         "\" height=\"" + num(f.height()) + "\" viewBox=\"0 0 " + num(f.width()) +
         " " + num(f.height()) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

inline void draw_dot(std::string& out, const Frame& f, double gx, double gy,
                     const char* fill, double r) {
  out += "<circle cx=\"" + num(f.x(gx)) + "\" cy=\"" + num(f.y(gy)) + "\" r=\"" +
         num(r) + "\" fill=\"" + fill + "\"/>\n";
}

inline void draw_segment(std::string& out, const Frame& f, double x1, double y1,
                         double x2, double y2, const char* color) {
  out += "<line x1=\"" + num(f.x(x1)) + "\" y1=\"" + num(f.y(y1)) + "\" x2=\"" +
         num(f.x(x2)) + "\" y2=\"" + num(f.y(y2)) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
}

inline void draw_poly(std::string& out, const Frame& f,
                      const std::vector<std::pair<double, double>>& pts,
                      const char* color, bool closed) {
  out += closed ? "<polygon points=\"" : "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += num(f.x(pts[i].first)) + "," + num(f.y(pts[i].second));
  }
  out += "\" fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"2\"/>\n";
}

inline void draw_ring(std::string& out, const Frame& f, double gx, double gy,
                      const char* color) {
  out += "<circle cx=\"" + num(f.x(gx)) + "\" cy=\"" + num(f.y(gy)) +
         "\" r=\"8.00\" fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"2\"/>\n";
}

// Clip the line a*x + b*y = c to the frame box, slightly inflated.
inline void draw_line_eq(std::string& out, const Frame& f, Int a, Int b, Int c,
                         const char* color) {
  double pad = 0.5;
  double x0 = f.lox - pad, x1 = f.hix + pad;
  double y0 = f.loy - pad, y1 = f.hiy + pad;
  std::vector<std::pair<double, double>> hits;
  auto push = [&](double x, double y) {
    if (x < x0 - 1e-9 || x > x1 + 1e-9 || y < y0 - 1e-9 || y > y1 + 1e-9) return;
    for (auto& h : hits)
      if (std::abs(h.first - x) < 1e-9 && std::abs(h.second - y) < 1e-9) return;
    hits.emplace_back(x, y);
  };
  if (b != 0) {
    push(x0, (double(c) - double(a) * x0) / double(b));
    push(x1, (double(c) - double(a) * x1) / double(b));
  }
  if (a != 0) {
    push((double(c) - double(b) * y0) / double(a), y0);
    push((double(c) - double(b) * y1) / double(a), y1);
  }
  if (hits.size() >= 2)
    draw_segment(out, f, hits[0].first, hits[0].second, hits[1].first,
                 hits[1].second, color);
}

struct WitnessPainter {
  std::string& out;
  const Frame& f;
  const PointSet& host;
  const std::vector<int>& covers;
  const char* color;

  void rings_on_covers() const {
    for (int idx : covers)
      draw_ring(out, f, double(host.points[idx][0]), double(host.points[idx][1]),
                color);
  }

  void operator()(const LineWitness& l) const {
    int ax = 0;
    while (ax < 2 && l.dir[ax] == 0) ++ax;
    if (ax == 2) return;
    double tmin = -0.45, tmax = 0.45;
    bool first = true;
    for (int idx : covers) {
      const Point& p = host.points[idx];
      double t = double(p[ax] - l.base[ax]) / double(l.dir[ax]);
      if (first) {
        tmin = t;
        tmax = t;
        first = false;
      } else {
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
      }
    }
    tmin -= 0.45;
    tmax += 0.45;
    draw_segment(out, f, double(l.base[0]) + tmin * double(l.dir[0]),
                 double(l.base[1]) + tmin * double(l.dir[1]),
                 double(l.base[0]) + tmax * double(l.dir[0]),
                 double(l.base[1]) + tmax * double(l.dir[1]), color);
  }

  void operator()(const CircleWitness& c) const {
    double r = std::sqrt(c.r2.to_double());
    out += "<circle cx=\"" + num(f.x(c.cx.to_double())) + "\" cy=\"" +
           num(f.y(c.cy.to_double())) + "\" r=\"" + num(r * f.scale) +
           "\" fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\"/>\n";
  }

  void operator()(const RectilinearPolygon& p) const {
    std::vector<std::pair<double, double>> pts;
    for (const Point& v : p.vertices) pts.emplace_back(double(v[0]), double(v[1]));
    draw_poly(out, f, pts, color, true);
  }

  void operator()(const ChainWitness& c) const {
    if (c.points.size() == 1) {
      draw_ring(out, f, double(c.points[0][0]), double(c.points[0][1]), color);
      return;
    }
    std::vector<std::pair<double, double>> pts;
    for (const Point& v : c.points) pts.emplace_back(double(v[0]), double(v[1]));
    draw_poly(out, f, pts, color, false);
  }

  void operator()(const TranslationWitness&) const { rings_on_covers(); }

  void operator()(const BundleWitness& b) const {
    for (const LineEq& l : b.lines) draw_line_eq(out, f, l.a, l.b, l.c, color);
  }

  void operator()(const HullWitness& h) const {
    if (h.polygon.size() <= 1) {
      rings_on_covers();
      return;
    }
    std::vector<std::pair<double, double>> pts;
    for (const Point& v : h.polygon) pts.emplace_back(double(v[0]), double(v[1]));
    draw_poly(out, f, pts, color, h.polygon.size() >= 3);
  }

  void operator()(const BoxWitness& b) const {
    std::vector<std::pair<double, double>> pts = {
        {double(b.lo[0]), double(b.lo[1])},
        {double(b.hi[0]), double(b.lo[1])},
        {double(b.hi[0]), double(b.hi[1])},
        {double(b.lo[0]), double(b.hi[1])}};
    draw_poly(out, f, pts, color, true);
  }
};

}  // namespace svgdet

inline std::string render_svg(const PointSet& ps) {
  svgdet::Frame f = svgdet::frame_for(ps);
  std::string out;
  svgdet::open_svg(out, f);
  for (const Point& p : ps.points)
    svgdet::draw_dot(out, f, double(p[0]), double(p[1]), "#222222", 4.0);
  out += "</svg>\n";
  return out;
}

inline std::string render_svg(const Cover& c) {
  svgdet::Frame f = svgdet::frame_for(c.pointset);
  std::string out;
  svgdet::open_svg(out, f);
  for (std::size_t i = 0; i < c.curves.size(); ++i) {
    svgdet::WitnessPainter painter{out, f, c.pointset, c.curves[i].covers,
                                   svgdet::palette(i)};
    std::visit(painter, c.curves[i].witness);
  }
  for (const Point& p : c.pointset.points)
    svgdet::draw_dot(out, f, double(p[0]), double(p[1]), "#222222", 4.0);
  out += "</svg>\n";
  return out;
}

inline std::string render_svg(const TilingPattern& pat, Int window = 0) {
  if (window <= 0) {
    Int a = pat.u[0] == 0 ? 1 : (pat.u[0] < 0 ? -pat.u[0] : pat.u[0]);
    Int c = pat.v[1] == 0 ? 1 : (pat.v[1] < 0 ? -pat.v[1] : pat.v[1]);
    window = std::max<Int>(8, 3 * std::max(a, c));
  }
  Cover clipped = clip_to_grid(pat, window);
  return render_svg(clipped);
}

}  // namespace gridcover
