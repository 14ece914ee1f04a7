#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gridcover/cover.hpp"
#include "gridcover/family.hpp"
#include "gridcover/incidence.hpp"
#include "gridcover/point.hpp"
#include "gridcover/rational.hpp"
#include "gridcover/tilings.hpp"

namespace gridcover {

// All serialization uses ordered_json with fixed key order, so outputs are
// byte-stable and parse-serialize round trips are identity on our files.
using Json = nlohmann::ordered_json;

struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace jio {

inline Json rat_to_json(const Rat& r) {
  if (r.den == 1) return Json(r.num);
  return Json(r.str());
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw JsonError("expected rational as integer or \"p/q\" string");
}

inline Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (Int v : p) a.push_back(v);
  return a;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw JsonError("expected coordinate array");
  Point p;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw JsonError("coordinates must be integers");
    p.push_back(v.get<Int>());
  }
  return p;
}

inline Json points_to_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const Point& p : pts) a.push_back(point_to_json(p));
  return a;
}

inline std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw JsonError("expected array of points");
  std::vector<Point> pts;
  for (const Json& p : j) pts.push_back(point_from_json(p));
  return pts;
}

}  // namespace jio

inline Json to_json(const PointSet& ps) {
  Json j;
  j["d"] = ps.d;
  j["points"] = jio::points_to_json(ps.points);
  return j;
}

inline PointSet pointset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("points"))
    throw JsonError("point set needs \"d\" and \"points\"");
  int d = j["d"].get<int>();
  PointSet ps(d, jio::points_from_json(j["points"]));
  return ps;
}

inline Json to_json(const LineEq& l) {
  Json j;
  j["a"] = l.a;
  j["b"] = l.b;
  j["c"] = l.c;
  return j;
}

inline LineEq lineeq_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("c"))
    throw JsonError("line needs \"a\", \"b\", \"c\"");
  return LineEq{j["a"].get<Int>(), j["b"].get<Int>(), j["c"].get<Int>()};
}

inline Json to_json(const CurveFamily& fam) {
  Json j;
  j["name"] = family_name(fam.kind);
  switch (fam.kind) {
    case FamilyKind::fixed_radius_circle:
      j["r2"] = jio::rat_to_json(fam.radius2);
      j["lattice"] =
          fam.lattice == CenterLattice::integer ? "integer" : "half-integer";
      break;
    case FamilyKind::orthoconvex:
      if (fam.max_inner_corners == kOrthoUnbounded)
        j["max-inner-corners"] = nullptr;
      else
        j["max-inner-corners"] = fam.max_inner_corners;
      break;
    case FamilyKind::algebraic:
      j["degree"] = fam.degree;
      break;
    case FamilyKind::fixed_shape:
      j["offsets"] = to_json(fam.offsets);
      break;
    default:
      break;
  }
  return j;
}

inline CurveFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("name")) throw JsonError("family needs \"name\"");
  auto kind = parse_family(j["name"].get<std::string>());
  if (!kind) throw JsonError("unknown family: " + j["name"].get<std::string>());
  switch (*kind) {
    case FamilyKind::fixed_radius_circle: {
      if (!j.contains("r2")) throw JsonError("fixed-radius-circle needs \"r2\"");
      CenterLattice lat = CenterLattice::integer;
      if (j.contains("lattice")) {
        std::string s = j["lattice"].get<std::string>();
        if (s == "half-integer")
          lat = CenterLattice::half_integer;
        else if (s != "integer")
          throw JsonError("lattice must be \"integer\" or \"half-integer\"");
      }
      return CurveFamily::fixed_radius_circle(jio::rat_from_json(j["r2"]), lat);
    }
    case FamilyKind::orthoconvex: {
      int corners = kOrthoUnbounded;
      if (j.contains("max-inner-corners") && !j["max-inner-corners"].is_null())
        corners = j["max-inner-corners"].get<int>();
      return CurveFamily::orthoconvex(corners);
    }
    case FamilyKind::algebraic:
      if (!j.contains("degree")) throw JsonError("algebraic needs \"degree\"");
      return CurveFamily::algebraic(j["degree"].get<int>());
    case FamilyKind::fixed_shape:
      if (!j.contains("offsets")) throw JsonError("fixed-shape needs \"offsets\"");
      return CurveFamily::fixed_shape(pointset_from_json(j["offsets"]));
    default:
      return CurveFamily{*kind};
  }
}

inline Json witness_to_json(const Witness& w) {
  struct V {
    Json operator()(const LineWitness& l) const {
      Json j;
      j["type"] = "line";
      j["base"] = jio::point_to_json(l.base);
      j["dir"] = jio::point_to_json(l.dir);
      return j;
    }
    Json operator()(const CircleWitness& c) const {
      Json j;
      j["type"] = "circle";
      j["cx"] = jio::rat_to_json(c.cx);
      j["cy"] = jio::rat_to_json(c.cy);
      j["r2"] = jio::rat_to_json(c.r2);
      return j;
    }
    Json operator()(const RectilinearPolygon& p) const {
      Json j;
      j["type"] = "rectilinear-polygon";
      j["vertices"] = jio::points_to_json(p.vertices);
      return j;
    }
    Json operator()(const ChainWitness& c) const {
      Json j;
      j["type"] = "chain";
      j["points"] = jio::points_to_json(c.points);
      return j;
    }
    Json operator()(const TranslationWitness& t) const {
      Json j;
      j["type"] = "translate";
      j["t"] = jio::point_to_json(t.t);
      return j;
    }
    Json operator()(const BundleWitness& b) const {
      Json j;
      j["type"] = "bundle";
      Json lines = Json::array();
      for (const LineEq& l : b.lines) lines.push_back(to_json(l));
      j["lines"] = lines;
      return j;
    }
    Json operator()(const HullWitness& h) const {
      Json j;
      j["type"] = "hull";
      j["polygon"] = jio::points_to_json(h.polygon);
      j["strict"] = h.strict;
      return j;
    }
    Json operator()(const BoxWitness& b) const {
      Json j;
      j["type"] = "box";
      j["lo"] = jio::point_to_json(b.lo);
      j["hi"] = jio::point_to_json(b.hi);
      return j;
    }
  };
  return std::visit(V{}, w);
}

inline Witness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw JsonError("witness needs \"type\"");
  std::string type = j["type"].get<std::string>();
  if (type == "line")
    return LineWitness{jio::point_from_json(j.at("base")), jio::point_from_json(j.at("dir"))};
  if (type == "circle")
    return CircleWitness{jio::rat_from_json(j.at("cx")), jio::rat_from_json(j.at("cy")),
                         jio::rat_from_json(j.at("r2"))};
  if (type == "rectilinear-polygon")
    return RectilinearPolygon{jio::points_from_json(j.at("vertices"))};
  if (type == "chain") return ChainWitness{jio::points_from_json(j.at("points"))};
  if (type == "translate") return TranslationWitness{jio::point_from_json(j.at("t"))};
  if (type == "bundle") {
    BundleWitness b;
    for (const Json& l : j.at("lines")) b.lines.push_back(lineeq_from_json(l));
    return b;
  }
  if (type == "hull")
    return HullWitness{jio::points_from_json(j.at("polygon")), j.at("strict").get<bool>()};
  if (type == "box")
    return BoxWitness{jio::point_from_json(j.at("lo")), jio::point_from_json(j.at("hi"))};
  throw JsonError("unknown witness type: " + type);
}

inline Json to_json(const Curve& c) {
  Json j;
  j["family"] = family_name(c.family);
  j["params"] = witness_to_json(c.witness);
  j["covers"] = c.covers;
  return j;
}

inline Curve curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("params") ||
      !j.contains("covers"))
    throw JsonError("curve needs \"family\", \"params\", \"covers\"");
  Curve c;
  auto kind = parse_family(j["family"].get<std::string>());
  if (!kind) throw JsonError("unknown family: " + j["family"].get<std::string>());
  c.family = *kind;
  c.witness = witness_from_json(j["params"]);
  for (const Json& v : j["covers"]) c.covers.push_back(v.get<int>());
  return c;
}

inline Json to_json(const BoundsReport& b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  if (b.exact)
    j["exact"] = *b.exact;
  else
    j["exact"] = nullptr;
  j["method"] = b.method;
  return j;
}

inline BoundsReport bounds_from_json(const Json& j) {
  BoundsReport b;
  b.lower = j.at("lower").get<int>();
  b.upper = j.at("upper").get<int>();
  if (j.contains("exact") && !j["exact"].is_null()) b.exact = j["exact"].get<int>();
  b.method = j.value("method", std::string());
  return b;
}

inline Json to_json(const Cover& c) {
  Json j;
  j["pointset"] = to_json(c.pointset);
  j["family"] = to_json(c.family);
  Json curves = Json::array();
  for (const Curve& cv : c.curves) curves.push_back(to_json(cv));
  j["curves"] = curves;
  j["disjoint_on_p"] = c.disjoint_on_p;
  j["optimal"] = c.optimal;
  j["method"] = c.method;
  j["bounds"] = Json{{"lower", c.lower}, {"upper", c.upper}};
  return j;
}

inline Cover cover_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pointset") || !j.contains("family") ||
      !j.contains("curves"))
    throw JsonError("cover needs \"pointset\", \"family\", \"curves\"");
  Cover c;
  c.pointset = pointset_from_json(j["pointset"]);
  c.family = family_from_json(j["family"]);
  for (const Json& cv : j["curves"]) c.curves.push_back(curve_from_json(cv));
  c.disjoint_on_p = j.value("disjoint_on_p", false);
  c.optimal = j.value("optimal", false);
  c.method = j.value("method", std::string());
  if (j.contains("bounds")) {
    c.lower = j["bounds"].at("lower").get<int>();
    c.upper = j["bounds"].at("upper").get<int>();
  }
  return c;
}

inline Json to_json(const LineSet& ls) {
  Json lines = Json::array();
  for (const LineEq& l : ls.lines) lines.push_back(to_json(l));
  Json j;
  j["lines"] = lines;
  return j;
}

inline LineSet lineset_from_json(const Json& j) {
  LineSet ls;
  for (const Json& l : j.at("lines")) ls.lines.push_back(lineeq_from_json(l));
  return ls;
}

inline Json to_json(const TilingPattern& pat) {
  Json j;
  j["shape"] = Json{{"name", pat.shape.name},
                    {"offsets", jio::points_to_json(pat.shape.offsets.points)}};
  j["u"] = jio::point_to_json(pat.u);
  j["v"] = jio::point_to_json(pat.v);
  j["placements"] = jio::points_to_json(pat.placements);
  j["kind"] = pat.kind == TilingKind::exact_tiling ? "exact-tiling" : "tile-like";
  j["average"] = jio::rat_to_json(pat.average);
  return j;
}

inline TilingPattern pattern_from_json(const Json& j) {
  TilingPattern pat;
  const Json& sh = j.at("shape");
  pat.shape.name = sh.value("name", std::string("custom"));
  pat.shape.offsets = PointSet(2, jio::points_from_json(sh.at("offsets")));
  pat.u = jio::point_from_json(j.at("u"));
  pat.v = jio::point_from_json(j.at("v"));
  pat.placements = jio::points_from_json(j.at("placements"));
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact-tiling")
    pat.kind = TilingKind::exact_tiling;
  else if (kind == "tile-like")
    pat.kind = TilingKind::tile_like;
  else
    throw JsonError("unknown tiling kind: " + kind);
  pat.average = jio::rat_from_json(j.at("average"));
  return pat;
}

inline Json to_json(const IncidenceInstance& inst) {
  Json j;
  j["points"] = to_json(inst.points);
  Json curves = Json::array();
  for (const Curve& c : inst.curves) curves.push_back(to_json(c));
  j["curves"] = curves;
  j["incidences"] = inst.incidences;
  return j;
}

}  // namespace gridcover
