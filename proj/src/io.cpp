#include "pgeo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "pgeo/oracle.hpp"

namespace pgeo {

namespace {

using Json = nlohmann::ordered_json;

const Json& require_field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw QueryError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw QueryError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double read_number(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = require_field(obj, key, path);
  if (!v.is_number()) throw QueryError(join(path, key), "malformed number");
  return v.get<double>();
}

int read_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) throw QueryError(field, "expected an integer");
  return v.get<int>();
}

FaceId read_face(const PolyhedronModel& model, const Json& obj, const std::string& key,
                 const std::string& path) {
  const Json& v = require_field(obj, key, path);
  if (!v.is_string()) throw QueryError(join(path, key), "expected a face label string");
  const std::string label = v.get<std::string>();
  FaceId face;
  try {
    face = face_from_string(label);
  } catch (const std::exception&) {
    throw QueryError(join(path, key), "unknown face label " + label);
  }
  if (!model.has_face(face)) throw QueryError(join(path, key), "unknown face label " + label);
  return face;
}

SurfaceRep read_rep(const PolyhedronModel& model, const Json& obj, const std::string& path,
                    double tol) {
  if (!obj.is_object()) throw QueryError(path, "expected an object");
  SurfaceRep rep{read_face(model, obj, "home", path), read_face(model, obj, "shared", path),
                 read_number(obj, "x", path), read_number(obj, "y", path)};
  if (auto err = validate_rep(model, rep, tol)) {
    const char c = err->front();
    const std::string field = (c == 'x' || c == 'y') && (*err)[1] == ' '
                                  ? join(path, std::string(1, c))
                                  : path;
    throw QueryError(field, *err);
  }
  return rep;
}

void read_options(const Json& obj, QueryOptions& opt) {
  if (!obj.is_object()) throw QueryError("options", "expected an object");
  for (const auto& [key, v] : obj.items()) {
    const std::string field = "options." + key;
    if (key == "tolerance") {
      if (!v.is_number() || v.get<double>() <= 0) throw QueryError(field, "expected a positive number");
      opt.tolerance = v.get<double>();
    } else if (key == "max_faces") {
      opt.max_faces = read_int(v, field);
      if (opt.max_faces < 2) throw QueryError(field, "must be at least 2");
    } else if (key == "mesh_n") {
      opt.mesh_n = read_int(v, field);
      if (opt.mesh_n < 1) throw QueryError(field, "must be at least 1");
    } else if (key == "diagnostics") {
      if (!v.is_boolean()) throw QueryError(field, "expected a boolean");
      opt.diagnostics = v.get<bool>();
    } else if (key == "svg") {
      if (!v.is_object()) throw QueryError(field, "expected an object");
      if (v.contains("scale")) opt.svg.scale = read_number(v, "scale", field);
      if (v.contains("stroke")) opt.svg.stroke = read_number(v, "stroke", field);
      if (v.contains("trail_color")) opt.svg.trail_color = v.at("trail_color").get<std::string>();
      if (v.contains("face_fill")) opt.svg.face_fill = v.at("face_fill").get<std::string>();
    } else {
      throw QueryError(field, "unknown option");
    }
  }
}

Json faces_json(const std::vector<FaceId>& faces) {
  Json out = Json::array();
  for (FaceId f : faces) out.push_back(to_string(f));
  return out;
}

std::vector<FaceId> faces_from_json(const Json& j) {
  std::vector<FaceId> out;
  for (const auto& f : j) out.push_back(face_from_string(f.get<std::string>()));
  return out;
}

void check_invariants(const QueryResult& r, double tol) {
  if (r.minimizers.empty()) throw InvariantError("result has no minimizers");
  for (const Minimizer& m : r.detail.minimizers)
    if (std::abs(m.value - r.distance) > tol)
      throw InvariantError("minimizer " + m.label() + " does not attain the distance");
  for (const Geodesic& g : r.detail.geodesics)
    if (std::abs(g.trail.length - r.distance) > tol)
      throw InvariantError("geodesic length differs from the distance");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

} // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Dist: return "dist";
    case Mode::Path: return "path";
    case Mode::Oracle: return "oracle";
    case Mode::Svg: return "svg";
  }
  return "dist";
}

Mode mode_from_string(const std::string& name) {
  if (name == "dist") return Mode::Dist;
  if (name == "path") return Mode::Path;
  if (name == "oracle") return Mode::Oracle;
  if (name == "svg") return Mode::Svg;
  throw QueryError("mode", "unknown mode " + name);
}

Query parse_query(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw QueryError("record", std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw QueryError("record", "expected an object");

  Query q;
  const Json& poly = require_field(j, "polyhedron", "");
  if (!poly.is_string()) throw QueryError("polyhedron", "expected a string");
  try {
    q.polyhedron = solid_kind_from_string(poly.get<std::string>());
  } catch (const std::exception&) {
    throw QueryError("polyhedron", "unknown polyhedron " + poly.get<std::string>());
  }
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw QueryError("mode", "expected a string");
    q.mode = mode_from_string(j["mode"].get<std::string>());
  }
  if (j.contains("options")) read_options(j["options"], q.options);

  const PolyhedronModel& model = model_for(q.polyhedron);
  q.p1 = read_rep(model, require_field(j, "p1", ""), "p1", q.options.tolerance);
  q.p2 = read_rep(model, require_field(j, "p2", ""), "p2", q.options.tolerance);
  return q;
}

QueryResult run_query(const Query& query) {
  const PolyhedronModel& model = model_for(query.polyhedron);
  const double tol = query.options.tolerance;
  const SurfaceRep p1 = snap_to_face(model, query.p1, tol);
  const SurfaceRep p2 = snap_to_face(model, query.p2, tol);

  QueryResult out;
  const bool with_paths = query.mode == Mode::Path || query.mode == Mode::Svg;
  out.detail = with_paths ? geodesics(model, p1, p2, tol) : surface_distance(model, p1, p2, tol);
  out.distance = out.detail.distance;
  for (const Minimizer& m : out.detail.minimizers)
    out.minimizers.push_back({m.label(), m.landscape.faces});

  if (with_paths) {
    out.paths.emplace();
    for (const Geodesic& g : out.detail.geodesics) {
      std::vector<PathPiece> pieces;
      for (const TrailSegment& s : g.trail.segments)
        pieces.push_back({s.face, s.start.shared, s.start.x, s.start.y, s.end.x, s.end.y});
      out.paths->push_back(std::move(pieces));
    }
  }
  if (query.options.diagnostics) out.diagnostics = out.detail.values;
  if (query.mode == Mode::Oracle) {
    OracleReport rep;
    const UnfoldOracleResult u = oracle_unfold_distance(model, p1, p2, query.options.max_faces, tol);
    rep.unfold = u.distance;
    rep.unfold_argmin = u.argmin;
    rep.mesh_n = query.options.mesh_n;
    rep.mesh = oracle_mesh_distance(model, p1, p2, query.options.mesh_n);
    out.oracle = rep;
  }
  check_invariants(out, std::max(tol, 1e-9));
  return out;
}

std::string format_result(const QueryResult& r) {
  Json j;
  j["distance"] = r.distance;
  j["minimizers"] = Json::array();
  for (const auto& m : r.minimizers) j["minimizers"].push_back({{"id", m.id}, {"faces", faces_json(m.faces)}});
  if (r.paths) {
    Json paths = Json::array();
    for (const auto& path : *r.paths) {
      Json p = Json::array();
      for (const PathPiece& s : path)
        p.push_back({{"face", to_string(s.face)},
                     {"shared", to_string(s.shared)},
                     {"x1", s.x1},
                     {"y1", s.y1},
                     {"x2", s.x2},
                     {"y2", s.y2}});
      paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
  }
  if (r.diagnostics) {
    Json d = Json::object();
    for (const auto& [id, v] : *r.diagnostics) d[landscape_label(id)] = v;
    j["diagnostics"] = std::move(d);
  }
  if (r.oracle) {
    Json argmin = Json::array();
    for (const Landscape& l : r.oracle->unfold_argmin) argmin.push_back(faces_json(l.faces));
    j["oracle"] = {{"unfold", r.oracle->unfold},
                   {"unfold_delta", r.oracle->unfold - r.distance},
                   {"unfold_argmin", std::move(argmin)},
                   {"mesh", r.oracle->mesh},
                   {"mesh_n", r.oracle->mesh_n},
                   {"mesh_delta", r.oracle->mesh - r.distance}};
  }
  return j.dump();
}

QueryResult parse_result(const std::string& text) {
  const Json j = Json::parse(text);
  QueryResult r;
  r.distance = j.at("distance").get<double>();
  for (const auto& m : j.at("minimizers"))
    r.minimizers.push_back({m.at("id").get<std::string>(), faces_from_json(m.at("faces"))});
  if (j.contains("paths")) {
    r.paths.emplace();
    for (const auto& path : j["paths"]) {
      std::vector<PathPiece> pieces;
      for (const auto& s : path)
        pieces.push_back({face_from_string(s.at("face").get<std::string>()),
                          face_from_string(s.at("shared").get<std::string>()),
                          s.at("x1").get<double>(), s.at("y1").get<double>(),
                          s.at("x2").get<double>(), s.at("y2").get<double>()});
      r.paths->push_back(std::move(pieces));
    }
  }
  if (j.contains("diagnostics")) {
    r.diagnostics.emplace();
    for (const auto& [key, v] : j["diagnostics"].items())
      (*r.diagnostics)[std::stoi(key.substr(1))] = v.get<double>();
  }
  if (j.contains("oracle")) {
    OracleReport o;
    const Json& oj = j["oracle"];
    o.unfold = oj.at("unfold").get<double>();
    for (const auto& l : oj.at("unfold_argmin")) o.unfold_argmin.push_back(Landscape{faces_from_json(l)});
    o.mesh = oj.at("mesh").get<double>();
    o.mesh_n = oj.at("mesh_n").get<int>();
    r.oracle = o;
  }
  return r;
}

std::string format_error(const std::string& message) {
  Json j;
  j["error"] = message;
  return j.dump();
}

std::string render_svg(const Query& query, const QueryResult& result) {
  const PolyhedronModel& model = model_for(query.polyhedron);
  const SvgStyle& style = query.options.svg;
  const double s = style.scale;
  const double gap = 0.6;

  auto bounds = [](const Orientation& o) {
    Eigen::Vector2d lo = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
    Eigen::Vector2d hi = -lo;
    for (const auto& fp : o.placement)
      for (const auto& p : fp.polygon) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
    return std::make_pair(lo, hi);
  };

  std::string body;
  double cursor = 0.0;
  Eigen::Vector2d lo = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector2d hi = -lo;
  for (const Geodesic& g : result.detail.geodesics) {
    const Orientation& o = g.orientation;
    const Minimizer& m = result.detail.minimizers[g.minimizer];
    const auto [glo, ghi] = bounds(o);
    const Eigen::Vector2d shift(cursor - glo.x(), 0.0);
    cursor += ghi.x() - glo.x() + gap;
    lo = lo.cwiseMin(glo + shift);
    hi = hi.cwiseMax(ghi + shift);
    // Document coordinates: scaled, shifted, y flipped once.
    auto doc = [&](const Eigen::Vector2d& p) {
      const Eigen::Vector2d q = p + shift;
      return fmt(s * q.x()) + "," + fmt(-s * q.y());
    };
    auto text_at = [&](const Eigen::Vector2d& p, const std::string& cls, const std::string& t) {
      const Eigen::Vector2d q = p + shift;
      return "    <text class=\"" + cls + "\" x=\"" + fmt(s * q.x()) + "\" y=\"" + fmt(-s * q.y()) +
             "\">" + t + "</text>\n";
    };

    body += "  <g class=\"orientation\" id=\"" + m.label() + "-" + std::to_string(g.minimizer) +
            "\">\n";
    body += text_at({glo.x(), ghi.y() + 0.15}, "title", m.label() + " " + to_string(m.landscape));
    std::vector<std::pair<std::string, std::string>> vertex_labels;
    for (const FacePlacement& fp : o.placement) {
      std::string pts;
      Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
      for (const auto& p : fp.polygon) {
        pts += (pts.empty() ? "" : " ") + doc(p);
        centroid += p;
      }
      centroid /= static_cast<double>(fp.polygon.size());
      body += "    <polygon class=\"face\" fill=\"" + style.face_fill +
              "\" stroke=\"#333333\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
      body += text_at(centroid, "face-label", to_string(fp.face));
      const auto& cycle = model.vertex_cycle(fp.face);
      const int slot = model.neighbor_slot(fp.face, fp.chart_shared);
      for (std::size_t k = 0; k < fp.polygon.size(); ++k) {
        const std::string label = to_string(cycle[(k + slot) % cycle.size()]);
        const std::string where = doc(fp.polygon[k]);
        if (std::find(vertex_labels.begin(), vertex_labels.end(), std::make_pair(where, label)) !=
            vertex_labels.end())
          continue;
        vertex_labels.emplace_back(where, label);
        body += text_at(fp.polygon[k], "vertex-label", label);
      }
    }

    std::vector<Eigen::Vector2d> line;
    if (g.trail.segments.empty()) {
      line = {g.trail.from, g.trail.to};
    } else {
      auto placed = [&](const TrailSegment& seg, const SurfaceRep& r) {
        return o.placement_of(seg.face).isometry(with_shared(model, r, o.placement_of(seg.face).chart_shared).xy());
      };
      line.push_back(placed(g.trail.segments.front(), g.trail.segments.front().start));
      for (const TrailSegment& seg : g.trail.segments) line.push_back(placed(seg, seg.end));
    }
    std::string pts;
    for (const auto& p : line) pts += (pts.empty() ? "" : " ") + doc(p);
    body += "    <polyline class=\"trail\" fill=\"none\" stroke=\"" + style.trail_color +
            "\" stroke-width=\"" + fmt(style.stroke) + "\" points=\"" + pts + "\"/>\n";
    for (const auto& [name, p] : {std::make_pair("p1", g.trail.from), std::make_pair("p2", g.trail.to)}) {
      const Eigen::Vector2d q = p + shift;
      body += "    <circle class=\"" + std::string(name) + "\" cx=\"" + fmt(s * q.x()) + "\" cy=\"" +
              fmt(-s * q.y()) + "\" r=\"" + fmt(2.0 * style.stroke) + "\"/>\n";
    }
    body += "  </g>\n";
  }

  if (result.detail.geodesics.empty()) {
    lo = Eigen::Vector2d::Zero();
    hi = Eigen::Vector2d::Ones();
  }
  hi.y() += 0.3;  // room for titles
  const Eigen::Vector2d size = hi - lo;
  const double margin = 0.05 * std::max(size.x(), size.y());
  const double vx = s * (lo.x() - margin), vy = -s * (hi.y() + margin);
  const double vw = s * (size.x() + 2 * margin), vh = s * (size.y() + 2 * margin);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(vx) + " " +
         fmt(vy) + " " + fmt(vw) + " " + fmt(vh) + "\">\n";
  out += "  <style>text { font-family: sans-serif; font-size: " + fmt(0.08 * s) +
         "px; } .vertex-label { fill: #666666; font-size: " + fmt(0.05 * s) + "px; }</style>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

} // namespace pgeo
