#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgeo/coords.hpp"
#include "pgeo/distance.hpp"
#include "pgeo/model.hpp"

namespace pgeo {

enum class Mode { Dist, Path, Oracle, Svg };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

struct SvgStyle {
  double scale = 100.0;  // document units per edge length
  double stroke = 2.0;
  std::string trail_color = "#c0392b";
  std::string face_fill = "#eef2f7";
};

struct QueryOptions {
  double tolerance = kTieTolerance;
  int max_faces = 6;
  int mesh_n = 64;
  bool diagnostics = false;
  SvgStyle svg;
};

struct Query {
  SolidKind polyhedron = SolidKind::Cube;
  SurfaceRep p1;
  SurfaceRep p2;
  Mode mode = Mode::Dist;
  QueryOptions options;
};

/// Malformed or out-of-domain query input.
class QueryError : public std::runtime_error {
public:
  QueryError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// A computed result that contradicts its own invariants.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Parses one JSON record:
///   {"polyhedron": "cube", "p1": {"home": "F1", "shared": "F2", "x": .5, "y": .2},
///    "p2": {...}, "mode"?: "dist", "options"?: {"tolerance", "max_faces", "mesh_n",
///    "diagnostics", "svg": {"scale", "stroke", "trail_color", "face_fill"}}}
Query parse_query(const std::string& text);

struct PathPiece {
  FaceId face;
  FaceId shared;  // chart of the coordinates
  double x1, y1, x2, y2;
};

struct OracleReport {
  double unfold = 0.0;
  std::vector<Landscape> unfold_argmin;
  double mesh = 0.0;
  int mesh_n = 0;
};

struct QueryResult {
  double distance = 0.0;
  struct Entry {
    std::string id;
    std::vector<FaceId> faces;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> minimizers;
  std::optional<std::vector<std::vector<PathPiece>>> paths;
  std::optional<std::map<int, double>> diagnostics;
  std::optional<OracleReport> oracle;

  /// Full engine output, kept for rendering; not serialised.
  DistanceResult detail;
};

QueryResult run_query(const Query& query);

/// One-line JSON record; numbers in shortest round-trip form.
std::string format_result(const QueryResult& result);
QueryResult parse_result(const std::string& text);

std::string format_error(const std::string& message);

/// SVG 1.1 document: one group per minimizing orientation.
std::string render_svg(const Query& query, const QueryResult& result);

} // namespace pgeo
