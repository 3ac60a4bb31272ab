#include "pgeo/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgeo {

namespace {

using Cycle = std::vector<VertexId>;

// Counter-clockwise vertex order of each face seen from outside, read off
// the fixed tetrahedron net (F1 in the middle, F2 below, F3 left, F4 right).
std::vector<Cycle> tetrahedron_cycles() {
  return {
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}},
      {{1, 2, 4}, {1, 2, 3}, {2, 3, 4}},
      {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}},
      {{1, 3, 4}, {1, 2, 4}, {2, 3, 4}},
  };
}

// Cross net: F5 / F1 / F2 / F6 down the column, F3 left and F4 right of F1.
std::vector<Cycle> cube_cycles() {
  return {
      {{1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {1, 3, 5}},
      {{1, 2, 4}, {1, 2, 3}, {2, 3, 6}, {2, 4, 6}},
      {{1, 2, 3}, {1, 3, 5}, {3, 5, 6}, {2, 3, 6}},
      {{1, 4, 5}, {1, 2, 4}, {2, 4, 6}, {4, 5, 6}},
      {{1, 3, 5}, {1, 4, 5}, {4, 5, 6}, {3, 5, 6}},
      {{2, 3, 6}, {3, 5, 6}, {4, 5, 6}, {2, 4, 6}},
  };
}

int other_face(const VertexId& a, const VertexId& b, int self) {
  for (int f : a.faces) {
    if (f != self && b.incident_to(FaceId{f})) return f;
  }
  throw std::logic_error("vertex pair does not span an edge");
}

} // namespace

std::string to_string(SolidKind kind) {
  return kind == SolidKind::Tetrahedron ? "tetrahedron" : "cube";
}

SolidKind solid_kind_from_string(const std::string& name) {
  if (name == "tetrahedron") return SolidKind::Tetrahedron;
  if (name == "cube") return SolidKind::Cube;
  throw std::invalid_argument("unknown polyhedron '" + name + "'");
}

std::string to_string(FaceId face) { return "F" + std::to_string(face.index); }

FaceId face_from_string(const std::string& label) {
  if (label.size() < 2 || label[0] != 'F')
    throw std::invalid_argument("face label '" + label + "' must look like F<k>");
  int index = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9' || i > 3)
      throw std::invalid_argument("face label '" + label + "' must look like F<k>");
    index = index * 10 + (label[i] - '0');
  }
  return FaceId{index};
}

VertexId::VertexId(int a, int b, int c) : faces{a, b, c} {
  std::sort(faces.begin(), faces.end());
}

bool VertexId::incident_to(FaceId face) const {
  return std::find(faces.begin(), faces.end(), face.index) != faces.end();
}

std::string to_string(const VertexId& v) {
  return "{" + std::to_string(v.faces[0]) + "," + std::to_string(v.faces[1]) + "," +
         std::to_string(v.faces[2]) + "}";
}

PolyhedronModel::PolyhedronModel(SolidKind kind) : kind_(kind) {
  vertex_cycles_ = kind == SolidKind::Tetrahedron ? tetrahedron_cycles() : cube_cycles();
  for (const auto& cycle : vertex_cycles_) {
    for (const auto& v : cycle) {
      if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end())
        vertices_.push_back(v);
    }
  }
  std::sort(vertices_.begin(), vertices_.end());
  for (int f = 1; f <= face_count(); ++f) {
    const auto& cycle = vertex_cycles_[f - 1];
    std::vector<FaceId> ring;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      ring.emplace_back(other_face(cycle[i], cycle[(i + 1) % cycle.size()], f));
    neighbor_cycles_.push_back(std::move(ring));
  }
}

void PolyhedronModel::require_face(FaceId face) const {
  if (!has_face(face))
    throw std::domain_error(to_string(face) + " is not a face of the " + to_string(kind_));
}

std::vector<FaceId> PolyhedronModel::faces() const {
  std::vector<FaceId> out;
  for (int f = 1; f <= face_count(); ++f) out.emplace_back(f);
  return out;
}

bool PolyhedronModel::adjacent(FaceId a, FaceId b) const {
  if (!has_face(a) || !has_face(b) || a == b) return false;
  const auto& ring = neighbor_cycles_[a.index - 1];
  return std::find(ring.begin(), ring.end(), b) != ring.end();
}

bool PolyhedronModel::opposite(FaceId a, FaceId b) const {
  return kind_ == SolidKind::Cube && has_face(a) && has_face(b) && a.index + b.index == 7;
}

const std::vector<VertexId>& PolyhedronModel::vertex_cycle(FaceId face) const {
  require_face(face);
  return vertex_cycles_[face.index - 1];
}

const std::vector<FaceId>& PolyhedronModel::neighbor_cycle(FaceId face) const {
  require_face(face);
  return neighbor_cycles_[face.index - 1];
}

int PolyhedronModel::neighbor_slot(FaceId face, FaceId neighbor) const {
  const auto& ring = neighbor_cycle(face);
  auto it = std::find(ring.begin(), ring.end(), neighbor);
  if (it == ring.end())
    throw std::domain_error(to_string(face) + " and " + to_string(neighbor) + " are not adjacent");
  return static_cast<int>(it - ring.begin());
}

std::pair<VertexId, VertexId> PolyhedronModel::edge_anchor(FaceId home, FaceId shared) const {
  const int slot = neighbor_slot(home, shared);
  const auto& cycle = vertex_cycles_[home.index - 1];
  return {cycle[slot], cycle[(slot + 1) % cycle.size()]};
}

std::vector<std::pair<FaceId, FaceId>> PolyhedronModel::adjacencies() const {
  std::vector<std::pair<FaceId, FaceId>> out;
  for (int a = 1; a <= face_count(); ++a)
    for (int b = a + 1; b <= face_count(); ++b)
      if (adjacent(FaceId{a}, FaceId{b})) out.emplace_back(FaceId{a}, FaceId{b});
  return out;
}

PolyhedronModel build_model(SolidKind kind) { return PolyhedronModel(kind); }

const PolyhedronModel& tetrahedron() {
  static const PolyhedronModel model(SolidKind::Tetrahedron);
  return model;
}

const PolyhedronModel& cube() {
  static const PolyhedronModel model(SolidKind::Cube);
  return model;
}

const PolyhedronModel& model_for(SolidKind kind) {
  return kind == SolidKind::Tetrahedron ? tetrahedron() : cube();
}

std::vector<FaceId> neighbors_ccw(const PolyhedronModel& model, FaceId face) {
  return model.neighbor_cycle(face);
}

std::pair<VertexId, VertexId> edge_anchors(const PolyhedronModel& model, FaceId home,
                                           FaceId shared) {
  return model.edge_anchor(home, shared);
}

VertexId FaceRelabeling::operator()(const VertexId& v) const {
  return VertexId((*this)(v.faces[0]).index, (*this)(v.faces[1]).index,
                  (*this)(v.faces[2]).index);
}

int FaceRelabeling::preimage(FaceId face) const {
  auto it = std::find(images_.begin(), images_.end(), face);
  if (it == images_.end()) throw std::domain_error(to_string(face) + " has no preimage");
  return static_cast<int>(it - images_.begin()) + 1;
}

FaceRelabeling canonical_relabeling(const PolyhedronModel& model, FaceId n1, FaceId n2,
                                    int rotation) {
  if (!model.has_face(n1) || !model.has_face(n2))
    throw std::domain_error("relabeling faces must belong to the " + to_string(model.kind()));
  if (n1 == n2) throw std::domain_error("canonical relabeling needs two distinct faces");

  const auto& ring = model.neighbor_cycle(n1);
  if (model.kind() == SolidKind::Tetrahedron) {
    // ccw about n1 the pattern reads (n2, n4, n3).
    const int s = model.neighbor_slot(n1, n2);
    return FaceRelabeling({n1, n2, ring[(s + 2) % 3], ring[(s + 1) % 3]});
  }

  FaceId second = n2;
  if (model.opposite(n1, n2)) {
    if (rotation < 0 || rotation > 3)
      throw std::domain_error("opposite-face relabeling rotation must be in 0..3");
    second = ring[rotation];
  }
  // ccw about n1 the pattern reads (n2, n4, n5, n3); n6 is opposite n1.
  const int s = model.neighbor_slot(n1, second);
  return FaceRelabeling({n1, second, ring[(s + 3) % 4], ring[(s + 1) % 4], ring[(s + 2) % 4],
                         FaceId{7 - n1.index}});
}

std::vector<FaceRelabeling> all_relabelings(const PolyhedronModel& model) {
  std::vector<FaceRelabeling> out;
  for (FaceId a : model.faces())
    for (FaceId b : model.neighbor_cycle(a)) out.push_back(canonical_relabeling(model, a, b));
  return out;
}

} // namespace pgeo
