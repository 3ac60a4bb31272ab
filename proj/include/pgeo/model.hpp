#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace pgeo {

enum class SolidKind { Tetrahedron, Cube };

std::string to_string(SolidKind kind);
SolidKind solid_kind_from_string(const std::string& name);

/// Face label F<index>, 1-based.
struct FaceId {
  int index = 0;

  constexpr FaceId() = default;
  constexpr explicit FaceId(int i) : index(i) {}

  friend constexpr auto operator<=>(FaceId, FaceId) = default;
};

std::string to_string(FaceId face);
FaceId face_from_string(const std::string& label);

/// A vertex is named by the three faces meeting there, kept sorted.
struct VertexId {
  std::array<int, 3> faces{};

  constexpr VertexId() = default;
  VertexId(int a, int b, int c);

  bool incident_to(FaceId face) const;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& vertex);

/// Static combinatorics of one of the two fixed labelled solids.
///
/// The per-face counter-clockwise vertex cycles (viewed from outside the
/// solid) are the only hand-entered data; neighbour cycles and edge anchors
/// are read off them.
class PolyhedronModel {
public:
  explicit PolyhedronModel(SolidKind kind);

  SolidKind kind() const { return kind_; }
  int face_count() const { return static_cast<int>(vertex_cycles_.size()); }
  /// Vertices per face: 3 for the tetrahedron, 4 for the cube.
  int sides() const { return kind_ == SolidKind::Tetrahedron ? 3 : 4; }

  std::vector<FaceId> faces() const;
  const std::vector<VertexId>& vertices() const { return vertices_; }

  bool has_face(FaceId face) const {
    return face.index >= 1 && face.index <= face_count();
  }
  bool adjacent(FaceId a, FaceId b) const;
  /// Only meaningful on the cube: n + m = 7.
  bool opposite(FaceId a, FaceId b) const;

  /// Counter-clockwise vertex cycle of a face, starting at a fixed vertex.
  const std::vector<VertexId>& vertex_cycle(FaceId face) const;
  /// Counter-clockwise cycle of neighbouring faces; entry i lies across the
  /// edge vertex_cycle[i] -> vertex_cycle[i+1].
  const std::vector<FaceId>& neighbor_cycle(FaceId face) const;
  /// Position of `neighbor` in neighbor_cycle(face).
  int neighbor_slot(FaceId face, FaceId neighbor) const;
  /// Ordered pair (u, v) of the shared edge with v directly after u in the
  /// counter-clockwise order about `home`.
  std::pair<VertexId, VertexId> edge_anchor(FaceId home, FaceId shared) const;

  std::vector<std::pair<FaceId, FaceId>> adjacencies() const;

private:
  void require_face(FaceId face) const;

  SolidKind kind_;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> vertex_cycles_;
  std::vector<std::vector<FaceId>> neighbor_cycles_;
};

PolyhedronModel build_model(SolidKind kind);

/// The two shared models, built once.
const PolyhedronModel& tetrahedron();
const PolyhedronModel& cube();
const PolyhedronModel& model_for(SolidKind kind);

std::vector<FaceId> neighbors_ccw(const PolyhedronModel& model, FaceId face);
std::pair<VertexId, VertexId> edge_anchors(const PolyhedronModel& model,
                                           FaceId home, FaceId shared);

/// Bijection from canonical labels n1..nk onto concrete faces. The mapping is
/// an orientation-preserving symmetry of the labelled solid.
class FaceRelabeling {
public:
  FaceRelabeling() = default;
  explicit FaceRelabeling(std::vector<FaceId> images) : images_(std::move(images)) {}

  /// Image of canonical label n_k.
  FaceId operator()(int canonical) const { return images_.at(canonical - 1); }
  FaceId operator()(FaceId canonical) const { return (*this)(canonical.index); }
  VertexId operator()(const VertexId& v) const;
  /// Canonical label k with image == face.
  int preimage(FaceId face) const;
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<FaceId>& images() const { return images_; }

  friend bool operator==(const FaceRelabeling&, const FaceRelabeling&) = default;

private:
  std::vector<FaceId> images_;
};

/// Relabeling with n1 -> `n1`. For the tetrahedron and for adjacent cube
/// faces, n2 -> `n2`. For opposite cube faces n6 -> `n2` and `rotation`
/// (0..3) picks the neighbour of n1 playing n2 from its stored cycle.
FaceRelabeling canonical_relabeling(const PolyhedronModel& model, FaceId n1,
                                    FaceId n2, int rotation = 0);

/// All orientation-preserving symmetries of the solid (12 or 24).
std::vector<FaceRelabeling> all_relabelings(const PolyhedronModel& model);

} // namespace pgeo
