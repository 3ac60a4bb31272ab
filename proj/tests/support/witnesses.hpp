#pragma once

// Point pairs known to attain their distance in one specific landscape,
// written in canonical labels n_k and realised through a relabeling.

#include <array>
#include <vector>

#include "pgeo/coords.hpp"
#include "pgeo/model.hpp"

namespace pgeo::testing {

struct CanonicalRep {
  int home;    // n_home
  int shared;  // n_shared
  double x, y;
};

struct Witness {
  int landscape;  // L<landscape>
  CanonicalRep p1, p2;
};

inline SurfaceRep realise(const FaceRelabeling& r, const CanonicalRep& c) {
  return {r(c.home), r(c.shared), c.x, c.y};
}

inline std::vector<Witness> tetrahedron_witnesses() {
  const double h = (10 * kSqrt3 - 1) / 20;
  return {{1, {1, 2, 0.5, 0.2}, {2, 1, 0.5, 0.2}},
          {2, {1, 2, 4.0 / 9, 0.75}, {2, 1, 5.0 / 9, 0.75}},
          {3, {1, 2, 5.0 / 9, 0.75}, {2, 1, 4.0 / 9, 0.75}},
          {4, {1, 2, 10.0 / 21, h}, {2, 1, 10.0 / 21, h}},
          {5, {1, 2, 11.0 / 21, h}, {2, 1, 11.0 / 21, h}}};
}

inline std::vector<Witness> cube_witnesses() {
  return {{1, {1, 2, 0.5, 0.2}, {2, 1, 0.5, 0.2}},
          {2, {1, 2, 0.1, 0.9}, {2, 1, 0.9, 0.9}},
          {3, {1, 2, 0.9, 0.9}, {2, 1, 0.1, 0.9}},
          {4, {1, 2, 0.5, 0.2}, {6, 2, 0.5, 0.2}},
          {5, {1, 3, 0.5, 0.2}, {6, 3, 0.5, 0.2}},
          {6, {1, 4, 0.5, 0.2}, {6, 4, 0.5, 0.2}},
          {7, {1, 5, 0.5, 0.2}, {6, 5, 0.5, 0.2}},
          {8, {1, 2, 0.5, 0.1}, {6, 2, 0.9, 0.5}},
          {9, {1, 3, 0.5, 0.1}, {6, 3, 0.9, 0.5}},
          {10, {1, 5, 0.5, 0.1}, {6, 5, 0.9, 0.5}},
          {11, {1, 4, 0.5, 0.1}, {6, 4, 0.9, 0.5}},
          {12, {1, 2, 0.5, 0.1}, {6, 2, 0.1, 0.5}},
          {13, {1, 3, 0.5, 0.1}, {6, 3, 0.1, 0.5}},
          {14, {1, 5, 0.5, 0.1}, {6, 5, 0.1, 0.5}},
          {15, {1, 4, 0.5, 0.1}, {6, 4, 0.1, 0.5}}};
}

} // namespace pgeo::testing
