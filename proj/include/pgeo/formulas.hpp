#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "pgeo/constants.hpp"

namespace pgeo {

/// Point coordinates entering the closed-form tables.
template <typename Scalar>
struct ChartPair {
  Scalar x1, y1, x2, y2;
};

// Trail lengths between p1 = (F_n1, F_n2, x1, y1) and p2 = (F_n2, F_n1, x2, y2)
// on the tetrahedron, landscapes L1..L5.
template <typename Scalar>
std::array<Scalar, 5> tetrahedron_formulas(const ChartPair<Scalar>& p) {
  using std::sqrt;
  const Scalar r3 = Scalar(kSqrt3);
  const auto [x1, y1, x2, y2] = p;
  auto hyp = [](Scalar a, Scalar b) { return sqrt(a * a + b * b); };
  return {hyp(x1 + x2 - 1, y1 + y2),
          hyp(x1 - x2 + 1, y1 - y2),
          hyp(x1 - x2 - 1, y1 - y2),
          hyp(x1 + x2, y1 + y2 - r3),
          hyp(x1 + x2 - 2, y1 + y2 - r3)};
}

// Cube, adjacent faces: p1 = (F_n1, F_n2, x1, y1), p2 = (F_n2, F_n1, x2, y2);
// landscapes L1..L3.
template <typename Scalar>
std::array<Scalar, 3> cube_adjacent_formulas(const ChartPair<Scalar>& p) {
  using std::sqrt;
  const auto [x1, y1, x2, y2] = p;
  auto hyp = [](Scalar a, Scalar b) { return sqrt(a * a + b * b); };
  return {hyp(x1 + x2 - 1, y1 + y2),
          hyp(x1 + y2, y1 - x2 + 1),
          hyp(x1 - y2 - 1, y1 + x2)};
}

// Cube, opposite faces: p1 = (F_n1, F_n2, x1, y1), p2 = (F_n6, F_n2, x2, y2);
// landscapes L4..L15 in that order.
template <typename Scalar>
std::array<Scalar, 12> cube_opposite_formulas(const ChartPair<Scalar>& p) {
  using std::sqrt;
  const auto [x1, y1, x2, y2] = p;
  auto hyp = [](Scalar a, Scalar b) { return sqrt(a * a + b * b); };
  return {hyp(x1 + x2 - 1, y1 + y2 + 1),   // L4
          hyp(y1 - y2, x1 - x2 + 2),       // L5
          hyp(y1 - y2, x1 - x2 - 2),       // L6
          hyp(x1 + x2 - 1, y1 + y2 - 3),   // L7
          hyp(x1 + y2, y1 - x2 + 2),       // L8
          hyp(y1 + x2 - 2, x1 - y2 + 2),   // L9
          hyp(x1 + y2 - 2, y1 - x2 - 2),   // L10
          hyp(y1 + x2, x1 - y2 - 2),       // L11
          hyp(x1 - y2 - 1, y1 + x2 + 1),   // L12
          hyp(y1 - x2 + 1, x1 + y2 + 1),   // L13
          hyp(x1 - y2 + 1, y1 + x2 - 3),   // L14
          hyp(y1 - x2 - 1, x1 + y2 - 3)};  // L15
}

/// Face sequence of landscape L<id> in canonical labels n1.. (1-based).
/// Tetrahedron ids 1..5; cube ids 1..3 (adjacent) and 4..15 (opposite).
inline std::vector<int> tetrahedron_family(int id) {
  static const std::array<std::vector<int>, 5> table{{
      {1, 2}, {1, 3, 2}, {1, 4, 2}, {1, 3, 4, 2}, {1, 4, 3, 2}}};
  return table.at(id - 1);
}

inline std::vector<int> cube_family(int id) {
  static const std::array<std::vector<int>, 15> table{{
      {1, 2}, {1, 3, 2}, {1, 4, 2},
      {1, 2, 6}, {1, 3, 6}, {1, 4, 6}, {1, 5, 6},
      {1, 2, 3, 6}, {1, 3, 5, 6}, {1, 5, 4, 6}, {1, 4, 2, 6},
      {1, 2, 4, 6}, {1, 3, 2, 6}, {1, 5, 3, 6}, {1, 4, 5, 6}}};
  return table.at(id - 1);
}

} // namespace pgeo
