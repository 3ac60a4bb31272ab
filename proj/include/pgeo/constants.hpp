#pragma once

namespace pgeo {

// sqrt(3) to full double precision; every operation shares this one value.
inline constexpr double kSqrt3 = 1.7320508075688772935274463415058723669428;

// Absolute tolerance for domain membership and edge/vertex classification.
inline constexpr double kEps = 1e-9;

// Two blind landscape values within this distance of the minimum are ties.
inline constexpr double kTieTolerance = 1e-9;

} // namespace pgeo
