#pragma once

namespace fastmix {

// Numeric tolerances shared across the library. Feasibility-style checks sit
// at 1e-12; derived quantities compared across independent computations get
// 1e-9 of slack.
inline constexpr double kFeasibilityTol = 1e-12;
inline constexpr double kRowSumTol = 1e-12;
inline constexpr double kReversibilityTol = 1e-12;
inline constexpr double kScheduleTvTol = 1e-12;
inline constexpr double kCrossCheckTol = 1e-9;

// Eigensolver: cyclic rotations until the off-diagonal Frobenius norm drops
// below kJacobiOffTol (scaled by the matrix norm), capped at kJacobiMaxSweeps.
inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 50;

// Exhaustive-enumeration caps for the oracle.
inline constexpr int kExactSetCap = 20;       // vertex/edge conductance, 2^n masks
inline constexpr int kExactMatchingSetCap = 16;  // matching conductance
inline constexpr int kExactMatchingEdgeCap = 20; // branch-and-bound matching
inline constexpr int kExactFractionalEdgeCap = 12;  // 3^m half-integral search

// Randomized rounding retries before giving up with a warning.
inline constexpr int kRoundingMaxAttempts = 64;

// Mixing-time evolution stops at ceil((64/gap) * log(1/(xi^2 pi_min))).
inline constexpr double kMixingCapFactor = 64.0;

}  // namespace fastmix
