// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SQKD_TOLERANCES_HPP
#define SQKD_TOLERANCES_HPP

namespace sqkd {

// Structural checks: unitarity, Hermiticity, trace, probability sums,
// algebraic identities between decompositions and statistics.
inline constexpr double kStructuralTol = 1e-9;

// Spectral quantities: eigenvalues and entropies after diagonalization.
inline constexpr double kSpectralTol = 1e-8;

// Probabilities below this are treated as zero-probability events
// (undefined conditionals, skipped collapse branches).
inline constexpr double kZeroProbabilityTol = 1e-12;

// Slack admitted when testing a candidate optimizer point against the
// constraint set. Values inside the slack are clamped to the exact range
// before the objective is evaluated, so reported minima stay feasible.
inline constexpr double kFeasibilitySlack = 1e-9;

}  // namespace sqkd

#endif
