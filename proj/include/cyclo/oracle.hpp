// Brute-force validators. None of these touch the forest, minor-gcd or
// a-profile code paths: they scan points, solve linear systems and apply the
// shoelace formula directly.
#pragma once

#include "cyclo/exact.hpp"
#include "cyclo/intlin.hpp"
#include "cyclo/zonotope.hpp"

#include <functional>
#include <vector>

namespace cyclo::oracle {

/// Integer points of the permutohedron conv{permutations of (1..n)}, found by
/// scanning [1, n]^n against its facet inequalities. n <= 5.
BigInt permutohedron_lattice_points_direct(int n);

/// Integer points of the semiopen brick spanned by the columns, found by
/// scanning the brick's bounding box and solving for the coefficients.
/// Requires rows <= 6, cols <= rows and a box of at most 10^7 points.
BigInt semiopen_count_direct(const intlin::IntMatrix& columns);

/// Calls fn(component_sizes) for every forest on n labeled vertices, found by
/// testing every edge subset of K_n for acyclicity. n <= 6.
void for_each_forest_direct(int n, const std::function<void(const std::vector<int>&)>& fn);

/// Area of the hexagon conv{permutations of (1,2,3)} by the shoelace formula,
/// as coeff / sqrt(3).
zonotope::NormalizedVolume hexagon_area_direct();

inline constexpr int kPermutohedronOracleBound = 5;
inline constexpr int kBrickOracleMaxDim = 6;
inline constexpr long long kBrickOracleMaxBox = 10'000'000;
inline constexpr int kForestOracleBound = 6;

}  // namespace cyclo::oracle
