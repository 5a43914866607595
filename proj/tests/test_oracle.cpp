#include "doctest.h"

#include "cyclo/forests.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/zonotope.hpp"

#include <map>

using namespace cyclo;
using intlin::IntMatrix;

TEST_CASE("permutohedron point scan") {
  const int phi[] = {1, 2, 7, 38, 291};
  for (int n = 1; n <= oracle::kPermutohedronOracleBound; ++n)
    CHECK(oracle::permutohedron_lattice_points_direct(n) == phi[n - 1]);
  CHECK_THROWS_AS(oracle::permutohedron_lattice_points_direct(oracle::kPermutohedronOracleBound + 1),
                  zonotope::BoundError);
}

TEST_CASE("brick point scan") {
  CHECK(oracle::semiopen_count_direct(IntMatrix(3, 0)) == 1);
  CHECK(oracle::semiopen_count_direct(IntMatrix::identity(3)) == 1);
  CHECK(oracle::semiopen_count_direct(IntMatrix::from_columns({{2, 0}, {0, 3}})) == 6);
  CHECK(oracle::semiopen_count_direct(IntMatrix::from_columns({{1, 1}, {1, -1}})) == 2);
  CHECK(oracle::semiopen_count_direct(IntMatrix::from_columns({{1, 1}, {2, 2}})) == 0);
  CHECK(oracle::semiopen_count_direct(IntMatrix::from_columns({{2, 4, 0}})) == 2);
  CHECK_THROWS_AS(oracle::semiopen_count_direct(IntMatrix(7, 1)), zonotope::BoundError);
  CHECK_THROWS_AS(oracle::semiopen_count_direct(IntMatrix(2, 3)), zonotope::BoundError);
  CHECK_THROWS_AS(oracle::semiopen_count_direct(IntMatrix::from_columns({{400, 0, 0}, {0, 400, 0}, {0, 0, 400}})),
                  zonotope::BoundError);
}

TEST_CASE("forest scan") {
  const int phi[] = {1, 2, 7, 38, 291, 2932};
  for (int n = 1; n <= oracle::kForestOracleBound; ++n) {
    long count = 0;
    std::map<std::size_t, long> by_components;
    oracle::for_each_forest_direct(n, [&](const std::vector<int>& sizes) {
      ++count;
      ++by_components[sizes.size()];
      int total = 0;
      for (int s : sizes) total += s;
      CHECK(total == n);
    });
    CHECK(count == phi[n - 1]);
    CHECK(by_components[1] == cayley(n));
  }
  CHECK_THROWS(oracle::for_each_forest_direct(oracle::kForestOracleBound + 1, [](const std::vector<int>&) {}));
}

TEST_CASE("hexagon area") {
  auto area = oracle::hexagon_area_direct();
  CHECK(area.coeff == 9);
  CHECK(area.radicand == 3);
  CHECK(area == zonotope::permutohedron_volume(3));
}
