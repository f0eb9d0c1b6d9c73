#include <doctest.h>

#include <cmath>

#include "potevo/potential.hpp"

using namespace potevo;

TEST_CASE("shifted exponential samples match direct evaluation") {
  const PotentialGrid grid = sample_model(ShiftedExp{}, 4, 0.0, 10.0);
  REQUIRE(grid.values.size() == 16);
  CHECK(grid.dx == 10.0 / 16.0);
  CHECK(grid.values[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  for (int k = 0; k < 16; ++k) {
    CHECK(grid.values[k] ==
          doctest::Approx(std::exp(1.0 - 10.0 * k / 16.0)).epsilon(1e-14));
  }
}

TEST_CASE("NaI model samples the repulsive wall") {
  const RittnerExp nai{0.0299, 2.163, 5.102};
  const PotentialGrid grid = sample_model(nai, 4, 0.0, 10.0);
  REQUIRE(grid.values.size() == 16);
  for (int k = 0; k < 16; ++k) {
    const double x = 10.0 * k / 16.0;
    CHECK(grid.values[k] ==
          doctest::Approx(0.0299 * std::exp(-2.163 * (x - 5.102))).epsilon(1e-14));
  }
  // strictly decreasing on increasing x
  for (int k = 0; k + 1 < 16; ++k) CHECK(grid.values[k] > grid.values[k + 1]);
}

TEST_CASE("tabulated constant grid") {
  const Tabulated tab{std::vector<double>(8, 3.25)};
  const PotentialGrid grid = sample_model(PotentialModel{tab}, 3, 0.0, 10.0);
  CHECK(grid.dx == 10.0 / 8.0);
  for (int k = 0; k < 8; ++k) CHECK(grid.values[k] == 3.25);
}

TEST_CASE("lattice is exactly uniform") {
  const PotentialGrid grid = sample_model(ShiftedExp{}, 6, -1.5, 7.25);
  for (Eigen::Index k = 0; k + 1 < grid.size(); ++k) {
    CHECK((grid.x_at(k + 1) - grid.x_at(k)) - grid.dx == 0.0);
  }
}

TEST_CASE("resampling at n+1 qubits and taking even indices matches n qubits") {
  const RittnerExp nai{0.0299, 2.163, 5.102};
  for (int n = 2; n <= 5; ++n) {
    const PotentialGrid coarse = sample_model(nai, n, 0.0, 10.0);
    const PotentialGrid fine = sample_model(nai, n + 1, 0.0, 10.0);
    for (Eigen::Index k = 0; k < coarse.size(); ++k) {
      CHECK(fine.values[2 * k] == coarse.values[k]);
    }
  }
}

TEST_CASE("state index labels") {
  CHECK(state_index_label(0, 3) == "000");
  CHECK(state_index_label(7, 3) == "111");
  CHECK(state_index_label(3, 3) == "011");
  CHECK(state_index_label(4, 3) == "100");
  CHECK_THROWS_AS(state_index_label(8, 3), std::out_of_range);
}

TEST_CASE("sampling rejects bad inputs") {
  CHECK_THROWS_AS(sample_model(ShiftedExp{}, 0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_model(ShiftedExp{}, 3, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_model(RittnerExp{1.0, -2.0, 0.0}, 3, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_model(PotentialModel{Tabulated{{1.0, 2.0, 3.0}}}, 2, 0.0, 1.0),
                  std::invalid_argument);
  // overflowing evaluation names the offending index
  CHECK_THROWS_WITH_AS(sample_model(RittnerExp{1.0, 1000.0, 800.0}, 1, 0.0, 1.0),
                       doctest::Contains("index 0"), std::domain_error);
}
