#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extropy/contours.hpp"
#include "extropy/measures.hpp"
#include "extropy/probability_vector.hpp"

using extropy::ContourGrid;
using extropy::ContourRow;

TEST_CASE("smallest lattices are enumerated exactly") {
  CHECK_THROWS_AS(extropy::make_contour_grid(0), std::invalid_argument);

  const ContourGrid m1 = extropy::make_contour_grid(1);
  CHECK(m1.resolution == 1);
  REQUIRE(m1.rows.size() == 3);
  // Lexicographic (i, j): (0,0,1), (0,1,0), (1,0,0).
  CHECK(m1.rows[0].p1 == 0.0);
  CHECK(m1.rows[0].p2 == 0.0);
  CHECK(m1.rows[0].p3 == 1.0);
  CHECK(m1.rows[1].p2 == 1.0);
  CHECK(m1.rows[2].p1 == 1.0);
  for (const ContourRow& row : m1.rows) {
    CHECK(row.entropy == 0.0);
    CHECK(row.extropy == 0.0);
  }

  const ContourGrid m2 = extropy::make_contour_grid(2);
  REQUIRE(m2.rows.size() == 6);
  CHECK(m2.rows[1].p1 == 0.0);
  CHECK(m2.rows[1].p2 == 0.5);
  CHECK(m2.rows[1].p3 == 0.5);
  // Two-point half-half masses: both measures are log 2.
  CHECK(m2.rows[1].entropy == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(m2.rows[1].extropy == doctest::Approx(0.6931471805599453).epsilon(1e-15));
}

TEST_CASE("row count and membership follow the lattice") {
  for (std::size_t m : {1u, 2u, 5u, 9u, 50u}) {
    const ContourGrid grid = extropy::make_contour_grid(m);
    CHECK(grid.rows.size() == (m + 1) * (m + 2) / 2);
    const double max_extropy = extropy::max_extropy_value(3);
    const double log3 = std::log(3.0);
    for (const ContourRow& row : grid.rows) {
      CHECK(row.p1 + row.p2 + row.p3 == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(row.entropy >= row.extropy - 1e-12);
      CHECK(row.entropy <= log3 + 1e-12);
      CHECK(row.extropy <= max_extropy + 1e-12);
    }
  }
}

TEST_CASE("rows agree with the measure functions at the center") {
  const ContourGrid grid = extropy::make_contour_grid(9);
  bool found = false;
  for (const ContourRow& row : grid.rows) {
    if (row.p1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15) &&
        row.p2 == doctest::Approx(1.0 / 3.0).epsilon(1e-15)) {
      found = true;
      CHECK(row.entropy == doctest::Approx(std::log(3.0)).epsilon(1e-14));
      CHECK(row.extropy ==
            doctest::Approx(2.0 * std::log(1.5)).epsilon(1e-14));
    }
  }
  CHECK(found);
}

TEST_CASE("lexicographic order is stable") {
  const ContourGrid grid = extropy::make_contour_grid(4);
  REQUIRE(grid.rows.size() == 15);
  // First block has p1 = 0 with p2 ascending.
  for (std::size_t j = 0; j <= 4; ++j) {
    CHECK(grid.rows[j].p1 == 0.0);
    CHECK(grid.rows[j].p2 == doctest::Approx(0.25 * static_cast<double>(j))
                                  .epsilon(1e-15));
  }
  CHECK(grid.rows[5].p1 == 0.25);
  CHECK(grid.rows[5].p2 == 0.0);
  CHECK(grid.rows.back().p1 == 1.0);
}

TEST_CASE("fine lattice brackets the reference entropy level and peaks at center") {
  const ContourGrid grid = extropy::make_contour_grid(200);
  REQUIRE(grid.rows.size() == 201 * 202 / 2);

  const double level = 0.9028;
  std::size_t near_level = 0;
  bool above = false;
  bool below = false;
  for (const ContourRow& row : grid.rows) {
    if (std::fabs(row.entropy - level) <= 1e-3) {
      ++near_level;
      if (row.entropy >= level) {
        above = true;
      }
      if (row.entropy <= level) {
        below = true;
      }
    }
  }
  CHECK(near_level >= 50);
  CHECK(above);
  CHECK(below);

  const auto center_distance = [](const ContourRow& row) {
    const double d1 = row.p1 - 1.0 / 3.0;
    const double d2 = row.p2 - 1.0 / 3.0;
    const double d3 = row.p3 - 1.0 / 3.0;
    return d1 * d1 + d2 * d2 + d3 * d3;
  };
  std::size_t argmax = 0;
  double best_extropy = -1.0;
  double best_distance = 4.0;
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    const ContourRow& row = grid.rows[r];
    if (row.extropy > best_extropy) {
      best_extropy = row.extropy;
      argmax = r;
    }
    best_distance = std::min(best_distance, center_distance(row));
  }
  // The winner must be a nearest-to-center lattice point. 200 is not
  // divisible by 3, so three permutations of (0.335, 0.335, 0.33) tie for
  // that spot and the argmax lands on one of them.
  CHECK(center_distance(grid.rows[argmax]) <= best_distance + 1e-12);
  double masses[3] = {grid.rows[argmax].p1, grid.rows[argmax].p2,
                      grid.rows[argmax].p3};
  std::sort(masses, masses + 3);
  CHECK(masses[0] == 66.0 / 200.0);
  CHECK(masses[1] == 67.0 / 200.0);
  CHECK(masses[2] == 67.0 / 200.0);
}
