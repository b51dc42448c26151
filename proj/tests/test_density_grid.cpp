#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "extropy/density_grid.hpp"

using extropy::DensityGrid;

namespace {

/// Triangle density f(x) = 2x sampled on [0, 1]; its trapezoid mass is
/// exactly 1 at every node count because the integrand is linear.
DensityGrid triangle_grid(std::size_t nodes) {
  std::vector<double> values(nodes);
  const double delta = 1.0 / static_cast<double>(nodes - 1);
  for (std::size_t i = 0; i < nodes; ++i) {
    values[i] = 2.0 * static_cast<double>(i) * delta;
  }
  return DensityGrid(0.0, 1.0, std::move(values));
}

/// Binary-fraction samples on [0, 1] whose trapezoid mass is exactly 1, so
/// text and json round trips reproduce every byte.
DensityGrid dyadic_grid() {
  return DensityGrid(0.0, 1.0, {0.5, 0.75, 1.25, 1.0, 1.5});
}

}  // namespace

TEST_CASE("construction validates interval, values and mass") {
  CHECK_NOTHROW(DensityGrid(0.0, 1.0, {1.0, 1.0}));
  CHECK_THROWS_AS(DensityGrid(1.0, 1.0, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid(2.0, 1.0, {1.0, 1.0}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(DensityGrid(0.0, inf, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {1.5, -0.5, 1.5}), std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {1.0, nan}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {1.0, inf}), std::invalid_argument);
  // Mass 2, far outside the default tolerance.
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {2.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {1.0, 1.0}, -1e-9), std::invalid_argument);
  // The declared tolerance widens the acceptable mass band.
  CHECK_THROWS_AS(DensityGrid(0.0, 1.0, {1.02, 1.02}), std::invalid_argument);
  CHECK_NOTHROW(DensityGrid(0.0, 1.0, {1.02, 1.02}, 0.05));
}

TEST_CASE("nodes are uniformly spaced and hit both endpoints exactly") {
  const DensityGrid grid(2.0, 4.0, {0.5, 0.5, 0.5, 0.5, 0.5});
  CHECK(grid.size() == 5);
  CHECK(grid.lower() == 2.0);
  CHECK(grid.upper() == 4.0);
  CHECK(grid.delta_x() == 0.5);
  CHECK(grid.node(0) == 2.0);
  CHECK(grid.node(1) == 2.5);
  CHECK(grid.node(2) == 3.0);
  CHECK(grid.node(3) == 3.5);
  CHECK(grid.node(4) == 4.0);
  CHECK_THROWS_AS(grid.node(5), std::out_of_range);
  CHECK(grid.value(2) == 0.5);
  CHECK(grid.values().size() == 5);
}

TEST_CASE("quadrature of the stored samples is the density mass") {
  CHECK(dyadic_grid().quadrature() == 1.0);
  for (std::size_t nodes : {2u, 3u, 11u, 101u}) {
    CHECK(triangle_grid(nodes).quadrature() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("trapezoid integrates linear samples exactly") {
  const DensityGrid grid = triangle_grid(11);
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    samples[i] = 3.0 * grid.node(i) - 1.0;  // integral over [0,1] is 0.5
  }
  CHECK(extropy::trapezoid(grid, samples) == doctest::Approx(0.5).epsilon(1e-14));
  samples.pop_back();
  CHECK_THROWS_AS(extropy::trapezoid(grid, samples), std::invalid_argument);
}

TEST_CASE("normalized rescales a shape to unit mass") {
  const DensityGrid grid = DensityGrid::normalized(0.0, 1.0, {3.0, 3.0, 3.0});
  CHECK(grid.value(0) == 1.0);
  CHECK(grid.value(1) == 1.0);
  CHECK(grid.value(2) == 1.0);
  CHECK(grid.quadrature() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(DensityGrid::normalized(0.0, 1.0, {0.0, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid::normalized(0.0, 1.0, {1.0, -1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid::normalized(0.0, 1.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DensityGrid::normalized(1.0, 0.0, {1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("same_grid compares interval and node count") {
  const DensityGrid a(0.0, 1.0, {1.0, 1.0, 1.0});
  const DensityGrid b(0.0, 1.0, {2.0, 0.5, 0.5, 1.25, 0.0}, 0.5);
  const DensityGrid c(0.0, 2.0, {0.5, 0.5, 0.5});
  CHECK(extropy::same_grid(a, a));
  CHECK(extropy::same_grid(a, triangle_grid(3)));
  CHECK_FALSE(extropy::same_grid(a, b));
  CHECK_FALSE(extropy::same_grid(a, c));
}

TEST_CASE("subsample keeps every stride-th node and both endpoints") {
  const DensityGrid fine = triangle_grid(101);
  const DensityGrid coarse = extropy::subsample(fine, 11);
  CHECK(coarse.size() == 11);
  CHECK(coarse.lower() == fine.lower());
  CHECK(coarse.upper() == fine.upper());
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(coarse.value(i) == fine.value(10 * i));
    CHECK(coarse.node(i) == doctest::Approx(fine.node(10 * i)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(extropy::subsample(fine, 12), std::invalid_argument);
  CHECK_THROWS_AS(extropy::subsample(fine, 1), std::invalid_argument);
}

TEST_CASE("subsampled curved densities need the looser declared tolerance") {
  // f(x) = 3x^2: trapezoid overshoots by about delta_x^2 / 2, so the 11-node
  // companion of the fine grid carries mass about 1.005.
  std::vector<double> values(1001);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = static_cast<double>(i) / 1000.0;
    values[i] = 3.0 * x * x;
  }
  const DensityGrid fine = DensityGrid::normalized(0.0, 1.0, std::move(values));
  CHECK_THROWS_AS(extropy::subsample(fine, 11), std::invalid_argument);
  const DensityGrid coarse = extropy::subsample(fine, 11, 0.01);
  CHECK(coarse.quadrature() == doctest::Approx(1.005).epsilon(1e-4));
  CHECK(coarse.norm_tolerance() == 0.01);
}

TEST_CASE("text form round-trips bytes and values") {
  const DensityGrid grid = dyadic_grid();
  const std::string text = extropy::write_density_text(grid);
  CHECK(text ==
        "0\t0.5\n"
        "0.25\t0.75\n"
        "0.5\t1.25\n"
        "0.75\t1\n"
        "1\t1.5\n");
  std::istringstream in(text);
  const DensityGrid back = extropy::read_density_text(in);
  REQUIRE(back.size() == grid.size());
  CHECK(back.lower() == grid.lower());
  CHECK(back.upper() == grid.upper());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(back.value(i) == grid.value(i));
  }
  CHECK(extropy::write_density_text(back) == text);
}

TEST_CASE("text reader skips comments and blank lines and strips CR") {
  std::istringstream in(
      "# a header comment\n"
      "\n"
      "0\t0.5\r\n"
      "  0.25 0.75\n"
      "0.5\t1.25\n"
      "\t\n"
      "0.75\t1\n"
      "# trailing note\n"
      "1\t1.5\n");
  const DensityGrid grid = extropy::read_density_text(in);
  CHECK(grid.size() == 5);
  CHECK(grid.value(1) == 0.75);
}

TEST_CASE("text reader rejects malformed rows and non-uniform nodes") {
  {
    std::istringstream in("0\t1\n0.5\n1\t1\n");
    CHECK_THROWS_WITH_AS(extropy::read_density_text(in),
                         "density text line 2: expected two numeric columns",
                         std::invalid_argument);
  }
  {
    std::istringstream in("0\t1\t9\n1\t1\n");
    CHECK_THROWS_AS(extropy::read_density_text(in), std::invalid_argument);
  }
  {
    std::istringstream in("0\t1\n");
    CHECK_THROWS_AS(extropy::read_density_text(in), std::invalid_argument);
  }
  {
    std::istringstream in("1\t1\n0\t1\n");
    CHECK_THROWS_AS(extropy::read_density_text(in), std::invalid_argument);
  }
  {
    // Equal endpoints collapse the interval.
    std::istringstream in("0\t1\n0\t1\n");
    CHECK_THROWS_AS(extropy::read_density_text(in), std::invalid_argument);
  }
  {
    std::istringstream in("0\t1\n0.4\t1\n1\t1\n");
    CHECK_THROWS_WITH_AS(extropy::read_density_text(in),
                         "density node 1 is not on a uniform grid",
                         std::invalid_argument);
  }
}

TEST_CASE("json form round-trips bytes and values") {
  const DensityGrid grid = dyadic_grid();
  const std::string text = extropy::write_density_json(grid);
  CHECK(text ==
        "{\"lower\":0,\"upper\":1,\"values\":[0.5,0.75,1.25,1,1.5]}\n");
  std::istringstream in(text);
  const DensityGrid back = extropy::read_density_json(in);
  REQUIRE(back.size() == grid.size());
  CHECK(back.lower() == grid.lower());
  CHECK(back.upper() == grid.upper());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(back.value(i) == grid.value(i));
  }
  CHECK(extropy::write_density_json(back) == text);
}

TEST_CASE("json reader rejects malformed documents") {
  {
    std::istringstream in("{\"lower\":0,");
    CHECK_THROWS_AS(extropy::read_density_json(in), std::invalid_argument);
  }
  {
    std::istringstream in("[1,2,3]");
    CHECK_THROWS_AS(extropy::read_density_json(in), std::invalid_argument);
  }
  {
    std::istringstream in("{\"lower\":0,\"upper\":1}");
    CHECK_THROWS_AS(extropy::read_density_json(in), std::invalid_argument);
  }
  {
    std::istringstream in("{\"lower\":\"a\",\"upper\":1,\"values\":[1,1]}");
    CHECK_THROWS_AS(extropy::read_density_json(in), std::invalid_argument);
  }
  {
    std::istringstream in("{\"lower\":0,\"upper\":1,\"values\":[1,\"x\"]}");
    CHECK_THROWS_AS(extropy::read_density_json(in), std::invalid_argument);
  }
  {
    // Structurally valid but mass 2.
    std::istringstream in("{\"lower\":0,\"upper\":1,\"values\":[2,2]}");
    CHECK_THROWS_AS(extropy::read_density_json(in), std::invalid_argument);
  }
}

TEST_CASE("norm tolerance parameter reaches the readers") {
  std::istringstream text_in("0\t1.02\n1\t1.02\n");
  CHECK_NOTHROW(extropy::read_density_text(text_in, 0.05));
  std::istringstream json_in("{\"lower\":0,\"upper\":1,\"values\":[1.02,1.02]}");
  CHECK_NOTHROW(extropy::read_density_json(json_in, 0.05));
}
