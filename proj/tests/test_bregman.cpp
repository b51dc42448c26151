#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "extropy/bregman.hpp"
#include "extropy/divergence.hpp"
#include "extropy/probability_vector.hpp"
#include "support/random_pmf.hpp"

using extropy::BregmanGenerator;
using extropy::ProbabilityVector;

namespace {

/// Interior pmf with every mass at least margin / n.
ProbabilityVector interior_pmf(std::mt19937_64& rng, std::size_t n,
                               double margin = 0.1) {
  const ProbabilityVector raw = test_support::random_pmf(rng, n);
  std::vector<double> masses(n);
  for (std::size_t i = 0; i < n; ++i) {
    masses[i] = (1.0 - margin) * raw[i] + margin / static_cast<double>(n);
  }
  return ProbabilityVector::normalized(std::move(masses));
}

/// Central difference of phi along free coordinate i (the last mass absorbs
/// the move), for checking the analytic gradients.
double fd_free_gradient(const BregmanGenerator& generator,
                        const ProbabilityVector& s, std::size_t i, double h) {
  std::vector<double> plus = s.masses();
  std::vector<double> minus = s.masses();
  plus[i] += h;
  plus[s.size() - 1] -= h;
  minus[i] -= h;
  minus[s.size() - 1] += h;
  return (generator.phi(ProbabilityVector(std::move(plus))) -
          generator.phi(ProbabilityVector(std::move(minus)))) /
         (2.0 * h);
}

}  // namespace

TEST_CASE("analytic gradients match central differences") {
  std::mt19937_64 rng(20240829);
  const BregmanGenerator generators[] = {extropy::neg_entropy_generator(),
                                         extropy::neg_extropy_generator(),
                                         extropy::half_squared_norm_generator()};
  for (const BregmanGenerator& generator : generators) {
    for (std::size_t n = 2; n <= 8; ++n) {
      const ProbabilityVector s = interior_pmf(rng, n);
      const std::vector<double> grad = generator.gradient(s);
      REQUIRE(grad.size() == n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double fd = fd_free_gradient(generator, s, i, 1e-6);
        CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("the neg-entropy generator reproduces the first divergence") {
  std::mt19937_64 rng(20240830);
  const BregmanGenerator generator = extropy::neg_entropy_generator();
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const ProbabilityVector p = test_support::random_pmf(rng, n);
      const ProbabilityVector s = test_support::random_pmf(rng, n);
      const double expected = extropy::kl_divergence(p, s).value();
      CHECK(std::fabs(extropy::bregman(generator, p, s) - expected) <= 1e-10);
    }
  }
}

TEST_CASE("the neg-extropy generator reproduces the complementary divergence") {
  std::mt19937_64 rng(20240831);
  const BregmanGenerator generator = extropy::neg_extropy_generator();
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const ProbabilityVector p = test_support::random_pmf(rng, n);
      const ProbabilityVector s = test_support::random_pmf(rng, n);
      const double expected = extropy::complementary_divergence(p, s).value();
      CHECK(std::fabs(extropy::bregman(generator, p, s) - expected) <= 1e-10);
    }
  }
}

TEST_CASE("the half-squared-norm generator reproduces the euclidean form") {
  std::mt19937_64 rng(20240901);
  const BregmanGenerator generator = extropy::half_squared_norm_generator();
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const ProbabilityVector p = test_support::random_pmf_with_zeros(rng, n);
      const ProbabilityVector s = test_support::random_pmf_with_zeros(rng, n);
      const double expected = extropy::half_euclidean(p, s);
      CHECK(std::fabs(extropy::bregman(generator, p, s) - expected) <= 1e-12);
    }
  }
}

TEST_CASE("bregman divergences vanish at equal arguments and stay non-negative") {
  std::mt19937_64 rng(20240902);
  const BregmanGenerator generators[] = {extropy::neg_entropy_generator(),
                                         extropy::neg_extropy_generator(),
                                         extropy::half_squared_norm_generator()};
  for (const BregmanGenerator& generator : generators) {
    for (int trial = 0; trial < 30; ++trial) {
      const ProbabilityVector p = interior_pmf(rng, 6);
      const ProbabilityVector s = interior_pmf(rng, 6);
      CHECK(std::fabs(extropy::bregman(generator, p, p)) <= 1e-12);
      CHECK(extropy::bregman(generator, p, s) >= -1e-12);
    }
  }
}

TEST_CASE("generator potentials are midpoint convex") {
  std::mt19937_64 rng(20240903);
  const BregmanGenerator generators[] = {extropy::neg_entropy_generator(),
                                         extropy::neg_extropy_generator(),
                                         extropy::half_squared_norm_generator()};
  for (const BregmanGenerator& generator : generators) {
    for (int trial = 0; trial < 30; ++trial) {
      const ProbabilityVector p = test_support::random_pmf(rng, 5);
      const ProbabilityVector s = test_support::random_pmf(rng, 5);
      std::vector<double> mid(5);
      for (std::size_t i = 0; i < 5; ++i) {
        mid[i] = 0.5 * (p[i] + s[i]);
      }
      const double midpoint = generator.phi(ProbabilityVector(std::move(mid)));
      const double average = 0.5 * (generator.phi(p) + generator.phi(s));
      CHECK(midpoint <= average + 1e-12);
    }
  }
}

TEST_CASE("boundary arguments are rejected where the gradient blows up") {
  const ProbabilityVector boundary({0.5, 0.5, 0.0});
  const ProbabilityVector unit({0.0, 1.0, 0.0});
  const ProbabilityVector p = ProbabilityVector::uniform(3);
  CHECK_THROWS_AS(extropy::bregman(extropy::neg_entropy_generator(), p, boundary),
                  std::domain_error);
  CHECK_THROWS_AS(extropy::bregman(extropy::neg_extropy_generator(), p, unit),
                  std::domain_error);
  CHECK_NOTHROW(
      extropy::bregman(extropy::half_squared_norm_generator(), p, boundary));
  CHECK_NOTHROW(
      extropy::bregman(extropy::neg_extropy_generator(), p, boundary));
}

TEST_CASE("dimension mismatches are rejected") {
  const ProbabilityVector p({0.5, 0.5});
  const ProbabilityVector s = ProbabilityVector::uniform(3);
  CHECK_THROWS_AS(extropy::bregman(extropy::neg_entropy_generator(), p, s),
                  std::invalid_argument);
}
