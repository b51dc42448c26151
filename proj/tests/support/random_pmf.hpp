#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "extropy/probability_vector.hpp"

namespace test_support {

/// Uniform draw from the simplex interior (normalized -log of uniforms).
/// Deterministic for a caller-seeded engine.
inline extropy::ProbabilityVector random_pmf(std::mt19937_64& rng,
                                             std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(n);
  for (double& w : weights) {
    double u = unit(rng);
    while (u <= 0.0) {
      u = unit(rng);
    }
    w = -std::log(u);
  }
  return extropy::ProbabilityVector::normalized(std::move(weights));
}

/// Like random_pmf but with exact zeros sprinkled in (each mass is zeroed
/// with probability ~0.3, keeping at least one positive weight).
inline extropy::ProbabilityVector random_pmf_with_zeros(std::mt19937_64& rng,
                                                        std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(n, 0.0);
  bool any = false;
  for (double& w : weights) {
    if (unit(rng) < 0.3) {
      continue;
    }
    double u = unit(rng);
    while (u <= 0.0) {
      u = unit(rng);
    }
    w = -std::log(u);
    any = true;
  }
  if (!any) {
    weights[0] = 1.0;
  }
  return extropy::ProbabilityVector::normalized(std::move(weights));
}

/// Near-uniform pmf with every mass below ~1.9/n: weights 1 + 0.9 zeta,
/// zeta uniform on [-1, 1].
inline extropy::ProbabilityVector small_mass_pmf(std::mt19937_64& rng,
                                                 std::size_t n) {
  std::uniform_real_distribution<double> zeta(-1.0, 1.0);
  std::vector<double> weights(n);
  for (double& w : weights) {
    w = 1.0 + 0.9 * zeta(rng);
  }
  return extropy::ProbabilityVector::normalized(std::move(weights));
}

}  // namespace test_support
