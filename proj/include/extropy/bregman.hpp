#pragma once

#include <functional>
#include <string>
#include <vector>

#include "extropy/probability_vector.hpp"

namespace extropy {

/// Strictly convex potential on the simplex with its gradient taken in the
/// n-1 free coordinates (the last mass is determined by the others, so the
/// gradient has n-1 components). `gradient` may throw std::domain_error
/// where the potential is not differentiable; for the log-based built-ins
/// that is the simplex boundary.
struct BregmanGenerator {
  std::string name;
  std::function<double(const ProbabilityVector&)> phi;
  std::function<std::vector<double>(const ProbabilityVector&)> gradient;
};

/// Bregman divergence phi(p) - phi(s) - <grad phi(s), p - s> over the free
/// coordinates. Requires equal dimensions and an s where `gradient` is
/// defined. Non-negative for strictly convex phi, zero at p = s.
double bregman(const BregmanGenerator& generator, const ProbabilityVector& p,
               const ProbabilityVector& s);

/// phi(p) = sum p_i log p_i (negated entropy). Gradient component i is
/// log s_i - log s_n; the divergence is the Kullback-Leibler divergence.
/// Gradient requires every mass positive.
BregmanGenerator neg_entropy_generator();

/// phi(p) = sum (1-p_i) log(1-p_i) (negated extropy). Gradient component i
/// is log(1-s_n) - log(1-s_i); the divergence is the complementary
/// divergence. Gradient requires every mass below 1.
BregmanGenerator neg_extropy_generator();

/// phi(p) = 0.5 * sum p_i^2. Gradient component i is s_i - s_n; the
/// divergence is half the squared Euclidean distance. Defined everywhere.
BregmanGenerator half_squared_norm_generator();

}  // namespace extropy
