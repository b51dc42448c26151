#pragma once

#include <cstddef>

#include "extropy/probability_vector.hpp"

namespace extropy {

/// Divergence result on the extended half-line: a finite value >= 0 or
/// positive infinity. Tiny negative rounding residues (within
/// kClampTolerance of zero) are clamped to 0 and flagged; anything more
/// negative is rejected as a logic error upstream.
class ExtendedNonNegative {
 public:
  static constexpr double kClampTolerance = 1e-12;

  /// Finite zero.
  ExtendedNonNegative() = default;

  static ExtendedNonNegative finite(double value);
  static ExtendedNonNegative infinity() noexcept;

  bool is_infinite() const noexcept { return infinite_; }
  bool was_clamped() const noexcept { return clamped_; }

  /// The finite value, or +inf when is_infinite().
  double value() const noexcept { return value_; }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
  bool clamped_ = false;
};

/// Kullback-Leibler divergence D(p||s) = sum over p_i > 0 of p_i log(p_i/s_i).
/// Infinite exactly when some p_i > 0 meets s_i = 0. Dimensions must match.
ExtendedNonNegative kl_divergence(const ProbabilityVector& p,
                                  const ProbabilityVector& s);

/// Complementary divergence
/// D^c(p||s) = sum over p_i < 1 of (1-p_i) log((1-p_i)/(1-s_i)),
/// the relative-extropy analogue. Infinite exactly when some p_i < 1 meets
/// s_i = 1. Dimensions must match.
ExtendedNonNegative complementary_divergence(const ProbabilityVector& p,
                                             const ProbabilityVector& s);

/// Half squared Euclidean distance 0.5 * sum (p_i - s_i)^2, the small-mass
/// approximation of the complementary divergence.
double half_euclidean(const ProbabilityVector& p, const ProbabilityVector& s);

/// Both divergences between p and its own complement q, by closed forms:
///   kl  = sum_{p_i > 0} p_i log(p_i / (1 - p_i)) + log(n-1)
///   ckl = (n-1) * ( sum_{q_i > 0} q_i log(q_i / (1 - q_i)) + log(n-1) )
struct OddsDivergences {
  ExtendedNonNegative kl;
  ExtendedNonNegative ckl;
};

/// Requires n >= 2. For n >= 3 the ckl component is bounded by
/// dc_upper_bound(n); for n = 2 both components are unbounded over the
/// simplex.
OddsDivergences odds_divergences(const ProbabilityVector& p);

/// Supremum of the complementary odds divergence on dimension n:
/// (n-1) log((n-1)/(n-2)), attained at the degenerate corners; strictly
/// decreasing in n with limit 1. Requires n >= 3.
double dc_upper_bound(std::size_t n);

}  // namespace extropy
