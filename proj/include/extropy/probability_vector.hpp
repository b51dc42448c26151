#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace extropy {

/// Validated point on the unit simplex: masses in [0, 1] with unit sum
/// within kSumTolerance. Construction rejects anything else; rescaling
/// happens only through the explicit `normalized` factory, never silently.
class ProbabilityVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  explicit ProbabilityVector(std::vector<double> masses);

  /// Uniform pmf on n outcomes. Requires n >= 1.
  static ProbabilityVector uniform(std::size_t n);

  /// Rescales non-negative weights to unit sum. Requires a positive total.
  static ProbabilityVector normalized(std::vector<double> weights);

  std::size_t size() const noexcept { return masses_.size(); }
  double operator[](std::size_t i) const { return masses_[i]; }
  const std::vector<double>& masses() const noexcept { return masses_; }
  std::span<const double> span() const noexcept { return masses_; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  std::vector<double> masses_;
};

/// Complementary pmf q_i = (1 - p_i) / (n - 1). Requires n >= 2.
ProbabilityVector complement(const ProbabilityVector& pv);

/// Whether the complement map contracts sup-distances on dimension n. True
/// for n >= 3 (factor 1/(n-1)); false for n = 2, where the map just swaps
/// the two masses.
bool complement_is_contraction(std::size_t n) noexcept;

/// Trajectory pv, T(pv), T^2(pv), ..., T^steps(pv) under the complement map
/// T; returns steps + 1 states. Requires n >= 2.
std::vector<ProbabilityVector> iterate_complement(const ProbabilityVector& pv,
                                                  std::size_t steps);

/// Splits mass `index` into the adjacent pair (split * p, (1 - split) * p),
/// leaving the other masses in place. Requires split in [0, 1].
ProbabilityVector refine(const ProbabilityVector& pv, std::size_t index, double split);

/// Sup-norm distance between pmfs of equal dimension.
double sup_distance(const ProbabilityVector& a, const ProbabilityVector& b);

/// Sup-norm distance from pv to the uniform pmf of its dimension.
double sup_distance_to_uniform(const ProbabilityVector& pv);

}  // namespace extropy
