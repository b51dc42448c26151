#pragma once

#include <cstddef>
#include <vector>

#include "extropy/probability_vector.hpp"

namespace extropy {

/// Pointwise kernel triple at a single mass p:
///   s = -p log p           entropy contribution, s(0) = 0
///   t = -(1-p) log(1-p)    extropy contribution, t(1) = 0
///   u = s - t              per-mass entropy-over-extropy excess
/// u is positive on (0, 1/2), zero at 0, 1/2, 1, negative on (1/2, 1), and
/// antisymmetric about 1/2.
struct KernelValues {
  double s;
  double t;
  double u;
};

/// Kernel values at p. Requires p in [0, 1]; the 0 log 0 = 0 convention is
/// an explicit branch, not an epsilon guard.
KernelValues pointwise_kernels(double p);

/// Entropy H(p) = -sum p_i log p_i, natural log throughout.
double entropy(const ProbabilityVector& pv);

/// Extropy J(p) = -sum (1 - p_i) log(1 - p_i), the dual measure built from
/// the non-occurrence masses.
double extropy(const ProbabilityVector& pv);

/// Entropy of the two-point pmf (p, 1-p), which equals its extropy.
/// Requires p in [0, 1].
double binary_measure(double p);

/// H(p) - J(p), computed as the kernel sum of u(p_i). Non-negative; zero
/// exactly when at most two masses are positive.
double gap(const ProbabilityVector& pv);

/// Sum of binary measures of the individual masses; equals H(p) + J(p).
double partition_sum(const ProbabilityVector& pv);

/// Maximum extropy on dimension n: (n-1) log(n/(n-1)), attained at the
/// uniform pmf. Returns 0 for n = 1; strictly increasing, approaching 1.
double max_extropy_value(std::size_t n);

/// Small-mass approximation of extropy: 1 - 0.5 * sum p_i^2.
double extropy_quadratic_approx(const ProbabilityVector& pv);

/// Entropy gained by splitting a mass p1 into (split * p1, (1-split) * p1):
/// p1 * binary_measure(split). Requires p1 and split in [0, 1].
double entropy_refinement_delta(double p1, double split);

/// Extropy gained by the same split. With f(x) = (1-x) log(1-x), this is
/// f(p1) - f(split * p1) - f((1-split) * p1).
double extropy_refinement_delta(double p1, double split);

/// Entropy of a joint table: rows of equal positive length, cells in [0, 1]
/// summing to 1 within the simplex tolerance.
double joint_entropy(const std::vector<std::vector<double>>& joint);

}  // namespace extropy
