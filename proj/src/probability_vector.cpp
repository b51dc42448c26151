#include "extropy/probability_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace extropy {

ProbabilityVector::ProbabilityVector(std::vector<double> masses)
    : masses_(std::move(masses)) {
  if (masses_.empty()) {
    throw std::invalid_argument("probability vector needs at least one mass");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    const double m = masses_[i];
    if (!(m >= 0.0 && m <= 1.0)) {  // negated comparison also rejects NaN
      throw std::invalid_argument("mass " + std::to_string(i) + " is " +
                                  std::to_string(m) + ", outside [0, 1]");
    }
    total += m;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw std::invalid_argument("masses sum to " + std::to_string(total) +
                                ", not 1 within 1e-9");
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform pmf needs n >= 1");
  }
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::normalized(std::vector<double> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("normalization needs at least one weight");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw std::invalid_argument("weight " + std::to_string(i) +
                                  " is not a finite non-negative value");
    }
    total += weights[i];
  }
  if (total <= 0.0) {
    throw std::invalid_argument("normalization needs a positive total weight");
  }
  for (double& w : weights) {
    w /= total;
  }
  return ProbabilityVector(std::move(weights));
}

ProbabilityVector complement(const ProbabilityVector& pv) {
  const std::size_t n = pv.size();
  if (n < 2) {
    throw std::domain_error("complement is undefined for a single outcome");
  }
  const double scale = static_cast<double>(n) - 1.0;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (1.0 - pv[i]) / scale;
  }
  return ProbabilityVector(std::move(out));
}

bool complement_is_contraction(std::size_t n) noexcept {
  return n >= 3;
}

std::vector<ProbabilityVector> iterate_complement(const ProbabilityVector& pv,
                                                  std::size_t steps) {
  if (pv.size() < 2) {
    throw std::domain_error("complement iteration needs n >= 2");
  }
  std::vector<ProbabilityVector> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(pv);
  for (std::size_t k = 0; k < steps; ++k) {
    trajectory.push_back(complement(trajectory.back()));
  }
  return trajectory;
}

ProbabilityVector refine(const ProbabilityVector& pv, std::size_t index, double split) {
  if (index >= pv.size()) {
    throw std::out_of_range("refine index " + std::to_string(index) +
                            " exceeds dimension " + std::to_string(pv.size()));
  }
  if (!(split >= 0.0 && split <= 1.0)) {
    throw std::domain_error("refine split must lie in [0, 1]");
  }
  std::vector<double> out;
  out.reserve(pv.size() + 1);
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (i == index) {
      out.push_back(split * pv[i]);
      out.push_back((1.0 - split) * pv[i]);
    } else {
      out.push_back(pv[i]);
    }
  }
  return ProbabilityVector(std::move(out));
}

double sup_distance(const ProbabilityVector& a, const ProbabilityVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sup distance needs equal dimensions");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double sup_distance_to_uniform(const ProbabilityVector& pv) {
  const double u = 1.0 / static_cast<double>(pv.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    worst = std::max(worst, std::abs(pv[i] - u));
  }
  return worst;
}

}  // namespace extropy
