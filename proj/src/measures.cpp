#include "extropy/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace extropy {
namespace {

// -p log p with the explicit 0 log 0 = 0 branch.
double entropy_term(double p) {
  return p > 0.0 ? -p * std::log(p) : 0.0;
}

// -(1-p) log(1-p) with the explicit branch at p = 1.
double extropy_term(double p) {
  return p < 1.0 ? -(1.0 - p) * std::log1p(-p) : 0.0;
}

// (1-p) log(1-p), zero at p = 1; the signed form used by refinement deltas.
double occupancy_term(double p) {
  return p < 1.0 ? (1.0 - p) * std::log1p(-p) : 0.0;
}

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

KernelValues pointwise_kernels(double p) {
  require_unit_interval(p, "kernel argument");
  const double s = entropy_term(p);
  const double t = extropy_term(p);
  return {s, t, s - t};
}

double entropy(const ProbabilityVector& pv) {
  double total = 0.0;
  for (const double p : pv.masses()) {
    total += entropy_term(p);
  }
  return total;
}

double extropy(const ProbabilityVector& pv) {
  double total = 0.0;
  for (const double p : pv.masses()) {
    total += extropy_term(p);
  }
  return total;
}

double binary_measure(double p) {
  require_unit_interval(p, "binary measure argument");
  return entropy_term(p) + extropy_term(p);
}

double gap(const ProbabilityVector& pv) {
  double total = 0.0;
  for (const double p : pv.masses()) {
    total += entropy_term(p) - extropy_term(p);
  }
  return total;
}

double partition_sum(const ProbabilityVector& pv) {
  double total = 0.0;
  for (const double p : pv.masses()) {
    total += entropy_term(p) + extropy_term(p);
  }
  return total;
}

double max_extropy_value(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("dimension must be at least 1");
  }
  if (n == 1) {
    return 0.0;
  }
  const double d = static_cast<double>(n);
  return (d - 1.0) * std::log(d / (d - 1.0));
}

double extropy_quadratic_approx(const ProbabilityVector& pv) {
  double sum_squares = 0.0;
  for (const double p : pv.masses()) {
    sum_squares += p * p;
  }
  return 1.0 - 0.5 * sum_squares;
}

double entropy_refinement_delta(double p1, double split) {
  require_unit_interval(p1, "refined mass");
  require_unit_interval(split, "split fraction");
  return p1 * binary_measure(split);
}

double extropy_refinement_delta(double p1, double split) {
  require_unit_interval(p1, "refined mass");
  require_unit_interval(split, "split fraction");
  return occupancy_term(p1) - occupancy_term(split * p1) -
         occupancy_term((1.0 - split) * p1);
}

double joint_entropy(const std::vector<std::vector<double>>& joint) {
  if (joint.empty() || joint.front().empty()) {
    throw std::invalid_argument("joint table must be non-empty");
  }
  const std::size_t columns = joint.front().size();
  double total_mass = 0.0;
  double total = 0.0;
  for (const auto& row : joint) {
    if (row.size() != columns) {
      throw std::invalid_argument("joint table rows must have equal length");
    }
    for (const double cell : row) {
      if (!(cell >= 0.0 && cell <= 1.0)) {
        throw std::invalid_argument("joint table cells must lie in [0, 1]");
      }
      total_mass += cell;
      total += entropy_term(cell);
    }
  }
  if (std::abs(total_mass - 1.0) > ProbabilityVector::kSumTolerance) {
    throw std::invalid_argument("joint table mass is " + std::to_string(total_mass) +
                                ", not 1 within tolerance");
  }
  return total;
}

}  // namespace extropy
