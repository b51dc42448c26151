#include "extropy/bregman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace extropy {

double bregman(const BregmanGenerator& generator, const ProbabilityVector& p,
               const ProbabilityVector& s) {
  if (p.size() != s.size()) {
    throw std::invalid_argument("bregman divergence needs equal dimensions");
  }
  const std::vector<double> grad = generator.gradient(s);
  if (grad.size() + 1 != s.size()) {
    throw std::invalid_argument("generator '" + generator.name +
                                "' returned a gradient of wrong size");
  }
  double inner = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) {
    inner += grad[i] * (p[i] - s[i]);
  }
  return generator.phi(p) - generator.phi(s) - inner;
}

BregmanGenerator neg_entropy_generator() {
  BregmanGenerator gen;
  gen.name = "neg-entropy";
  gen.phi = [](const ProbabilityVector& pv) {
    double total = 0.0;
    for (const double p : pv.masses()) {
      if (p > 0.0) {
        total += p * std::log(p);
      }
    }
    return total;
  };
  gen.gradient = [](const ProbabilityVector& s) {
    for (const double mass : s.masses()) {
      if (mass <= 0.0) {
        throw std::domain_error(
            "neg-entropy gradient is undefined on the simplex boundary "
            "(zero mass)");
      }
    }
    const std::size_t n = s.size();
    const double log_last = std::log(s[n - 1]);
    std::vector<double> grad(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      grad[i] = std::log(s[i]) - log_last;
    }
    return grad;
  };
  return gen;
}

BregmanGenerator neg_extropy_generator() {
  BregmanGenerator gen;
  gen.name = "neg-extropy";
  gen.phi = [](const ProbabilityVector& pv) {
    double total = 0.0;
    for (const double p : pv.masses()) {
      if (p < 1.0) {
        total += (1.0 - p) * std::log1p(-p);
      }
    }
    return total;
  };
  gen.gradient = [](const ProbabilityVector& s) {
    for (const double mass : s.masses()) {
      if (mass >= 1.0) {
        throw std::domain_error(
            "neg-extropy gradient is undefined on the simplex boundary "
            "(unit mass)");
      }
    }
    const std::size_t n = s.size();
    const double log_last = std::log1p(-s[n - 1]);
    std::vector<double> grad(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      grad[i] = log_last - std::log1p(-s[i]);
    }
    return grad;
  };
  return gen;
}

BregmanGenerator half_squared_norm_generator() {
  BregmanGenerator gen;
  gen.name = "half-squared-norm";
  gen.phi = [](const ProbabilityVector& pv) {
    double total = 0.0;
    for (const double p : pv.masses()) {
      total += p * p;
    }
    return 0.5 * total;
  };
  gen.gradient = [](const ProbabilityVector& s) {
    const std::size_t n = s.size();
    const double last = s[n - 1];
    std::vector<double> grad(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      grad[i] = s[i] - last;
    }
    return grad;
  };
  return gen;
}

}  // namespace extropy
