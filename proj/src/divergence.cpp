#include "extropy/divergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace extropy {
namespace {

void require_same_dimension(const ProbabilityVector& p, const ProbabilityVector& s) {
  if (p.size() != s.size()) {
    throw std::invalid_argument("divergence needs equal dimensions, got " +
                                std::to_string(p.size()) + " and " +
                                std::to_string(s.size()));
  }
}

}  // namespace

ExtendedNonNegative ExtendedNonNegative::finite(double value) {
  if (!(value >= -kClampTolerance)) {  // also rejects NaN
    throw std::invalid_argument("divergence value " + std::to_string(value) +
                                " is negative beyond rounding tolerance");
  }
  ExtendedNonNegative out;
  if (value < 0.0) {
    out.value_ = 0.0;
    out.clamped_ = true;
  } else {
    out.value_ = value;
  }
  return out;
}

ExtendedNonNegative ExtendedNonNegative::infinity() noexcept {
  ExtendedNonNegative out;
  out.value_ = std::numeric_limits<double>::infinity();
  out.infinite_ = true;
  return out;
}

ExtendedNonNegative kl_divergence(const ProbabilityVector& p,
                                  const ProbabilityVector& s) {
  require_same_dimension(p, s);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      if (s[i] == 0.0) {
        return ExtendedNonNegative::infinity();
      }
      total += p[i] * std::log(p[i] / s[i]);
    }
  }
  return ExtendedNonNegative::finite(total);
}

ExtendedNonNegative complementary_divergence(const ProbabilityVector& p,
                                             const ProbabilityVector& s) {
  require_same_dimension(p, s);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1.0) {
      if (s[i] >= 1.0) {
        return ExtendedNonNegative::infinity();
      }
      total += (1.0 - p[i]) * (std::log1p(-p[i]) - std::log1p(-s[i]));
    }
  }
  return ExtendedNonNegative::finite(total);
}

double half_euclidean(const ProbabilityVector& p, const ProbabilityVector& s) {
  require_same_dimension(p, s);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = p[i] - s[i];
    total += diff * diff;
  }
  return 0.5 * total;
}

OddsDivergences odds_divergences(const ProbabilityVector& p) {
  const std::size_t n = p.size();
  if (n < 2) {
    throw std::domain_error("odds divergences need n >= 2");
  }
  const double log_scale = std::log(static_cast<double>(n) - 1.0);

  bool kl_infinite = false;
  double kl_sum = 0.0;
  for (const double mass : p.masses()) {
    if (mass >= 1.0) {
      kl_infinite = true;
      break;
    }
    if (mass > 0.0) {
      kl_sum += mass * (std::log(mass) - std::log1p(-mass));
    }
  }

  const ProbabilityVector q = complement(p);
  bool ckl_infinite = false;
  double ckl_sum = 0.0;
  for (const double mass : q.masses()) {
    if (mass >= 1.0) {  // reachable only for n = 2 with a degenerate p
      ckl_infinite = true;
      break;
    }
    if (mass > 0.0) {
      ckl_sum += mass * (std::log(mass) - std::log1p(-mass));
    }
  }

  OddsDivergences out;
  out.kl = kl_infinite ? ExtendedNonNegative::infinity()
                       : ExtendedNonNegative::finite(kl_sum + log_scale);
  out.ckl = ckl_infinite
                ? ExtendedNonNegative::infinity()
                : ExtendedNonNegative::finite((static_cast<double>(n) - 1.0) *
                                              (ckl_sum + log_scale));
  return out;
}

double dc_upper_bound(std::size_t n) {
  if (n < 3) {
    throw std::domain_error("the complementary odds bound needs n >= 3");
  }
  const double d = static_cast<double>(n);
  return (d - 1.0) * std::log((d - 1.0) / (d - 2.0));
}

}  // namespace extropy
