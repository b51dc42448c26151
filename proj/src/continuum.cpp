#include "extropy/continuum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "extropy/measures.hpp"

namespace extropy {
namespace {

void require_matching(const DensityGrid& f, const DensityGrid& g) {
  if (!same_grid(f, g)) {
    throw std::invalid_argument(
        "density operation needs matching grids (same interval and node count)");
  }
}

}  // namespace

Discretization discretize(const DensityGrid& grid) {
  std::vector<double> masses;
  masses.reserve(grid.size());
  double raw_mass = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double m = grid.value(i) * grid.delta_x();
    masses.push_back(m);
    raw_mass += m;
  }
  if (raw_mass <= 0.0) {
    throw std::invalid_argument("cannot discretize an all-zero density");
  }
  for (double& m : masses) {
    m /= raw_mass;
  }
  return {ProbabilityVector(std::move(masses)), raw_mass};
}

double differential_entropy(const DensityGrid& f) {
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = f.value(i);
    integrand[i] = v > 0.0 ? -v * std::log(v) : 0.0;
  }
  return trapezoid(f, integrand);
}

double differential_extropy(const DensityGrid& f) {
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    integrand[i] = f.value(i) * f.value(i);
  }
  return -0.5 * trapezoid(f, integrand);
}

ExtendedNonNegative relative_entropy_density(const DensityGrid& f,
                                             const DensityGrid& g) {
  require_matching(f, g);
  std::vector<double> integrand(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double fv = f.value(i);
    if (fv > 0.0) {
      const double gv = g.value(i);
      if (gv == 0.0) {
        return ExtendedNonNegative::infinity();
      }
      integrand[i] = fv * std::log(fv / gv);
    }
  }
  return ExtendedNonNegative::finite(trapezoid(f, integrand));
}

double relative_extropy_density(const DensityGrid& f, const DensityGrid& g) {
  require_matching(f, g);
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double diff = f.value(i) - g.value(i);
    integrand[i] = diff * diff;
  }
  return 0.5 * trapezoid(f, integrand);
}

DensityKernel xlogx_kernel() {
  DensityKernel kernel;
  kernel.name = "xlogx";
  kernel.value = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  kernel.derivative = [](double x) { return std::log(x) + 1.0; };
  return kernel;
}

DensityKernel half_square_kernel() {
  DensityKernel kernel;
  kernel.name = "half-square";
  kernel.value = [](double x) { return 0.5 * x * x; };
  kernel.derivative = [](double x) { return x; };
  return kernel;
}

double bregman_density(const DensityKernel& kernel, const DensityGrid& f,
                       const DensityGrid& g) {
  require_matching(f, g);
  std::vector<double> integrand(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double fv = f.value(i);
    const double gv = g.value(i);
    if (fv == gv) {
      continue;  // pointwise divergence of a value from itself
    }
    const double term =
        kernel.value(fv) - kernel.value(gv) - kernel.derivative(gv) * (fv - gv);
    if (!std::isfinite(term)) {
      throw std::domain_error("kernel '" + kernel.name +
                              "' is undefined at node " + std::to_string(i));
    }
    integrand[i] = term;
  }
  return trapezoid(f, integrand);
}

ProbeTable convergence_probe(const std::vector<DensityGrid>& f_family,
                             const std::vector<DensityGrid>& g_family) {
  if (f_family.size() < 2) {
    throw std::invalid_argument("convergence probe needs at least two resolutions");
  }
  const bool with_g = !g_family.empty();
  if (with_g && g_family.size() != f_family.size()) {
    throw std::invalid_argument("density families must have equal length");
  }
  for (std::size_t k = 0; k < f_family.size(); ++k) {
    if (f_family[k].lower() != f_family.front().lower() ||
        f_family[k].upper() != f_family.front().upper()) {
      throw std::invalid_argument("probe grids must share one interval");
    }
    if (k > 0 && f_family[k].size() <= f_family[k - 1].size()) {
      throw std::invalid_argument("probe node counts must be strictly increasing");
    }
    if (with_g) {
      require_matching(f_family[k], g_family[k]);
    }
  }

  ProbeTable table;
  table.entropy_target = differential_entropy(f_family.back());
  table.extropy_target = differential_extropy(f_family.back());
  if (with_g) {
    table.dc_target = relative_extropy_density(f_family.back(), g_family.back());
  }

  table.rows.reserve(f_family.size());
  for (std::size_t k = 0; k < f_family.size(); ++k) {
    const DensityGrid& f = f_family[k];
    ProbeRow row;
    row.nodes = f.size();
    row.delta_x = f.delta_x();
    const ProbabilityVector p = discretize(f).pmf;
    row.entropy_probe = entropy(p) + std::log(f.delta_x());
    row.entropy_error = std::abs(row.entropy_probe - table.entropy_target);
    row.extropy_probe = (extropy(p) - 1.0) / f.delta_x();
    row.extropy_error = std::abs(row.extropy_probe - table.extropy_target);
    if (with_g) {
      const ProbabilityVector s = discretize(g_family[k]).pmf;
      row.dc_probe = complementary_divergence(p, s).value() / f.delta_x();
      row.dc_error = std::abs(*row.dc_probe - *table.dc_target);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace extropy
