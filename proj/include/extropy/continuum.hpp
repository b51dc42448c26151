#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extropy/density_grid.hpp"
#include "extropy/divergence.hpp"
#include "extropy/probability_vector.hpp"

namespace extropy {

/// Node masses p_i = f(x_i) * dx rescaled to unit sum. `raw_mass` is the
/// pre-rescale total (the rescale factor is 1/raw_mass), kept because the
/// raw node sum is only approximately 1 and callers may want the diagnostic.
struct Discretization {
  ProbabilityVector pmf;
  double raw_mass;
};

/// Requires at least one positive sample on the grid.
Discretization discretize(const DensityGrid& grid);

/// Differential entropy h(f) = -trapezoid of f log f, with the explicit
/// 0 log 0 = 0 branch. Unlike the discrete measure, can be negative.
double differential_entropy(const DensityGrid& f);

/// Differential extropy j(f) = -0.5 * trapezoid of f^2. Strictly negative.
double differential_extropy(const DensityGrid& f);

/// Relative entropy d(f||g) = trapezoid of f log(f/g) over nodes with
/// f > 0; infinite exactly when f > 0 meets g = 0. Grids must match.
ExtendedNonNegative relative_entropy_density(const DensityGrid& f,
                                             const DensityGrid& g);

/// Relative extropy d^c(f||g) = 0.5 * trapezoid of (f-g)^2. Grids must match.
double relative_extropy_density(const DensityGrid& f, const DensityGrid& g);

/// Strictly convex scalar kernel with derivative, for pointwise Bregman
/// integrands on densities. The derivative may be unbounded at 0 (log-based
/// kernels), making the integrand undefined where g = 0 and f differs.
struct DensityKernel {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

/// s(x) = x log x with s(0) = 0; its Bregman integrand reproduces the
/// relative entropy density when both densities carry the same quadrature
/// mass.
DensityKernel xlogx_kernel();

/// s(x) = x^2 / 2; its Bregman integrand is half the squared difference.
DensityKernel half_square_kernel();

/// Trapezoid of s(f) - s(g) - s'(g) (f - g). Nodes with f = g contribute 0
/// (the pointwise divergence of a value from itself). Throws
/// std::domain_error when the kernel is non-finite at a visited node value.
double bregman_density(const DensityKernel& kernel, const DensityGrid& f,
                       const DensityGrid& g);

/// One resolution step of the discrete-to-continuum comparison.
struct ProbeRow {
  std::size_t nodes = 0;
  double delta_x = 0.0;
  double entropy_probe = 0.0;  // H(p_N) + log dx  ->  h(f)
  double entropy_error = 0.0;
  double extropy_probe = 0.0;  // (J(p_N) - 1) / dx  ->  j(f)
  double extropy_error = 0.0;
  std::optional<double> dc_probe;  // D^c(p_N || s_N) / dx  ->  d^c(f||g)
  std::optional<double> dc_error;
};

/// Probe table over one density sampled at several resolutions. Targets are
/// the differential values on the finest (last) grid; row errors are
/// absolute distances to them and, for well-behaved densities, decrease
/// with N down to the quadrature floor.
struct ProbeTable {
  double entropy_target = 0.0;
  double extropy_target = 0.0;
  std::optional<double> dc_target;
  std::vector<ProbeRow> rows;
};

/// `f_family` holds the same density on a shared interval with strictly
/// increasing node counts (>= 2 grids). `g_family`, when non-empty, must
/// match f_family grid for grid and switches on the d^c probe column.
ProbeTable convergence_probe(const std::vector<DensityGrid>& f_family,
                             const std::vector<DensityGrid>& g_family = {});

}  // namespace extropy
