#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace extropy {

/// Density sampled at uniformly spaced nodes on [lower, upper]. Values are
/// non-negative and their trapezoid quadrature must equal 1 within the
/// declared normalization tolerance; the tolerance travels with the grid so
/// coarse companions of a fine grid can declare looser mass checks.
class DensityGrid {
 public:
  static constexpr double kDefaultNormTolerance = 1e-6;

  DensityGrid(double lower, double upper, std::vector<double> values,
              double norm_tolerance = kDefaultNormTolerance);

  /// Rescales non-negative samples so their trapezoid quadrature is exactly
  /// 1; the explicit way to turn a shape into a density.
  static DensityGrid normalized(double lower, double upper,
                                std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double delta_x() const noexcept { return delta_x_; }
  double norm_tolerance() const noexcept { return norm_tolerance_; }
  double node(std::size_t i) const;
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Trapezoid quadrature of the stored samples (close to 1 by invariant).
  double quadrature() const;

 private:
  double lower_;
  double upper_;
  double delta_x_;
  double norm_tolerance_;
  std::vector<double> values_;
};

/// Composite trapezoid quadrature of arbitrary samples over the grid's
/// nodes: half weight at the endpoints, full weight inside. Sample count
/// must match the grid.
double trapezoid(const DensityGrid& grid, const std::vector<double>& samples);

/// True when both grids share the interval and node count, so pointwise
/// operations are defined. Mismatches are errors, never interpolated over.
bool same_grid(const DensityGrid& a, const DensityGrid& b);

/// Keeps every stride-th node so the result has `nodes` nodes with the same
/// endpoints; requires nodes >= 2 and (size-1) divisible by (nodes-1).
DensityGrid subsample(const DensityGrid& grid, std::size_t nodes,
                      double norm_tolerance = DensityGrid::kDefaultNormTolerance);

/// Two-column text form: "x<TAB>f(x)" per line, LF endings; blank lines and
/// '#' comment lines are skipped on input. Node positions must be ascending
/// and uniformly spaced.
DensityGrid read_density_text(std::istream& in,
                              double norm_tolerance = DensityGrid::kDefaultNormTolerance);
std::string write_density_text(const DensityGrid& grid);

/// JSON form: {"lower": a, "upper": b, "values": [...]}.
DensityGrid read_density_json(std::istream& in,
                              double norm_tolerance = DensityGrid::kDefaultNormTolerance);
std::string write_density_json(const DensityGrid& grid);

}  // namespace extropy
