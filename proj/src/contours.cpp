#include "extropy/contours.hpp"

#include <stdexcept>

#include "extropy/measures.hpp"
#include "extropy/probability_vector.hpp"

namespace extropy {

ContourGrid make_contour_grid(std::size_t resolution) {
  if (resolution == 0) {
    throw std::invalid_argument("contour resolution must be at least 1");
  }
  const double m = static_cast<double>(resolution);
  ContourGrid grid;
  grid.resolution = resolution;
  grid.rows.reserve((resolution + 1) * (resolution + 2) / 2);
  for (std::size_t i = 0; i <= resolution; ++i) {
    for (std::size_t j = 0; j <= resolution - i; ++j) {
      const std::size_t k = resolution - i - j;
      const ProbabilityVector pv({static_cast<double>(i) / m,
                                  static_cast<double>(j) / m,
                                  static_cast<double>(k) / m});
      grid.rows.push_back({pv[0], pv[1], pv[2], entropy(pv), extropy(pv)});
    }
  }
  return grid;
}

}  // namespace extropy
