#pragma once

#include <cstddef>
#include <vector>

namespace extropy {

/// One barycentric lattice point of the 3-outcome simplex with its measures.
struct ContourRow {
  double p1;
  double p2;
  double p3;
  double entropy;
  double extropy;
};

/// Dense measure table over the barycentric lattice of denominator M:
/// all points (i/M, j/M, (M-i-j)/M), emitted in lexicographic (i, j) order,
/// (M+1)(M+2)/2 rows. External tools draw iso-entropy / iso-extropy
/// contours from it.
struct ContourGrid {
  std::size_t resolution = 0;
  std::vector<ContourRow> rows;
};

/// Requires resolution >= 1.
ContourGrid make_contour_grid(std::size_t resolution);

}  // namespace extropy
