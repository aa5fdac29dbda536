#ifndef BMP_ORACLE_HPP
#define BMP_ORACLE_HPP

#include <vector>

#include "bmp/embed.hpp"
#include "bmp/model.hpp"

namespace bmp {

// Placements up to the symmetry group of the grid: dihedral of order 8 for
// squares, 2 for a line, 4 for other rectangles.
std::vector<Placement> symmetry_classes(const Grid& grid);

// Ground-truth tiny-instance solver: exact embedding over every placement
// class. Intended for n <= 5, total length <= 10.
ExactResult bmp_exact(const Instance& instance, const ExactBudget& budget = {});

}  // namespace bmp

#endif
