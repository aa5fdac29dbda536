#ifndef BMP_EULER_PLACEMENT_HPP
#define BMP_EULER_PLACEMENT_HPP

#include <cstdint>
#include <vector>

#include "bmp/hst.hpp"
#include "bmp/model.hpp"

namespace bmp {

// A linear order of probe ids, produced by the Euler tour of an HST.
struct PlacementOrder {
    std::vector<int> pi;
};

// Leaves in first-visit order of a depth-first tour from the root, children
// visited in ascending order of their smallest descendant probe id.
PlacementOrder euler_order(const HstTree& tree);

// Row-major layout: the first `cols` probes of the order fill row 0 left to
// right, the next `cols` fill row 1, and so on. Serpentine layout reverses
// every odd row; it is an experimental variant, not part of the default path.
Placement order_to_placement(const PlacementOrder& order, const Grid& grid,
                             bool serpentine = false);

// S(pi): sum of metric distances over all grid-adjacent pairs of the
// row-major layout of the order.
long long placement_cost(const PlacementOrder& order, const Grid& grid,
                         const MetricSpace& metric);

// Number of grid-adjacent pairs whose tree path uses the given edge (an edge
// is named by its child node). Equivalently the size of the grid cut induced
// by the edge's leaf bipartition.
long long edge_crossings(const HstTree& tree, const PlacementOrder& order,
                         const Grid& grid, int edge);

}  // namespace bmp

#endif
