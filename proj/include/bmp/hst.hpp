#ifndef BMP_HST_HPP
#define BMP_HST_HPP

#include <cstdint>
#include <vector>

#include "bmp/lcs_metric.hpp"

namespace bmp {

// Hierarchically separated tree over the probe metric. Leaves carry probe
// ids; internal nodes are decomposition clusters with geometrically
// decreasing radii. Tree distances dominate the metric by construction.
struct HstTree {
    struct Node {
        int parent = -1;
        double parent_edge = 0.0;  // length of the edge to the parent
        int level = 0;
        int probe = -1;  // probe id at leaves, -1 otherwise
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    int root = -1;
    std::vector<int> leaf_of;  // probe id -> leaf node index

    int n_leaves() const { return static_cast<int>(leaf_of.size()); }
    bool is_leaf(int v) const { return nodes[v].probe >= 0; }
};

// Randomized FRT decomposition: seeded permutation plus a radius scale beta
// drawn uniformly from [1,2). Deterministic for a fixed (metric, seed).
// Points at distance 0 are collapsed first and re-expanded as zero-length
// sibling leaves. Throws std::invalid_argument on an empty metric.
HstTree frt_embed(const MetricSpace& metric, std::uint64_t seed);

// Length of the unique tree path between the leaves of probes i and j.
double tree_distance(const HstTree& tree, int i, int j);

// Tree path between two leaves as a list of edges, each named by its child
// endpoint. Used by the crossing counters.
std::vector<int> tree_path_edges(const HstTree& tree, int i, int j);

bool dominance_holds(const HstTree& tree, const MetricSpace& metric);

}  // namespace bmp

#endif
