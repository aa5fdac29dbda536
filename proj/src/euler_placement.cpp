#include "bmp/euler_placement.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmp {

namespace {

int min_probe_below(const HstTree& tree, int v, std::vector<int>& memo) {
    if (memo[v] >= 0) return memo[v];
    int best = tree.nodes[v].probe >= 0 ? tree.nodes[v].probe : INT32_MAX;
    for (int c : tree.nodes[v].children) {
        best = std::min(best, min_probe_below(tree, c, memo));
    }
    return memo[v] = best;
}

void collect_leaves(const HstTree& tree, int v, const std::vector<int>& label,
                    std::vector<int>& out) {
    if (tree.nodes[v].probe >= 0) {
        out.push_back(tree.nodes[v].probe);
        return;
    }
    std::vector<int> kids = tree.nodes[v].children;
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return label[a] < label[b]; });
    for (int c : kids) collect_leaves(tree, c, label, out);
}

}  // namespace

PlacementOrder euler_order(const HstTree& tree) {
    std::vector<int> label(tree.nodes.size(), -1);
    min_probe_below(tree, tree.root, label);
    PlacementOrder order;
    collect_leaves(tree, tree.root, label, order.pi);
    return order;
}

Placement order_to_placement(const PlacementOrder& order, const Grid& grid,
                             bool serpentine) {
    const int n = static_cast<int>(order.pi.size());
    if (n != grid.cells()) {
        throw std::invalid_argument("order size does not match grid");
    }
    Placement placement;
    placement.cell_of.resize(n);
    for (int k = 0; k < n; ++k) {
        int r = k / grid.cols;
        int c = k % grid.cols;
        if (serpentine && (r % 2 == 1)) c = grid.cols - 1 - c;
        placement.cell_of[order.pi[k]] = {r, c};
    }
    return placement;
}

long long placement_cost(const PlacementOrder& order, const Grid& grid,
                         const MetricSpace& metric) {
    const int n = static_cast<int>(order.pi.size());
    if (n != grid.cells()) {
        throw std::invalid_argument("order size does not match grid");
    }
    long long total = 0;
    auto at = [&](int r, int c) { return order.pi[r * grid.cols + c]; };
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            if (c + 1 < grid.cols) total += metric.dist[at(r, c)][at(r, c + 1)];
            if (r + 1 < grid.rows) total += metric.dist[at(r, c)][at(r + 1, c)];
        }
    }
    return total;
}

long long edge_crossings(const HstTree& tree, const PlacementOrder& order,
                         const Grid& grid, int edge) {
    if (edge < 0 || edge >= static_cast<int>(tree.nodes.size()) ||
        tree.nodes[edge].parent < 0) {
        throw std::invalid_argument("edge not in tree");
    }
    // Leaves below the edge's child endpoint form one side of the cut.
    std::vector<std::uint8_t> below(tree.n_leaves(), 0);
    std::vector<int> stack = {edge};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (tree.nodes[v].probe >= 0) below[tree.nodes[v].probe] = 1;
        for (int c : tree.nodes[v].children) stack.push_back(c);
    }
    auto at = [&](int r, int c) { return order.pi[r * grid.cols + c]; };
    long long crossings = 0;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            if (c + 1 < grid.cols && below[at(r, c)] != below[at(r, c + 1)]) ++crossings;
            if (r + 1 < grid.rows && below[at(r, c)] != below[at(r + 1, c)]) ++crossings;
        }
    }
    return crossings;
}

}  // namespace bmp
