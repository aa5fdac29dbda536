#include "bmp/hst.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bmp/rng.hpp"

namespace bmp {

namespace {

// Distances are rescaled by 4 so that the decomposition bottoms out at
// level 0 with singleton clusters (min nonzero distance becomes >= 4 while
// level-0 cluster diameter stays < 4).
constexpr long long kScale = 4;

struct Cluster {
    std::vector<int> points;  // representative indices
    int node = -1;
};

}  // namespace

HstTree frt_embed(const MetricSpace& metric, std::uint64_t seed) {
    if (metric.n == 0) throw std::invalid_argument("empty metric");

    // Collapse zero-distance groups onto representatives.
    std::vector<int> rep_of(metric.n, -1);
    std::vector<int> reps;
    std::vector<std::vector<int>> group;
    for (int i = 0; i < metric.n; ++i) {
        for (int r = 0; r < static_cast<int>(reps.size()); ++r) {
            if (metric.dist[reps[r]][i] == 0) {
                rep_of[i] = r;
                break;
            }
        }
        if (rep_of[i] < 0) {
            rep_of[i] = static_cast<int>(reps.size());
            reps.push_back(i);
            group.emplace_back();
        }
        group[rep_of[i]].push_back(i);
    }
    const int m = static_cast<int>(reps.size());

    auto d = [&](int a, int b) { return kScale * metric.dist[reps[a]][reps[b]]; };

    HstTree tree;
    tree.leaf_of.assign(metric.n, -1);

    auto add_node = [&](int parent, double edge, int level, int probe) {
        HstTree::Node node;
        node.parent = parent;
        node.parent_edge = edge;
        node.level = level;
        node.probe = probe;
        int idx = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(node);
        if (parent >= 0) tree.nodes[parent].children.push_back(idx);
        return idx;
    };

    auto attach_group = [&](int rep_idx, int slot) {
        // Zero-distance members become zero-length sibling leaves.
        if (group[rep_idx].size() == 1) {
            tree.nodes[slot].probe = group[rep_idx][0];
            tree.leaf_of[group[rep_idx][0]] = slot;
            return;
        }
        for (int probe : group[rep_idx]) {
            int leaf = add_node(slot, 0.0, tree.nodes[slot].level, probe);
            tree.leaf_of[probe] = leaf;
        }
    };

    if (m == 1) {
        tree.root = add_node(-1, 0.0, 0, -1);
        attach_group(0, tree.root);
        return tree;
    }

    long long diameter = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) diameter = std::max(diameter, d(a, b));
    }
    int top = 0;
    while ((1ll << top) < diameter) ++top;

    auto rng = make_rng(seed);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double beta = std::uniform_real_distribution<double>(1.0, 2.0)(rng);

    tree.root = add_node(-1, 0.0, top, -1);
    std::vector<Cluster> current;
    {
        Cluster all;
        all.points.resize(m);
        std::iota(all.points.begin(), all.points.end(), 0);
        all.node = tree.root;
        current.push_back(std::move(all));
    }

    for (int level = top; level >= 1; --level) {
        const double radius = beta * std::ldexp(1.0, level - 1);
        std::vector<Cluster> next;
        for (const Cluster& cluster : current) {
            // Assign each point to the first permutation point whose ball
            // of the child radius covers it; centers range over all points.
            std::map<int, std::vector<int>> by_center;
            for (int u : cluster.points) {
                int center = -1;
                for (int rank = 0; rank < m; ++rank) {
                    if (d(perm[rank], u) <= radius) {
                        center = rank;
                        break;
                    }
                }
                assert(center >= 0);  // radius >= beta covers u itself
                by_center[center].push_back(u);
            }
            if (by_center.size() == 1 && level > 1) {
                // Unsplit cluster: keep the same node, no chain nodes.
                Cluster child;
                child.points = by_center.begin()->second;
                child.node = cluster.node;
                next.push_back(std::move(child));
                continue;
            }
            for (auto& [rank, points] : by_center) {
                double drop = 0.0;
                for (int l = tree.nodes[cluster.node].level; l >= level; --l) {
                    drop += std::ldexp(1.0, l - 1);
                }
                // Collapsed single-child chains contribute their full length.
                int node = add_node(cluster.node, drop, level - 1, -1);
                Cluster child;
                child.points = std::move(points);
                child.node = node;
                next.push_back(std::move(child));
            }
        }
        current = std::move(next);
    }

    for (const Cluster& cluster : current) {
        assert(cluster.points.size() == 1);
        attach_group(cluster.points[0], cluster.node);
    }

    assert(dominance_holds(tree, metric));
    return tree;
}

namespace {

int node_depth(const HstTree& tree, int v) {
    int depth = 0;
    while (tree.nodes[v].parent >= 0) {
        v = tree.nodes[v].parent;
        ++depth;
    }
    return depth;
}

}  // namespace

std::vector<int> tree_path_edges(const HstTree& tree, int i, int j) {
    int a = tree.leaf_of.at(i);
    int b = tree.leaf_of.at(j);
    if (a < 0 || b < 0) throw std::out_of_range("unknown leaf");
    std::vector<int> up_a, up_b;
    int da = node_depth(tree, a);
    int db = node_depth(tree, b);
    while (da > db) {
        up_a.push_back(a);
        a = tree.nodes[a].parent;
        --da;
    }
    while (db > da) {
        up_b.push_back(b);
        b = tree.nodes[b].parent;
        --db;
    }
    while (a != b) {
        up_a.push_back(a);
        up_b.push_back(b);
        a = tree.nodes[a].parent;
        b = tree.nodes[b].parent;
    }
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

double tree_distance(const HstTree& tree, int i, int j) {
    if (i == j) return 0.0;
    double total = 0.0;
    for (int edge : tree_path_edges(tree, i, j)) {
        total += tree.nodes[edge].parent_edge;
    }
    return total;
}

bool dominance_holds(const HstTree& tree, const MetricSpace& metric) {
    for (int i = 0; i < metric.n; ++i) {
        for (int j = i + 1; j < metric.n; ++j) {
            if (tree_distance(tree, i, j) < static_cast<double>(metric.dist[i][j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace bmp
