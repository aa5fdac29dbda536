#include <algorithm>
#include <cmath>
#include <random>

#include "bmp/euler_placement.hpp"
#include "bmp/hst.hpp"
#include "bmp/lcs_metric.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

namespace {

std::vector<int> leaves_below(const HstTree& tree, int v) {
    std::vector<int> out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (tree.nodes[u].probe >= 0) out.push_back(tree.nodes[u].probe);
        for (int c : tree.nodes[u].children) stack.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("euler_order is a permutation and deterministic") {
    std::mt19937_64 rng(41);
    Instance inst = random_instance(rng, 9, 4, 2);
    MetricSpace metric = build_metric(inst);
    HstTree tree = frt_embed(metric, 3);
    PlacementOrder order = euler_order(tree);
    REQUIRE(order.pi.size() == 9);
    auto sorted = order.pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 9; ++i) CHECK(sorted[i] == i);
    CHECK(euler_order(tree).pi == order.pi);
}

TEST_CASE("subtree leaves occupy a contiguous block of the order") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 10; ++it) {
        Instance inst = random_instance(rng, 9, 3, 2);
        HstTree tree = frt_embed(build_metric(inst), rng());
        PlacementOrder order = euler_order(tree);
        std::vector<int> pos(9);
        for (int i = 0; i < 9; ++i) pos[order.pi[i]] = i;
        for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
            auto leaves = leaves_below(tree, static_cast<int>(v));
            int lo = 9, hi = -1;
            for (int p : leaves) {
                lo = std::min(lo, pos[p]);
                hi = std::max(hi, pos[p]);
            }
            CHECK(hi - lo + 1 == static_cast<int>(leaves.size()));
        }
    }
}

TEST_CASE("row-major and serpentine layouts place the order as documented") {
    PlacementOrder order{{3, 1, 0, 2}};
    Grid grid{2, 2};
    Placement rm = order_to_placement(order, grid);
    CHECK(rm.cell_of[3] == std::pair<int, int>{0, 0});
    CHECK(rm.cell_of[1] == std::pair<int, int>{0, 1});
    CHECK(rm.cell_of[0] == std::pair<int, int>{1, 0});
    CHECK(rm.cell_of[2] == std::pair<int, int>{1, 1});
    Placement sp = order_to_placement(order, grid, true);
    CHECK(sp.cell_of[0] == std::pair<int, int>{1, 1});
    CHECK(sp.cell_of[2] == std::pair<int, int>{1, 0});
}

TEST_CASE("placement_cost sums metric distances over grid-adjacent pairs") {
    Instance inst = reference_instance();
    MetricSpace metric = build_metric(inst);
    PlacementOrder order{{0, 1, 2, 3}};
    Grid grid{2, 2};
    long long expected = metric(0, 1) + metric(2, 3) + metric(0, 2) + metric(1, 3);
    CHECK(placement_cost(order, grid, metric) == expected);
}

TEST_CASE("edge crossings respect the isoperimetric and Euler-order bounds") {
    std::mt19937_64 rng(47);
    for (int n : {9, 16, 25, 36}) {
        for (int rep = 0; rep < 5; ++rep) {
            Instance inst = random_instance(rng, n, 4, 2 + rng() % 2);
            MetricSpace metric = build_metric(inst);
            HstTree tree = frt_embed(metric, rng());
            PlacementOrder order = euler_order(tree);
            int side = 1;
            while (side * side < n) ++side;
            Grid grid{side, side};
            for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
                if (tree.nodes[v].parent < 0) continue;
                long long below =
                    static_cast<long long>(leaves_below(tree, static_cast<int>(v)).size());
                long long small = std::min<long long>(below, n - below);
                if (small == 0) continue;
                long long crossings = edge_crossings(tree, order, grid, static_cast<int>(v));
                REQUIRE(crossings >=
                        static_cast<long long>(std::floor(std::sqrt(double(small)))));
                REQUIRE(crossings <= 2 + 4 * small);
                REQUIRE(double(crossings) <= 2.0 + 2.0 * std::sqrt(double(n)) + 1e-9);
            }
        }
    }
}

TEST_CASE("edge_crossings rejects a non-edge") {
    std::mt19937_64 rng(53);
    Instance inst = random_instance(rng, 4, 3, 2);
    HstTree tree = frt_embed(build_metric(inst), 1);
    PlacementOrder order = euler_order(tree);
    CHECK_THROWS_AS(edge_crossings(tree, order, Grid{2, 2}, tree.root),
                    std::invalid_argument);
}
