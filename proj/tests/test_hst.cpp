#include <cmath>
#include <queue>
#include <random>

#include "bmp/hst.hpp"
#include "bmp/lcs_metric.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

namespace {

// Independent oracle: shortest path between two leaves over the undirected
// tree edges, by uniform-cost search.
double path_length_oracle(const HstTree& tree, int i, int j) {
    const int src = tree.leaf_of[i], dst = tree.leaf_of[j];
    std::vector<double> dist(tree.nodes.size(), -1.0);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (dist[v] >= 0) continue;
        dist[v] = d;
        if (v == dst) return d;
        if (tree.nodes[v].parent >= 0) {
            pq.push({d + tree.nodes[v].parent_edge, tree.nodes[v].parent});
        }
        for (int c : tree.nodes[v].children) {
            pq.push({d + tree.nodes[c].parent_edge, c});
        }
    }
    return -1.0;
}

}  // namespace

TEST_CASE("frt_embed is deterministic for a fixed (metric, seed)") {
    std::mt19937_64 rng(29);
    Instance inst = random_instance(rng, 8, 4, 2);
    MetricSpace metric = build_metric(inst);
    HstTree a = frt_embed(metric, 42);
    HstTree b = frt_embed(metric, 42);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            CHECK(tree_distance(a, i, j) == tree_distance(b, i, j));
        }
    }
}

TEST_CASE("tree_distance matches the uniform-cost-search oracle") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        Instance inst = random_instance(rng, 2 + rng() % 8, 4, 2);
        MetricSpace metric = build_metric(inst);
        HstTree tree = frt_embed(metric, rng());
        for (int i = 0; i < metric.n; ++i) {
            for (int j = 0; j < metric.n; ++j) {
                REQUIRE(tree_distance(tree, i, j) ==
                        doctest::Approx(path_length_oracle(tree, i, j)));
            }
        }
    }
}

TEST_CASE("tree distances dominate the metric for 200 seeds at n=12") {
    std::mt19937_64 rng(37);
    Instance inst = random_instance(rng, 12, 4, 2);
    MetricSpace metric = build_metric(inst);
    double stretch_sum = 0.0;
    long long stretch_count = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        HstTree tree = frt_embed(metric, seed);
        REQUIRE(dominance_holds(tree, metric));
        for (int i = 0; i < 12; ++i) {
            for (int j = i + 1; j < 12; ++j) {
                if (metric(i, j) == 0) continue;
                double s = tree_distance(tree, i, j) / metric(i, j);
                REQUIRE(std::isfinite(s));
                stretch_sum += s;
                ++stretch_count;
            }
        }
    }
    double avg = stretch_sum / stretch_count;
    MESSAGE("average tree/metric stretch over 200 seeds: ", avg);
    CHECK(std::isfinite(avg));
    CHECK(avg >= 1.0);  // dominating embeddings never contract
}

TEST_CASE("duplicate points become zero-length siblings") {
    Instance inst;
    inst.grid = {1, 3};
    inst.alphabet = {"A", "B"};
    inst.probes = {{0, {"A"}}, {1, {"A"}}, {2, {"B", "B"}}};
    MetricSpace metric = build_metric(inst);
    HstTree tree = frt_embed(metric, 5);
    CHECK(tree_distance(tree, 0, 1) == 0.0);
    CHECK(tree_distance(tree, 0, 2) >= metric(0, 2));
    CHECK(dominance_holds(tree, metric));
}

TEST_CASE("frt_embed rejects an empty metric") {
    MetricSpace metric;
    CHECK_THROWS_AS(frt_embed(metric, 1), std::invalid_argument);
}

TEST_CASE("a single point yields a single leaf tree") {
    Instance inst;
    inst.grid = {1, 1};
    inst.alphabet = {"A"};
    inst.probes = {{0, {"A"}}};
    HstTree tree = frt_embed(build_metric(inst), 9);
    CHECK(tree.n_leaves() == 1);
    CHECK(tree_distance(tree, 0, 0) == 0.0);
}
