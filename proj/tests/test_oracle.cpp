#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "bmp/oracle.hpp"
#include "bmp/pipeline.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

namespace {

// Exact optimum without symmetry reduction: every one of the n! placements.
long long brute_bmp(const Instance& inst) {
    int n = inst.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    long long best = std::numeric_limits<long long>::max();
    do {
        Placement placement;
        placement.cell_of.resize(n);
        for (int cell = 0; cell < n; ++cell) {
            placement.cell_of[perm[cell]] = {cell / inst.grid.cols,
                                             cell % inst.grid.cols};
        }
        ExactResult r = pbmp_exact(inst, placement);
        REQUIRE(r.ok());
        best = std::min(best, r.solution.cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("symmetry classes count placements modulo the grid's symmetries") {
    CHECK(symmetry_classes(Grid{2, 2}).size() == 3);   // 4! / 8
    CHECK(symmetry_classes(Grid{1, 2}).size() == 1);   // 2! / 2
    CHECK(symmetry_classes(Grid{1, 3}).size() == 3);   // 3! / 2
    CHECK(symmetry_classes(Grid{2, 3}).size() == 180); // 6! / 4
    for (const Placement& p : symmetry_classes(Grid{2, 2})) {
        std::vector<int> cells;
        for (auto [r, c] : p.cell_of) cells.push_back(r * 2 + c);
        std::sort(cells.begin(), cells.end());
        CHECK(cells == std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("oracle never exceeds the reference instance's published solution") {
    Instance inst = reference_instance();
    ExactResult res = bmp_exact(inst);
    REQUIRE(res.ok());
    CHECK(res.solution.cost <= 10);
    CHECK(res.solution.cost >= lower_bound(inst));
    ValidationReport report = validate_solution(inst, res.solution);
    CHECK_MESSAGE(report.ok, report.message);
}

TEST_CASE("identical probes cost nothing; distinct neighbors pay the distance") {
    Instance same;
    same.grid = {2, 2};
    same.alphabet = {"A"};
    same.probes = {{0, {"A"}}, {1, {"A"}}, {2, {"A"}}, {3, {"A"}}};
    CHECK(bmp_exact(same).solution.cost == 0);

    Instance pair;
    pair.grid = {1, 2};
    pair.alphabet = {"A", "C"};
    pair.probes = {{0, {"A", "C"}}, {1, {"C", "A"}}};
    CHECK(bmp_exact(pair).solution.cost == 2);
}

TEST_CASE("symmetry reduction loses nothing against the unreduced search") {
    std::mt19937_64 rng(139);
    for (int it = 0; it < 10; ++it) {
        Instance inst = random_instance(rng, 4, 3, 2);
        ExactResult reduced = bmp_exact(inst);
        REQUIRE(reduced.ok());
        CHECK(reduced.solution.cost == brute_bmp(inst));
        CHECK(validate_solution(inst, reduced.solution).ok);
    }
}

TEST_CASE("oracle sits between the certified bound and the heuristic") {
    std::mt19937_64 rng(149);
    for (int it = 0; it < 5; ++it) {
        Instance inst = random_instance(rng, 4, 3, 2);
        ExactResult exact = bmp_exact(inst);
        REQUIRE(exact.ok());
        CHECK(lower_bound(inst) <= exact.solution.cost);
        SolveOutcome heur = solve_bmp(inst, {.seed = 17ull + it, .trials = 8});
        CHECK(exact.solution.cost <= heur.solution.cost);
    }
}
