#include <random>

#include "bmp/model.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

TEST_CASE("reference 2x2 instance evaluates to 10 by both accountings") {
    Instance inst = reference_instance();
    Solution sol = reference_solution();
    CHECK(border_length_pairwise(sol.placement, sol.schedule, inst.grid) == 10);
    CHECK(border_length_masks(sol.placement, sol.schedule, inst.grid) == 10);

    auto masks = masks_of(sol.placement, sol.schedule);
    REQUIRE(masks.size() == 4);
    CHECK(mask_border(masks[0], inst.grid) == 2);
    CHECK(mask_border(masks[1], inst.grid) == 4);
    CHECK(mask_border(masks[2], inst.grid) == 2);
    CHECK(mask_border(masks[3], inst.grid) == 2);

    CHECK(validate_solution(inst, sol).ok);
}

TEST_CASE("border' is asymmetric, the symmetric border sums both directions") {
    Solution sol = reference_solution();
    long long asym = border_asym(sol.schedule, 0, 2) + border_asym(sol.schedule, 2, 0);
    CHECK(asym == border_sym(sol.schedule, 0, 2));
    CHECK(border_sym(sol.schedule, 0, 0) == 0);
}

TEST_CASE("pairwise and mask accountings agree on random valid solutions") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + static_cast<int>(rng() % 9);
        auto [inst, sol] = random_solved_instance(rng, n, 1 + rng() % 6, 1 + rng() % 3);
        long long pairwise = border_length_pairwise(sol.placement, sol.schedule, inst.grid);
        long long masks = border_length_masks(sol.placement, sol.schedule, inst.grid);
        REQUIRE(pairwise == masks);
        REQUIRE(validate_solution(inst, sol).ok);
    }
}

TEST_CASE("validation reports the first violation") {
    Instance inst = reference_instance();

    SUBCASE("corrupted bitstring") {
        Solution sol = reference_solution();
        sol.schedule.embed[1] = {1, 1, 0, 0};  // spells CT, not TA
        auto report = validate_solution(inst, sol);
        CHECK_FALSE(report.ok);
        CHECK(report.message.find("probe reconstruction mismatch") != std::string::npos);
    }
    SUBCASE("cost off by one") {
        Solution sol = reference_solution();
        sol.cost = 11;
        auto report = validate_solution(inst, sol);
        CHECK_FALSE(report.ok);
        CHECK(report.message.find("cost mismatch (pairwise=10 masks=10 claimed=11)") !=
              std::string::npos);
    }
    SUBCASE("non-bijective placement") {
        Solution sol = reference_solution();
        sol.placement.cell_of[0] = sol.placement.cell_of[1];
        auto report = validate_solution(inst, sol);
        CHECK_FALSE(report.ok);
        CHECK(report.message.find("not bijective") != std::string::npos);
    }
    SUBCASE("deposition token outside the alphabet") {
        Solution sol = reference_solution();
        sol.schedule.deposition[0] = "Z";
        CHECK_FALSE(validate_solution(inst, sol).ok);
    }
}

TEST_CASE("pairwise accounting rejects a non-bijective placement") {
    Instance inst = reference_instance();
    Solution sol = reference_solution();
    sol.placement.cell_of[2] = sol.placement.cell_of[3];
    CHECK_THROWS_AS(border_length_pairwise(sol.placement, sol.schedule, inst.grid),
                    std::invalid_argument);
}

TEST_CASE("compact_schedule drops unused steps without changing cost") {
    Instance inst = reference_instance();
    Solution sol = reference_solution();
    // Insert a step nobody uses.
    sol.schedule.deposition.insert(sol.schedule.deposition.begin() + 2, "G");
    for (auto& row : sol.schedule.embed) row.insert(row.begin() + 2, 0);
    long long before = border_length_pairwise(sol.placement, sol.schedule, inst.grid);
    DepositionSchedule compacted = compact_schedule(sol.schedule);
    CHECK(compacted.width() == 4);
    CHECK(border_length_pairwise(sol.placement, compacted, inst.grid) == before);
}

TEST_CASE("single cell grids have zero border") {
    Instance inst;
    inst.grid = {1, 1};
    inst.alphabet = {"A"};
    inst.probes = {{0, {"A", "A"}}};
    Solution sol;
    sol.placement.cell_of = {{0, 0}};
    sol.schedule.deposition = {"A", "A"};
    sol.schedule.embed = {{1, 1}};
    sol.cost = 0;
    CHECK(border_length_pairwise(sol.placement, sol.schedule, inst.grid) == 0);
    CHECK(validate_solution(inst, sol).ok);
}
