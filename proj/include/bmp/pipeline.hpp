#ifndef BMP_PIPELINE_HPP
#define BMP_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bmp/model.hpp"

namespace bmp {

struct SolveOptions {
    std::uint64_t seed = 0;
    int trials = 16;
    int max_refine_rounds = 10;
    bool serpentine = false;
    // Reuse the placement tree as the alignment guide tree instead of
    // drawing a fresh one per trial.
    bool shared_guide_tree = false;
};

struct SolveStats {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<long long> trial_costs;
    int best_trial = -1;
};

struct SolveOutcome {
    Solution solution;
    SolveStats stats;
};

// Full randomized pipeline: per trial, embed the LCS metric into a random
// HST, place probes by the Euler tour, align along the tree, then refine.
// Best trial wins, ties broken by lexicographic deposition then trial index.
// Deterministic for fixed options; trials with nested seeds are monotone.
SolveOutcome solve_bmp(const Instance& instance, const SolveOptions& options = {});

// With a placement: sum of adjacent-pair LCS distances, a certified lower
// bound for that placement. Placement-free: half the sum over probes of
// their cheapest possible incident distances, degree-corrected — a certified
// bound over all placements.
long long lower_bound(const Instance& instance, const Placement& placement);
long long lower_bound(const Instance& instance);

// Flat key-value text block with cost, bounds, ratio, and trial statistics.
std::string ratio_report(const Instance& instance, const Solution& solution,
                         const SolveStats* stats = nullptr);

}  // namespace bmp

#endif
