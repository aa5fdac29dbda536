#ifndef BMP_EMBED_HPP
#define BMP_EMBED_HPP

#include <cstdint>
#include <optional>

#include "bmp/hst.hpp"
#include "bmp/model.hpp"

namespace bmp {

// Progressive profile alignment along the guide tree: children are merged
// bottom-up by an indel-only column DP, gaps propagate to all rows of a
// profile, and every alignment column carries exactly one token. The column
// token sequence becomes the deposition sequence.
DepositionSchedule guide_tree_align(const Instance& instance, const HstTree& tree);

// Optimal re-embedding of one probe against its neighbors' fixed patterns,
// DP over (position in D, position in the probe). Keeps the old pattern on
// ties, so the total border never increases and fixed points stay fixed.
DepositionSchedule reembed_single_probe(const Instance& instance,
                                        const Placement& placement,
                                        DepositionSchedule schedule, int probe);

// Round-robin sweeps of reembed_single_probe in ascending id order until no
// sweep improves the cost or max_rounds is reached.
DepositionSchedule refine_until_stable(const Instance& instance,
                                       const Placement& placement,
                                       DepositionSchedule schedule,
                                       int max_rounds = 10);

struct ExactBudget {
    std::uint64_t max_states = 1ull << 22;
};

enum class ExactStatus {
    kOptimal,
    kBudgetExceeded,  // state space or expansion budget exhausted
    kCutoff,          // optimum is >= the caller's cutoff (bounded search only)
};

struct ExactResult {
    ExactStatus status = ExactStatus::kOptimal;
    Solution solution;

    bool ok() const { return status == ExactStatus::kOptimal; }
};

// Optimal embedding for a fixed placement. States are per-probe consumed
// prefix lengths; a transition deposits one token into a non-empty subset of
// probes whose next token matches, at the cost of that mask's border.
// Exhaustive over the state DAG; ties between optimal deposition sequences
// are broken toward the lexicographically smallest D.
ExactResult pbmp_exact(const Instance& instance, const Placement& placement,
                       const ExactBudget& budget = {});

// A* variant used by the oracles: admissible heuristic from pairwise suffix
// LCS distances, optional cutoff (returns kCutoff when the optimum provably
// reaches it). Deterministic but without the lexicographic-D guarantee.
ExactResult pbmp_exact_bounded(const Instance& instance, const Placement& placement,
                               long long cutoff, const ExactBudget& budget = {});

}  // namespace bmp

#endif
