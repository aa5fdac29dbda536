#include "bmp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

#include "bmp/embed.hpp"
#include "bmp/euler_placement.hpp"
#include "bmp/hst.hpp"
#include "bmp/lcs_metric.hpp"
#include "bmp/rng.hpp"

namespace bmp {

namespace {

struct Trial {
    Solution solution;
    long long cost = 0;
};

Trial run_trial(const Instance& instance, const MetricSpace& metric,
                std::uint64_t trial_seed, const SolveOptions& options) {
    HstTree place_tree = frt_embed(metric, trial_seed);
    PlacementOrder order = euler_order(place_tree);
    Placement placement =
        order_to_placement(order, instance.grid, options.serpentine);

    const HstTree* guide = &place_tree;
    HstTree fresh;
    if (!options.shared_guide_tree) {
        fresh = frt_embed(metric, split_seed(trial_seed, 0x5eed));
        guide = &fresh;
    }
    DepositionSchedule schedule = guide_tree_align(instance, *guide);
    schedule = refine_until_stable(instance, placement, std::move(schedule),
                                   options.max_refine_rounds);
    schedule = compact_schedule(schedule);

    Trial t;
    t.cost = border_length_pairwise(placement, schedule, instance.grid);
    t.solution = {std::move(placement), std::move(schedule), t.cost};
    return t;
}

}  // namespace

SolveOutcome solve_bmp(const Instance& instance, const SolveOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (instance.n() != instance.grid.cells()) {
        throw std::invalid_argument("probe count must equal grid cell count");
    }
    MetricSpace metric = build_metric(instance);

    std::vector<std::future<Trial>> futures;
    futures.reserve(options.trials);
    for (int t = 0; t < options.trials; ++t) {
        futures.push_back(std::async(std::launch::async, run_trial,
                                     std::cref(instance), std::cref(metric),
                                     split_seed(options.seed, t),
                                     std::cref(options)));
    }

    SolveOutcome out;
    out.stats.seed = options.seed;
    out.stats.trials = options.trials;
    for (int t = 0; t < options.trials; ++t) {
        Trial trial = futures[t].get();
        out.stats.trial_costs.push_back(trial.cost);
        bool better = out.stats.best_trial < 0 ||
                      trial.cost < out.solution.cost ||
                      (trial.cost == out.solution.cost &&
                       trial.solution.schedule.deposition <
                           out.solution.schedule.deposition);
        if (better) {
            out.solution = std::move(trial.solution);
            out.stats.best_trial = t;
        }
    }
    return out;
}

long long lower_bound(const Instance& instance, const Placement& placement) {
    MetricSpace metric = build_metric(instance);
    const Grid& grid = instance.grid;
    std::vector<int> probe_at(grid.cells(), -1);
    for (int i = 0; i < instance.n(); ++i) {
        auto [r, c] = placement.cell_of[i];
        probe_at[r * grid.cols + c] = i;
    }
    long long total = 0;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            int i = probe_at[r * grid.cols + c];
            if (c + 1 < grid.cols) total += metric(i, probe_at[r * grid.cols + c + 1]);
            if (r + 1 < grid.rows) total += metric(i, probe_at[(r + 1) * grid.cols + c]);
        }
    }
    return total;
}

long long lower_bound(const Instance& instance) {
    const int n = instance.n();
    if (n <= 1) return 0;
    MetricSpace metric = build_metric(instance);
    const Grid& grid = instance.grid;
    // Minimum cell degree: every probe sits on a cell with at least this
    // many neighbors, each costing at least one of its cheapest distances.
    int min_degree = 4;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            int d = (r > 0) + (r + 1 < grid.rows) + (c > 0) + (c + 1 < grid.cols);
            min_degree = std::min(min_degree, d);
        }
    }
    long long doubled = 0;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> ds;
        for (int j = 0; j < n; ++j) {
            if (j != i) ds.push_back(metric(i, j));
        }
        std::sort(ds.begin(), ds.end());
        for (int k = 0; k < min_degree && k < static_cast<int>(ds.size()); ++k) {
            doubled += ds[k];
        }
    }
    return (doubled + 1) / 2;
}

std::string ratio_report(const Instance& instance, const Solution& solution,
                         const SolveStats* stats) {
    long long lb = lower_bound(instance);
    long long lb_placed = lower_bound(instance, solution.placement);
    std::ostringstream os;
    os << "cost " << solution.cost << "\n";
    os << "lower_bound " << lb << "\n";
    os << "lower_bound_placement " << lb_placed << "\n";
    os << "deposition_length " << solution.schedule.width() << "\n";
    if (solution.cost == 0) {
        os << "ratio 1\n";
    } else if (lb == 0) {
        os << "ratio inf\n";
    } else {
        os << "ratio " << static_cast<double>(solution.cost) / lb << "\n";
    }
    if (stats) {
        os << "seed " << stats->seed << "\n";
        os << "trials " << stats->trials << "\n";
        os << "best_trial " << stats->best_trial << "\n";
        os << "trial_costs";
        for (long long c : stats->trial_costs) os << " " << c;
        os << "\n";
    }
    return os.str();
}

}  // namespace bmp
