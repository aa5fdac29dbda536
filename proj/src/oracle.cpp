#include "bmp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bmp/lcs_metric.hpp"

namespace bmp {

namespace {

// Cell-index permutations realizing the grid's symmetry group.
std::vector<std::vector<int>> grid_transforms(const Grid& grid) {
    const int R = grid.rows, C = grid.cols;
    auto idx = [C](int r, int c) { return r * C + c; };
    std::vector<std::vector<int>> transforms;
    auto add = [&](auto&& map_cell) {
        std::vector<int> t(R * C);
        for (int r = 0; r < R; ++r) {
            for (int c = 0; c < C; ++c) t[idx(r, c)] = map_cell(r, c);
        }
        transforms.push_back(std::move(t));
    };
    add([&](int r, int c) { return idx(r, c); });
    add([&](int r, int c) { return idx(r, C - 1 - c); });
    if (R > 1) {
        add([&](int r, int c) { return idx(R - 1 - r, c); });
        add([&](int r, int c) { return idx(R - 1 - r, C - 1 - c); });
    }
    if (R == C && R > 1) {
        add([&](int r, int c) { return idx(c, r); });
        add([&](int r, int c) { return idx(c, R - 1 - r); });
        add([&](int r, int c) { return idx(C - 1 - c, r); });
        add([&](int r, int c) { return idx(C - 1 - c, R - 1 - r); });
    }
    return transforms;
}

}  // namespace

std::vector<Placement> symmetry_classes(const Grid& grid) {
    const int cells = grid.cells();
    if (cells < 1 || cells > 9) throw std::invalid_argument("grid too large");
    auto transforms = grid_transforms(grid);

    std::vector<Placement> classes;
    std::vector<int> assign(cells);  // cell index -> probe id
    std::iota(assign.begin(), assign.end(), 0);
    do {
        bool canonical = true;
        std::vector<int> image(cells);
        for (const auto& t : transforms) {
            for (int cell = 0; cell < cells; ++cell) image[t[cell]] = assign[cell];
            if (image < assign) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Placement p;
        p.cell_of.resize(cells);
        for (int cell = 0; cell < cells; ++cell) {
            p.cell_of[assign[cell]] = {cell / grid.cols, cell % grid.cols};
        }
        classes.push_back(std::move(p));
    } while (std::next_permutation(assign.begin(), assign.end()));
    return classes;
}

ExactResult bmp_exact(const Instance& instance, const ExactBudget& budget) {
    if (instance.n() != instance.grid.cells()) {
        throw std::invalid_argument("probe count must equal grid cell count");
    }
    std::vector<Placement> classes = symmetry_classes(instance.grid);
    MetricSpace metric = build_metric(instance);
    const Grid& grid = instance.grid;

    auto adjacency_lb = [&](const Placement& placement) {
        std::vector<int> probe_at(grid.cells());
        for (int i = 0; i < instance.n(); ++i) {
            auto [r, c] = placement.cell_of[i];
            probe_at[r * grid.cols + c] = i;
        }
        long long lb = 0;
        for (int r = 0; r < grid.rows; ++r) {
            for (int c = 0; c < grid.cols; ++c) {
                if (c + 1 < grid.cols) {
                    lb += metric(probe_at[r * grid.cols + c], probe_at[r * grid.cols + c + 1]);
                }
                if (r + 1 < grid.rows) {
                    lb += metric(probe_at[r * grid.cols + c], probe_at[(r + 1) * grid.cols + c]);
                }
            }
        }
        return lb;
    };

    std::vector<std::pair<long long, std::size_t>> ranked;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        ranked.emplace_back(adjacency_lb(classes[i]), i);
    }
    std::stable_sort(ranked.begin(), ranked.end());

    ExactResult best{ExactStatus::kBudgetExceeded, {}};
    bool have = false;
    for (const auto& [lb, idx] : ranked) {
        if (have && lb >= best.solution.cost) break;
        long long cutoff = have ? best.solution.cost : -1;
        ExactResult r = pbmp_exact_bounded(instance, classes[idx], cutoff, budget);
        if (r.status == ExactStatus::kBudgetExceeded) return r;
        if (r.status == ExactStatus::kOptimal) {
            best = std::move(r);
            have = true;
        }
    }
    if (!have) return {ExactStatus::kBudgetExceeded, {}};
    best.status = ExactStatus::kOptimal;
    return best;
}

}  // namespace bmp
