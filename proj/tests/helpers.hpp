#ifndef BMP_TEST_HELPERS_HPP
#define BMP_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bmp/model.hpp"

namespace bmp::testutil {

// The 2x2 reference instance {AC, TA, CT, CA} with D = CTAC; total border
// length 10, per-mask borders (2,4,2,2).
inline Instance reference_instance() {
    Instance inst;
    inst.grid = {2, 2};
    inst.alphabet = {"A", "C", "G", "T"};
    inst.probes = {
        {0, {"A", "C"}},
        {1, {"T", "A"}},
        {2, {"C", "T"}},
        {3, {"C", "A"}},
    };
    return inst;
}

inline Solution reference_solution() {
    Solution sol;
    sol.placement.cell_of = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
    sol.schedule.deposition = {"C", "T", "A", "C"};
    sol.schedule.embed = {
        {0, 0, 1, 1},  // AC = --AC
        {0, 1, 1, 0},  // TA = -TA-
        {1, 1, 0, 0},  // CT = CT--
        {1, 0, 1, 0},  // CA = C-A-
    };
    sol.cost = 10;
    return sol;
}

inline Instance random_instance(std::mt19937_64& rng, int n, int max_len,
                                int alphabet) {
    Instance inst;
    int side = 1;
    while (side * side < n) ++side;
    inst.grid = side * side == n ? Grid{side, side} : Grid{1, n};
    for (int a = 0; a < alphabet; ++a) {
        inst.alphabet.emplace_back(1, static_cast<char>('A' + a));
    }
    for (int i = 0; i < n; ++i) {
        Probe p;
        p.id = i;
        int len = static_cast<int>(rng() % (max_len + 1));
        for (int t = 0; t < len; ++t) {
            p.seq.push_back(inst.alphabet[rng() % alphabet]);
        }
        inst.probes.push_back(std::move(p));
    }
    return inst;
}

// Random valid solution: draw a deposition and per-probe deposit patterns,
// then read the probes off the patterns so everything is consistent.
inline std::pair<Instance, Solution> random_solved_instance(
    std::mt19937_64& rng, int n, int depo_len, int alphabet) {
    Instance inst;
    int side = 1;
    while (side * side < n) ++side;
    inst.grid = side * side == n ? Grid{side, side} : Grid{1, n};
    for (int a = 0; a < alphabet; ++a) {
        inst.alphabet.emplace_back(1, static_cast<char>('A' + a));
    }
    Solution sol;
    for (int t = 0; t < depo_len; ++t) {
        sol.schedule.deposition.push_back(inst.alphabet[rng() % alphabet]);
    }
    std::vector<int> cells(n);
    for (int i = 0; i < n; ++i) cells[i] = i;
    std::shuffle(cells.begin(), cells.end(), rng);
    for (int i = 0; i < n; ++i) {
        Probe p;
        p.id = i;
        std::vector<std::uint8_t> pattern(depo_len, 0);
        for (int t = 0; t < depo_len; ++t) {
            if (rng() % 2) {
                pattern[t] = 1;
                p.seq.push_back(sol.schedule.deposition[t]);
            }
        }
        sol.schedule.embed.push_back(std::move(pattern));
        sol.placement.cell_of.emplace_back(cells[i] / inst.grid.cols,
                                           cells[i] % inst.grid.cols);
        inst.probes.push_back(std::move(p));
    }
    sol.cost = border_length_pairwise(sol.placement, sol.schedule, inst.grid);
    return {std::move(inst), std::move(sol)};
}

inline std::string random_binary_string(std::mt19937_64& rng, int max_len) {
    int len = 1 + static_cast<int>(rng() % max_len);
    std::string s;
    for (int i = 0; i < len; ++i) s += rng() % 2 ? '1' : '0';
    return s;
}

}  // namespace bmp::testutil

#endif
