#ifndef BMP_MODEL_HPP
#define BMP_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmp {

// A token is an opaque atom ("A", "0", "$", "e_1_2", ...). The gap atom "-"
// is reserved for embeddings and may not appear in alphabets or probes.
using Token = std::string;

inline const Token kGap = "-";

bool valid_token(const Token& t);

struct Probe {
    int id = 0;
    std::vector<Token> seq;

    int len() const { return static_cast<int>(seq.size()); }
};

struct Grid {
    int rows = 0;
    int cols = 0;

    int cells() const { return rows * cols; }
    bool in_bounds(int r, int c) const {
        return r >= 0 && r < rows && c >= 0 && c < cols;
    }
};

struct Instance {
    std::vector<Token> alphabet;
    std::vector<Probe> probes;  // probe ids are dense, probes[i].id == i
    Grid grid;

    int n() const { return static_cast<int>(probes.size()); }
};

// Bijection probe id -> cell, stored dense by id.
struct Placement {
    std::vector<std::pair<int, int>> cell_of;

    int size() const { return static_cast<int>(cell_of.size()); }
};

// Deposition sequence D plus per-probe deposit flags. embed[i][t] == 1 means
// probe i receives D[t]; reading D at the 1-positions spells probe i.
struct DepositionSchedule {
    std::vector<Token> deposition;
    std::vector<std::vector<std::uint8_t>> embed;

    int width() const { return static_cast<int>(deposition.size()); }
};

struct Mask {
    int step = 0;
    Token token;
    std::vector<std::pair<int, int>> cells;
};

struct Solution {
    Placement placement;
    DepositionSchedule schedule;
    long long cost = 0;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// Asymmetric border': positions where probe i deposits and probe j does not.
long long border_asym(const DepositionSchedule& schedule, int i, int j);

// Symmetric border: Hamming distance of the two deposit patterns.
long long border_sym(const DepositionSchedule& schedule, int i, int j);

// Pairwise accounting: sum of border' over ordered grid-adjacent pairs.
// The outer array boundary contributes nothing.
long long border_length_pairwise(const Placement& placement,
                                 const DepositionSchedule& schedule,
                                 const Grid& grid);

// Mask accounting: derive the mask list and sum per-mask borders.
long long border_length_masks(const Placement& placement,
                              const DepositionSchedule& schedule,
                              const Grid& grid);

// One mask per deposition step. Steps nobody uses yield empty cell sets.
std::vector<Mask> masks_of(const Placement& placement,
                           const DepositionSchedule& schedule);

// Border length of a single mask on the given grid.
long long mask_border(const Mask& mask, const Grid& grid);

// Checks every structural invariant; reports the first violation found.
ValidationReport validate_solution(const Instance& instance,
                                   const Solution& solution);

// Drops deposition steps no probe uses. Cost is unchanged.
DepositionSchedule compact_schedule(const DepositionSchedule& schedule);

}  // namespace bmp

#endif
