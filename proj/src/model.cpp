#include "bmp/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bmp {

bool valid_token(const Token& t) {
    if (t.empty() || t == kGap) return false;
    for (char c : t) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

namespace {

void check_probe_id(const DepositionSchedule& schedule, int i) {
    if (i < 0 || i >= static_cast<int>(schedule.embed.size())) {
        throw std::out_of_range("unknown probe id " + std::to_string(i));
    }
}

}  // namespace

long long border_asym(const DepositionSchedule& schedule, int i, int j) {
    check_probe_id(schedule, i);
    check_probe_id(schedule, j);
    const auto& ei = schedule.embed[i];
    const auto& ej = schedule.embed[j];
    long long count = 0;
    for (std::size_t t = 0; t < ei.size(); ++t) {
        if (ei[t] && !ej[t]) ++count;
    }
    return count;
}

long long border_sym(const DepositionSchedule& schedule, int i, int j) {
    check_probe_id(schedule, i);
    check_probe_id(schedule, j);
    const auto& ei = schedule.embed[i];
    const auto& ej = schedule.embed[j];
    long long count = 0;
    for (std::size_t t = 0; t < ei.size(); ++t) {
        if (ei[t] != ej[t]) ++count;
    }
    return count;
}

long long border_length_pairwise(const Placement& placement,
                                 const DepositionSchedule& schedule,
                                 const Grid& grid) {
    const int n = placement.size();
    std::vector<int> probe_at(grid.cells(), -1);
    for (int i = 0; i < n; ++i) {
        auto [r, c] = placement.cell_of[i];
        if (!grid.in_bounds(r, c) || probe_at[r * grid.cols + c] != -1) {
            throw std::invalid_argument("placement is not bijective");
        }
        probe_at[r * grid.cols + c] = i;
    }
    long long total = 0;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            int i = probe_at[r * grid.cols + c];
            if (c + 1 < grid.cols) {
                total += border_sym(schedule, i, probe_at[r * grid.cols + c + 1]);
            }
            if (r + 1 < grid.rows) {
                total += border_sym(schedule, i, probe_at[(r + 1) * grid.cols + c]);
            }
        }
    }
    // Each unordered pair's Hamming border equals the sum of the two
    // ordered border' terms.
    return total;
}

std::vector<Mask> masks_of(const Placement& placement,
                           const DepositionSchedule& schedule) {
    std::vector<Mask> masks(schedule.width());
    for (int t = 0; t < schedule.width(); ++t) {
        masks[t].step = t;
        masks[t].token = schedule.deposition[t];
    }
    for (int i = 0; i < static_cast<int>(schedule.embed.size()); ++i) {
        for (int t = 0; t < schedule.width(); ++t) {
            if (schedule.embed[i][t]) masks[t].cells.push_back(placement.cell_of[i]);
        }
    }
    return masks;
}

long long mask_border(const Mask& mask, const Grid& grid) {
    std::vector<std::uint8_t> deposited(grid.cells(), 0);
    for (auto [r, c] : mask.cells) deposited[r * grid.cols + c] = 1;
    long long total = 0;
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            if (c + 1 < grid.cols &&
                deposited[r * grid.cols + c] != deposited[r * grid.cols + c + 1]) {
                ++total;
            }
            if (r + 1 < grid.rows &&
                deposited[r * grid.cols + c] != deposited[(r + 1) * grid.cols + c]) {
                ++total;
            }
        }
    }
    return total;
}

long long border_length_masks(const Placement& placement,
                              const DepositionSchedule& schedule,
                              const Grid& grid) {
    long long total = 0;
    for (const Mask& mask : masks_of(placement, schedule)) {
        total += mask_border(mask, grid);
    }
    return total;
}

ValidationReport validate_solution(const Instance& instance,
                                   const Solution& solution) {
    const int n = instance.n();
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };

    if (instance.grid.cells() != n) {
        return fail("grid size does not match probe count");
    }
    if (solution.placement.size() != n) {
        return fail("placement covers " + std::to_string(solution.placement.size()) +
                    " probes, expected " + std::to_string(n));
    }
    std::vector<int> probe_at(instance.grid.cells(), -1);
    for (int i = 0; i < n; ++i) {
        auto [r, c] = solution.placement.cell_of[i];
        if (!instance.grid.in_bounds(r, c)) {
            return fail("probe " + std::to_string(i) + " placed out of bounds at (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");
        }
        int& slot = probe_at[r * instance.grid.cols + c];
        if (slot != -1) {
            return fail("not bijective: probes " + std::to_string(slot) + " and " +
                        std::to_string(i) + " share cell (" + std::to_string(r) + "," +
                        std::to_string(c) + ")");
        }
        slot = i;
    }

    const auto& schedule = solution.schedule;
    if (static_cast<int>(schedule.embed.size()) != n) {
        return fail("schedule covers " + std::to_string(schedule.embed.size()) +
                    " probes, expected " + std::to_string(n));
    }
    for (const Token& t : schedule.deposition) {
        if (!valid_token(t)) return fail("invalid deposition token '" + t + "'");
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(schedule.embed[i].size()) != schedule.width()) {
            return fail("probe " + std::to_string(i) +
                        " pattern length differs from |D|");
        }
        std::vector<Token> spelled;
        for (int t = 0; t < schedule.width(); ++t) {
            if (schedule.embed[i][t]) spelled.push_back(schedule.deposition[t]);
        }
        if (spelled != instance.probes[i].seq) {
            return fail("probe reconstruction mismatch for probe " + std::to_string(i));
        }
    }

    long long pairwise =
        border_length_pairwise(solution.placement, schedule, instance.grid);
    if (solution.cost != pairwise) {
        long long masks = border_length_masks(solution.placement, schedule, instance.grid);
        return fail("cost mismatch (pairwise=" + std::to_string(pairwise) +
                    " masks=" + std::to_string(masks) +
                    " claimed=" + std::to_string(solution.cost) + ")");
    }
    return {};
}

DepositionSchedule compact_schedule(const DepositionSchedule& schedule) {
    DepositionSchedule out;
    out.embed.resize(schedule.embed.size());
    for (int t = 0; t < schedule.width(); ++t) {
        bool used = false;
        for (const auto& row : schedule.embed) {
            if (row[t]) { used = true; break; }
        }
        if (!used) continue;
        out.deposition.push_back(schedule.deposition[t]);
        for (std::size_t i = 0; i < schedule.embed.size(); ++i) {
            out.embed[i].push_back(schedule.embed[i][t]);
        }
    }
    return out;
}

}  // namespace bmp
