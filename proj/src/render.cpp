#include "bmp/render.hpp"

#include <sstream>

namespace bmp {

namespace {

std::vector<std::vector<std::vector<bool>>> mask_grids(const Instance& instance,
                                                       const Solution& solution) {
    const Grid& grid = instance.grid;
    std::vector<Mask> masks = masks_of(solution.placement, solution.schedule);
    std::vector<std::vector<std::vector<bool>>> out;
    for (const Mask& m : masks) {
        std::vector<std::vector<bool>> g(grid.rows, std::vector<bool>(grid.cols, false));
        for (auto [r, c] : m.cells) g[r][c] = true;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::string render_text(const Instance& instance, const Solution& solution) {
    const Grid& grid = instance.grid;
    std::vector<Mask> masks = masks_of(solution.placement, solution.schedule);
    auto grids = mask_grids(instance, solution);
    std::ostringstream os;
    long long total = 0;
    for (std::size_t t = 0; t < masks.size(); ++t) {
        long long b = mask_border(masks[t], grid);
        total += b;
        os << "mask " << (t + 1) << " token " << masks[t].token << " border "
           << b << "\n";
        for (int r = 0; r < grid.rows; ++r) {
            for (int c = 0; c < grid.cols; ++c) {
                os << (grids[t][r][c] ? '#' : '.');
            }
            os << "\n";
        }
        os << "\n";
    }
    os << "total " << total << "\n";
    return os.str();
}

std::string render_svg(const Instance& instance, const Solution& solution) {
    const Grid& grid = instance.grid;
    std::vector<Mask> masks = masks_of(solution.placement, solution.schedule);
    auto grids = mask_grids(instance, solution);

    const int cell = 24;
    const int pad = 16;
    const int frame_w = grid.cols * cell;
    const int frame_h = grid.rows * cell;
    const int width = pad + static_cast<int>(masks.size()) * (frame_w + pad);
    const int height = frame_h + 2 * pad + 16;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    for (std::size_t t = 0; t < masks.size(); ++t) {
        const int x0 = pad + static_cast<int>(t) * (frame_w + pad);
        const int y0 = pad;
        os << "<text x=\"" << x0 << "\" y=\"" << (y0 - 4)
           << "\" font-size=\"12\">" << masks[t].token << " BL="
           << mask_border(masks[t], grid) << "</text>\n";
        for (int r = 0; r < grid.rows; ++r) {
            for (int c = 0; c < grid.cols; ++c) {
                os << "<rect x=\"" << (x0 + c * cell) << "\" y=\""
                   << (y0 + r * cell) << "\" width=\"" << cell << "\" height=\""
                   << cell << "\" fill=\"" << (grids[t][r][c] ? "#888" : "#fff")
                   << "\" stroke=\"#ccc\"/>\n";
            }
        }
        // Bold internal border segments.
        auto line = [&](int x1, int y1, int x2, int y2) {
            os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
               << "\" y2=\"" << y2 << "\" stroke=\"#000\" stroke-width=\"3\"/>\n";
        };
        for (int r = 0; r < grid.rows; ++r) {
            for (int c = 0; c < grid.cols; ++c) {
                if (c + 1 < grid.cols && grids[t][r][c] != grids[t][r][c + 1]) {
                    line(x0 + (c + 1) * cell, y0 + r * cell, x0 + (c + 1) * cell,
                         y0 + (r + 1) * cell);
                }
                if (r + 1 < grid.rows && grids[t][r][c] != grids[t][r + 1][c]) {
                    line(x0 + c * cell, y0 + (r + 1) * cell, x0 + (c + 1) * cell,
                         y0 + (r + 1) * cell);
                }
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bmp
