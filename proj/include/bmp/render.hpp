#ifndef BMP_RENDER_HPP
#define BMP_RENDER_HPP

#include <string>

#include "bmp/model.hpp"

namespace bmp {

// One frame per mask: header "mask T token X border B", then the grid with
// '#' for deposited cells and '.' otherwise; final "total" line.
std::string render_text(const Instance& instance, const Solution& solution);

// Static SVG, one grid per mask, deposited cells shaded and internal border
// segments drawn bold. The outer boundary is not a border.
std::string render_svg(const Instance& instance, const Solution& solution);

}  // namespace bmp

#endif
