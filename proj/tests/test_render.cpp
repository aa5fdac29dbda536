#include <sstream>
#include <string>

#include "bmp/render.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("text rendering shows one frame per mask and the grand total") {
    Instance inst = reference_instance();
    Solution sol = reference_solution();
    std::string text = render_text(inst, sol);
    CHECK(count_occurrences(text, "mask ") == 4);
    CHECK(text.find("mask 1 token C border 2") != std::string::npos);
    CHECK(text.find("mask 2 token T border 4") != std::string::npos);
    CHECK(text.find("mask 3 token A border 2") != std::string::npos);
    CHECK(text.find("mask 4 token C border 2") != std::string::npos);
    CHECK(text.find("total 10") != std::string::npos);

    long long frame_sum = 0;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
        if (word == "border") {
            long long b;
            in >> b;
            frame_sum += b;
        }
    }
    CHECK(frame_sum == sol.cost);
}

TEST_CASE("frames draw deposited cells as '#' and idle cells as '.'") {
    Instance inst;
    inst.grid = {1, 2};
    inst.alphabet = {"A"};
    inst.probes = {{0, {"A"}}, {1, {}}};
    Solution sol;
    sol.placement.cell_of = {{0, 0}, {0, 1}};
    sol.schedule.deposition = {"A"};
    sol.schedule.embed = {{1}, {0}};
    sol.cost = 1;
    std::string text = render_text(inst, sol);
    CHECK(text.find("#.") != std::string::npos);
    CHECK(text.find("mask 1 token A border 1") != std::string::npos);
    CHECK(text.find("total 1") != std::string::npos);
}

TEST_CASE("svg rendering emits well-formed markup with per-frame labels") {
    Instance inst = reference_instance();
    Solution sol = reference_solution();
    std::string svg = render_svg(inst, sol);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<rect") >= 16);  // 4 masks x 4 cells
    CHECK(svg.find("BL=4") != std::string::npos);
    CHECK(count_occurrences(svg, "<text") >= 4);
}
