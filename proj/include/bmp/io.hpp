#ifndef BMP_IO_HPP
#define BMP_IO_HPP

#include <optional>
#include <string>

#include "bmp/model.hpp"

namespace bmp {

// Simple undirected graph given as `n m` header plus one `i j` line per edge,
// vertices 1-based. Multigraphs and self-loops are rejected at parse time.
struct GraphInput {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored with i < j, 1-based
};

template <typename T>
struct ParseResult {
    std::optional<T> value;
    std::string error;  // "line L: message" on failure

    bool ok() const { return value.has_value(); }
};

ParseResult<Instance> parse_instance(const std::string& text);
std::string emit_instance(const Instance& instance);

ParseResult<Solution> parse_solution(const std::string& text);
std::string emit_solution(const Solution& solution);

ParseResult<GraphInput> parse_graph(const std::string& text);
std::string emit_graph(const GraphInput& graph);

}  // namespace bmp

#endif
