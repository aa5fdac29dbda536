#include "bmp/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bmp {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> fields;
    std::string f;
    while (in >> f) fields.push_back(f);
    return fields;
}

std::string err(int lineno, const std::string& msg) {
    return "line " + std::to_string(lineno) + ": " + msg;
}

bool parse_int(const std::string& s, int& out) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) return false;
        out = static_cast<int>(v);
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace

ParseResult<Instance> parse_instance(const std::string& text) {
    Instance inst;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_grid = false, seen_alphabet = false;
    std::set<Token> alpha;
    int next_id = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields[0] == "grid") {
            if (seen_grid) return {{}, err(lineno, "duplicate grid line")};
            if (fields.size() != 3 || !parse_int(fields[1], inst.grid.rows) ||
                !parse_int(fields[2], inst.grid.cols) || inst.grid.rows <= 0 ||
                inst.grid.cols <= 0) {
                return {{}, err(lineno, "expected 'grid <rows> <cols>' with positive sizes")};
            }
            seen_grid = true;
        } else if (fields[0] == "alphabet") {
            if (seen_alphabet) return {{}, err(lineno, "duplicate alphabet line")};
            for (std::size_t i = 1; i < fields.size(); ++i) {
                if (!valid_token(fields[i])) {
                    return {{}, err(lineno, "invalid token '" + fields[i] + "'")};
                }
                if (!alpha.insert(fields[i]).second) {
                    return {{}, err(lineno, "duplicate token '" + fields[i] + "'")};
                }
                inst.alphabet.push_back(fields[i]);
            }
            seen_alphabet = true;
        } else if (fields[0] == "probe") {
            int id;
            if (fields.size() < 2 || !parse_int(fields[1], id)) {
                return {{}, err(lineno, "expected 'probe <id> <tok> ...'")};
            }
            if (id != next_id) {
                return {{}, err(lineno, "probe ids must be dense and in order; expected " +
                                            std::to_string(next_id))};
            }
            Probe p;
            p.id = id;
            for (std::size_t i = 2; i < fields.size(); ++i) {
                if (!alpha.count(fields[i])) {
                    return {{}, err(lineno, "probe token '" + fields[i] + "' not in alphabet")};
                }
                p.seq.push_back(fields[i]);
            }
            inst.probes.push_back(std::move(p));
            ++next_id;
        } else {
            return {{}, err(lineno, "unknown directive '" + fields[0] + "'")};
        }
    }
    if (!seen_grid) return {{}, "line 1: missing grid line"};
    if (!seen_alphabet) return {{}, "line 2: missing alphabet line"};
    if (inst.grid.cells() != inst.n()) {
        return {{}, err(lineno, "grid has " + std::to_string(inst.grid.cells()) +
                                    " cells but " + std::to_string(inst.n()) +
                                    " probes were given")};
    }
    return {std::move(inst), ""};
}

std::string emit_instance(const Instance& instance) {
    std::ostringstream out;
    out << "grid " << instance.grid.rows << " " << instance.grid.cols << "\n";
    out << "alphabet";
    for (const Token& t : instance.alphabet) out << " " << t;
    out << "\n";
    for (const Probe& p : instance.probes) {
        out << "probe " << p.id;
        for (const Token& t : p.seq) out << " " << t;
        out << "\n";
    }
    return out.str();
}

ParseResult<Solution> parse_solution(const std::string& text) {
    Solution sol;
    sol.cost = -1;  // unknown until a cost line is seen
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_deposition = false;
    int next_id = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields[0] == "deposition") {
            if (seen_deposition) return {{}, err(lineno, "duplicate deposition line")};
            for (std::size_t i = 1; i < fields.size(); ++i) {
                if (!valid_token(fields[i])) {
                    return {{}, err(lineno, "invalid token '" + fields[i] + "'")};
                }
                sol.schedule.deposition.push_back(fields[i]);
            }
            seen_deposition = true;
        } else if (fields[0] == "cost") {
            int c;
            if (fields.size() != 2 || !parse_int(fields[1], c) || c < 0) {
                return {{}, err(lineno, "expected 'cost <non-negative integer>'")};
            }
            sol.cost = c;
        } else if (fields[0] == "place") {
            if (!seen_deposition) {
                return {{}, err(lineno, "place line before deposition line")};
            }
            int id, r, c;
            if (fields.size() < 4 || fields.size() > 5 || !parse_int(fields[1], id) ||
                !parse_int(fields[2], r) || !parse_int(fields[3], c)) {
                return {{}, err(lineno, "expected 'place <id> <row> <col> <bitstring>'")};
            }
            if (id != next_id) {
                return {{}, err(lineno, "place ids must be dense and in order; expected " +
                                            std::to_string(next_id))};
            }
            std::string bits = fields.size() == 5 ? fields[4] : "";
            if (static_cast<int>(bits.size()) !=
                static_cast<int>(sol.schedule.deposition.size())) {
                return {{}, err(lineno, "bitstring length differs from |D|")};
            }
            std::vector<std::uint8_t> pattern;
            for (char b : bits) {
                if (b != '0' && b != '1') {
                    return {{}, err(lineno, "bitstring must be over '0'/'1'")};
                }
                pattern.push_back(b == '1');
            }
            sol.placement.cell_of.emplace_back(r, c);
            sol.schedule.embed.push_back(std::move(pattern));
            ++next_id;
        } else {
            return {{}, err(lineno, "unknown directive '" + fields[0] + "'")};
        }
    }
    if (!seen_deposition) return {{}, "line 1: missing deposition line"};
    return {std::move(sol), ""};
}

std::string emit_solution(const Solution& solution) {
    std::ostringstream out;
    out << "deposition";
    for (const Token& t : solution.schedule.deposition) out << " " << t;
    out << "\n";
    out << "cost " << solution.cost << "\n";
    for (int i = 0; i < solution.placement.size(); ++i) {
        auto [r, c] = solution.placement.cell_of[i];
        out << "place " << i << " " << r << " " << c;
        std::string bits;
        for (auto b : solution.schedule.embed[i]) bits += b ? '1' : '0';
        if (!bits.empty()) out << " " << bits;
        out << "\n";
    }
    return out.str();
}

ParseResult<GraphInput> parse_graph(const std::string& text) {
    GraphInput g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int m = -1;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (m < 0) {
            if (fields.size() != 2 || !parse_int(fields[0], g.n) ||
                !parse_int(fields[1], m) || g.n <= 0 || m < 0) {
                return {{}, err(lineno, "expected header 'n m'")};
            }
        } else {
            int i, j;
            if (fields.size() != 2 || !parse_int(fields[0], i) || !parse_int(fields[1], j)) {
                return {{}, err(lineno, "expected edge 'i j'")};
            }
            if (i < 1 || i > g.n || j < 1 || j > g.n) {
                return {{}, err(lineno, "vertex out of range")};
            }
            if (i == j) return {{}, err(lineno, "self-loops are not allowed")};
            auto e = std::minmax(i, j);
            if (!seen.insert({e.first, e.second}).second) {
                return {{}, err(lineno, "duplicate edge")};
            }
            g.edges.emplace_back(e.first, e.second);
        }
    }
    if (m < 0) return {{}, "line 1: missing header"};
    if (static_cast<int>(g.edges.size()) != m) {
        return {{}, err(lineno, "header promises " + std::to_string(m) + " edges, got " +
                                    std::to_string(g.edges.size()))};
    }
    std::sort(g.edges.begin(), g.edges.end());
    return {std::move(g), ""};
}

std::string emit_graph(const GraphInput& graph) {
    std::ostringstream out;
    out << graph.n << " " << graph.edges.size() << "\n";
    for (auto [i, j] : graph.edges) out << i << " " << j << "\n";
    return out.str();
}

}  // namespace bmp
