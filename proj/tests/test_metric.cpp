#include <random>

#include "bmp/lcs_metric.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

namespace {

// Independent oracle: longest common subsequence by enumerating every
// subsequence of the shorter string.
int lcs_brute(const std::vector<Token>& a, const std::vector<Token>& b) {
    const auto& s = a.size() <= b.size() ? a : b;
    const auto& t = a.size() <= b.size() ? b : a;
    int best = 0;
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
        std::vector<Token> sub;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if ((mask >> i) & 1u) sub.push_back(s[i]);
        }
        // Is sub a subsequence of t?
        std::size_t at = 0;
        for (const Token& tok : t) {
            if (at < sub.size() && tok == sub[at]) ++at;
        }
        if (at == sub.size()) best = std::max<int>(best, sub.size());
    }
    return best;
}

std::vector<Token> random_seq(std::mt19937_64& rng, int max_len, int alphabet) {
    std::vector<Token> s;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) {
        s.emplace_back(1, static_cast<char>('A' + rng() % alphabet));
    }
    return s;
}

}  // namespace

TEST_CASE("lcs_length matches subsequence enumeration") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        auto a = random_seq(rng, 8, 2 + rng() % 2);
        auto b = random_seq(rng, 8, 2 + rng() % 2);
        REQUIRE(lcs_length(a, b) == lcs_brute(a, b));
    }
}

TEST_CASE("lcs_tokens returns a real common subsequence of maximal length") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 100; ++it) {
        auto a = random_seq(rng, 7, 2);
        auto b = random_seq(rng, 7, 2);
        auto lcs = lcs_tokens(a, b);
        CHECK(static_cast<int>(lcs.size()) == lcs_length(a, b));
        for (const auto& s : {a, b}) {
            std::size_t at = 0;
            for (const Token& tok : s) {
                if (at < lcs.size() && tok == lcs[at]) ++at;
            }
            CHECK(at == lcs.size());
        }
    }
}

TEST_CASE("probe distance is the embedding distance d = li + lj - 2|LCS|") {
    Probe a{0, {"A", "C"}};
    Probe b{1, {"C", "A"}};
    CHECK(probe_distance(a, a) == 0);
    CHECK(probe_distance(a, b) == 2);
    Probe empty{2, {}};
    CHECK(probe_distance(a, empty) == 2);
}

TEST_CASE("metric axioms hold on random instances") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
        Instance inst = random_instance(rng, 1 + rng() % 6, 4, 1 + rng() % 3);
        MetricSpace metric = build_metric(inst);
        REQUIRE(metric_axioms_hold(metric));
    }
}

TEST_CASE("duplicate probes are at distance zero") {
    Instance inst;
    inst.grid = {1, 2};
    inst.alphabet = {"A"};
    inst.probes = {{0, {"A", "A"}}, {1, {"A", "A"}}};
    MetricSpace metric = build_metric(inst);
    CHECK(metric(0, 1) == 0);
}
