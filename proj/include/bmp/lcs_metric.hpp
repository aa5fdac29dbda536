#ifndef BMP_LCS_METRIC_HPP
#define BMP_LCS_METRIC_HPP

#include <vector>

#include "bmp/model.hpp"

namespace bmp {

// Pairwise integer distances d(i,j) = len_i + len_j - 2*|LCS|. Symmetric with
// zero diagonal; zero off-diagonal entries occur for duplicate sequences.
struct MetricSpace {
    int n = 0;
    std::vector<std::vector<long long>> dist;

    long long operator()(int i, int j) const { return dist[i][j]; }
};

int lcs_length(const std::vector<Token>& a, const std::vector<Token>& b);

// One longest common subsequence, leftmost DP backtrace for determinism.
std::vector<Token> lcs_tokens(const std::vector<Token>& a, const std::vector<Token>& b);

long long probe_distance(const Probe& a, const Probe& b);

MetricSpace build_metric(const Instance& instance);

// True when dist is symmetric, has zero diagonal, and satisfies the triangle
// inequality. Cubic; meant for tests and debug checks.
bool metric_axioms_hold(const MetricSpace& metric);

}  // namespace bmp

#endif
