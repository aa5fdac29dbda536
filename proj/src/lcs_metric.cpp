#include "bmp/lcs_metric.hpp"

#include <cassert>

namespace bmp {

namespace {

std::vector<std::vector<int>> lcs_table(const std::vector<Token>& a,
                                        const std::vector<Token>& b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    std::vector<std::vector<int>> dp(m + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (a[i - 1] == b[j - 1]) {
                dp[i][j] = dp[i - 1][j - 1] + 1;
            } else {
                dp[i][j] = std::max(dp[i - 1][j], dp[i][j - 1]);
            }
        }
    }
    return dp;
}

}  // namespace

int lcs_length(const std::vector<Token>& a, const std::vector<Token>& b) {
    if (a.empty() || b.empty()) return 0;
    return lcs_table(a, b)[a.size()][b.size()];
}

std::vector<Token> lcs_tokens(const std::vector<Token>& a, const std::vector<Token>& b) {
    if (a.empty() || b.empty()) return {};
    auto dp = lcs_table(a, b);
    std::vector<Token> out;
    int i = static_cast<int>(a.size());
    int j = static_cast<int>(b.size());
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1] && dp[i][j] == dp[i - 1][j - 1] + 1) {
            out.push_back(a[i - 1]);
            --i;
            --j;
        } else if (dp[i - 1][j] >= dp[i][j - 1]) {
            --i;  // prefer earlier match positions in a
        } else {
            --j;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

long long probe_distance(const Probe& a, const Probe& b) {
    return a.len() + b.len() - 2ll * lcs_length(a.seq, b.seq);
}

MetricSpace build_metric(const Instance& instance) {
    MetricSpace metric;
    metric.n = instance.n();
    metric.dist.assign(metric.n, std::vector<long long>(metric.n, 0));
    for (int i = 0; i < metric.n; ++i) {
        for (int j = i + 1; j < metric.n; ++j) {
            long long d = probe_distance(instance.probes[i], instance.probes[j]);
            metric.dist[i][j] = metric.dist[j][i] = d;
        }
    }
    assert(metric_axioms_hold(metric));
    return metric;
}

bool metric_axioms_hold(const MetricSpace& metric) {
    const int n = metric.n;
    for (int i = 0; i < n; ++i) {
        if (metric.dist[i][i] != 0) return false;
        for (int j = 0; j < n; ++j) {
            if (metric.dist[i][j] < 0 || metric.dist[i][j] != metric.dist[j][i]) {
                return false;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (metric.dist[i][j] > metric.dist[i][k] + metric.dist[k][j]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace bmp
