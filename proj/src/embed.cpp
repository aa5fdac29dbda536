#include "bmp/embed.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace bmp {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// ---------------------------------------------------------------------------
// Token interning. Ids follow lexicographic token order so that comparing id
// sequences compares deposition sequences lexicographically.

struct Tokenized {
    std::vector<Token> id_to_token;           // sorted
    std::vector<std::vector<int>> seqs;       // per probe id
    std::vector<std::pair<int, int>> adj;     // unordered adjacent probe pairs

    int probe_len(int i) const { return static_cast<int>(seqs[i].size()); }
};

Tokenized tokenize(const Instance& instance, const Placement* placement) {
    Tokenized tk;
    tk.id_to_token = instance.alphabet;
    std::sort(tk.id_to_token.begin(), tk.id_to_token.end());
    std::map<Token, int> index;
    for (int i = 0; i < static_cast<int>(tk.id_to_token.size()); ++i) {
        index[tk.id_to_token[i]] = i;
    }
    tk.seqs.resize(instance.n());
    for (const Probe& p : instance.probes) {
        for (const Token& t : p.seq) tk.seqs[p.id].push_back(index.at(t));
    }
    if (placement) {
        const Grid& grid = instance.grid;
        std::vector<int> probe_at(grid.cells(), -1);
        for (int i = 0; i < instance.n(); ++i) {
            auto [r, c] = placement->cell_of[i];
            probe_at[r * grid.cols + c] = i;
        }
        for (int r = 0; r < grid.rows; ++r) {
            for (int c = 0; c < grid.cols; ++c) {
                int i = probe_at[r * grid.cols + c];
                if (c + 1 < grid.cols) tk.adj.emplace_back(i, probe_at[r * grid.cols + c + 1]);
                if (r + 1 < grid.rows) tk.adj.emplace_back(i, probe_at[(r + 1) * grid.cols + c]);
            }
        }
    }
    return tk;
}

// ---------------------------------------------------------------------------
// Progressive alignment profiles.

struct Profile {
    std::vector<int> col_tok;                    // one token per column
    std::vector<int> members;                    // probe ids
    std::vector<std::vector<std::uint8_t>> bits;  // bits[m][column]

    int width() const { return static_cast<int>(col_tok.size()); }
    int deposits(int col) const {
        int d = 0;
        for (const auto& row : bits) d += row[col];
        return d;
    }
};

Profile leaf_profile(const Tokenized& tk, int probe) {
    Profile p;
    p.col_tok = tk.seqs[probe];
    p.members = {probe};
    p.bits = {std::vector<std::uint8_t>(p.col_tok.size(), 1)};
    return p;
}

// Indel-only pairwise merge: columns may be matched only on equal tokens,
// matches weighted by how many rows deposit in them. Unmatched columns get
// complementary gaps in the other profile's rows.
Profile merge_profiles(const Profile& a, const Profile& b) {
    const int m = a.width();
    const int n = b.width();
    std::vector<int> da(m), db(n);
    for (int i = 0; i < m; ++i) da[i] = a.deposits(i);
    for (int j = 0; j < n; ++j) db[j] = b.deposits(j);

    std::vector<std::vector<long long>> dp(m + 1, std::vector<long long>(n + 1, 0));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            long long best = std::max(dp[i - 1][j], dp[i][j - 1]);
            if (a.col_tok[i - 1] == b.col_tok[j - 1]) {
                best = std::max(best, dp[i - 1][j - 1] + da[i - 1] + db[j - 1]);
            }
            dp[i][j] = best;
        }
    }

    // Backtrace, preferring matches, then columns from a.
    std::vector<std::pair<int, int>> cols;  // (col in a or -1, col in b or -1)
    int i = m, j = n;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && a.col_tok[i - 1] == b.col_tok[j - 1] &&
            dp[i][j] == dp[i - 1][j - 1] + da[i - 1] + db[j - 1]) {
            cols.emplace_back(i - 1, j - 1);
            --i;
            --j;
        } else if (i > 0 && dp[i][j] == dp[i - 1][j]) {
            cols.emplace_back(i - 1, -1);
            --i;
        } else {
            cols.emplace_back(-1, j - 1);
            --j;
        }
    }
    std::reverse(cols.begin(), cols.end());

    Profile out;
    out.members = a.members;
    out.members.insert(out.members.end(), b.members.begin(), b.members.end());
    out.bits.assign(out.members.size(), {});
    for (auto [ca, cb] : cols) {
        out.col_tok.push_back(ca >= 0 ? a.col_tok[ca] : b.col_tok[cb]);
        for (std::size_t k = 0; k < a.members.size(); ++k) {
            out.bits[k].push_back(ca >= 0 ? a.bits[k][ca] : 0);
        }
        for (std::size_t k = 0; k < b.members.size(); ++k) {
            out.bits[a.members.size() + k].push_back(cb >= 0 ? b.bits[k][cb] : 0);
        }
    }
    return out;
}

int min_probe_below(const HstTree& tree, int v, std::vector<int>& memo) {
    if (memo[v] >= 0) return memo[v];
    int best = tree.nodes[v].probe >= 0 ? tree.nodes[v].probe : INT32_MAX;
    for (int c : tree.nodes[v].children) {
        best = std::min(best, min_probe_below(tree, c, memo));
    }
    return memo[v] = best;
}

Profile align_subtree(const Tokenized& tk, const HstTree& tree, int v,
                      std::vector<int>& label) {
    if (tree.nodes[v].probe >= 0) return leaf_profile(tk, tree.nodes[v].probe);
    std::vector<int> kids = tree.nodes[v].children;
    std::sort(kids.begin(), kids.end(),
              [&](int x, int y) { return label[x] < label[y]; });
    Profile acc = align_subtree(tk, tree, kids[0], label);
    for (std::size_t k = 1; k < kids.size(); ++k) {
        acc = merge_profiles(acc, align_subtree(tk, tree, kids[k], label));
    }
    return acc;
}

}  // namespace

DepositionSchedule guide_tree_align(const Instance& instance, const HstTree& tree) {
    Tokenized tk = tokenize(instance, nullptr);
    std::vector<int> label(tree.nodes.size(), -1);
    min_probe_below(tree, tree.root, label);
    Profile root = align_subtree(tk, tree, tree.root, label);

    DepositionSchedule schedule;
    for (int t : root.col_tok) schedule.deposition.push_back(tk.id_to_token[t]);
    schedule.embed.assign(instance.n(),
                          std::vector<std::uint8_t>(root.width(), 0));
    for (std::size_t k = 0; k < root.members.size(); ++k) {
        schedule.embed[root.members[k]] = root.bits[k];
    }
    return compact_schedule(schedule);
}

// ---------------------------------------------------------------------------
// Single-probe re-embedding.

DepositionSchedule reembed_single_probe(const Instance& instance,
                                        const Placement& placement,
                                        DepositionSchedule schedule, int probe) {
    const Grid& grid = instance.grid;
    const int width = schedule.width();
    const auto& seq = instance.probes[probe].seq;
    const int len = static_cast<int>(seq.size());

    std::vector<int> probe_at(grid.cells(), -1);
    for (int i = 0; i < instance.n(); ++i) {
        auto [r, c] = placement.cell_of[i];
        probe_at[r * grid.cols + c] = i;
    }
    std::vector<int> neighbors;
    {
        auto [r, c] = placement.cell_of[probe];
        const int dr[] = {0, 0, 1, -1};
        const int dc[] = {1, -1, 0, 0};
        for (int k = 0; k < 4; ++k) {
            int nr = r + dr[k], nc = c + dc[k];
            if (grid.in_bounds(nr, nc)) neighbors.push_back(probe_at[nr * grid.cols + nc]);
        }
    }

    // Per position: cost of depositing (neighbors idle there) vs skipping
    // (neighbors depositing there).
    std::vector<long long> take_cost(width, 0), skip_cost(width, 0);
    for (int j : neighbors) {
        for (int t = 0; t < width; ++t) {
            if (schedule.embed[j][t]) ++skip_cost[t];
            else ++take_cost[t];
        }
    }

    std::vector<std::vector<long long>> dp(width + 1,
                                           std::vector<long long>(len + 1, kInf));
    dp[0][0] = 0;
    for (int t = 0; t < width; ++t) {
        for (int k = 0; k <= len; ++k) {
            if (dp[t][k] >= kInf) continue;
            long long skip = dp[t][k] + skip_cost[t];
            if (skip < dp[t + 1][k]) dp[t + 1][k] = skip;
            if (k < len && schedule.deposition[t] == seq[k]) {
                long long take = dp[t][k] + take_cost[t];
                if (take < dp[t + 1][k + 1]) dp[t + 1][k + 1] = take;
            }
        }
    }
    if (dp[width][len] >= kInf) {
        throw std::invalid_argument("probe is not a subsequence of the deposition");
    }

    long long old_cost = 0;
    for (int j : neighbors) old_cost += border_sym(schedule, probe, j);
    if (dp[width][len] >= old_cost) return schedule;  // ties keep the old pattern

    std::vector<std::uint8_t> pattern(width, 0);
    int t = width, k = len;
    while (t > 0) {
        if (k > 0 && schedule.deposition[t - 1] == seq[k - 1] &&
            dp[t][k] == dp[t - 1][k - 1] + take_cost[t - 1]) {
            pattern[t - 1] = 1;
            --t;
            --k;
        } else {
            --t;
        }
    }
    schedule.embed[probe] = std::move(pattern);
    return schedule;
}

DepositionSchedule refine_until_stable(const Instance& instance,
                                       const Placement& placement,
                                       DepositionSchedule schedule,
                                       int max_rounds) {
    for (int round = 0; round < max_rounds; ++round) {
        long long before = border_length_pairwise(placement, schedule, instance.grid);
        for (int i = 0; i < instance.n(); ++i) {
            schedule = reembed_single_probe(instance, placement, std::move(schedule), i);
        }
        long long after = border_length_pairwise(placement, schedule, instance.grid);
        if (after >= before) break;
    }
    return schedule;
}

// ---------------------------------------------------------------------------
// Exact P-BMP search. States are mixed-radix encoded consumed-prefix vectors.

namespace {

struct ExactContext {
    Tokenized tk;
    int n = 0;
    std::vector<std::uint64_t> stride;
    std::uint64_t total_states = 0;
    std::uint64_t goal = 0;
    int n_tokens = 0;

    void decode(std::uint64_t state, std::vector<int>& prog) const {
        for (int i = n - 1; i >= 0; --i) {
            prog[i] = static_cast<int>(state / stride[i]);
            state %= stride[i];
        }
    }

    // Mask border of depositing exactly the probes in `subset`.
    long long mask_cost(std::uint64_t subset) const {
        long long cost = 0;
        for (auto [i, j] : tk.adj) {
            cost += ((subset >> i) ^ (subset >> j)) & 1ull;
        }
        return cost;
    }
};

std::optional<ExactContext> make_context(const Instance& instance,
                                         const Placement& placement,
                                         const ExactBudget& budget) {
    if (instance.n() > 63) return std::nullopt;
    ExactContext ctx;
    ctx.tk = tokenize(instance, &placement);
    ctx.n = instance.n();
    ctx.n_tokens = static_cast<int>(ctx.tk.id_to_token.size());
    ctx.stride.resize(ctx.n);
    std::uint64_t total = 1;
    for (int i = 0; i < ctx.n; ++i) {
        ctx.stride[i] = total;
        std::uint64_t radix = ctx.tk.probe_len(i) + 1;
        if (total > budget.max_states / radix) return std::nullopt;
        total *= radix;
    }
    ctx.total_states = total;
    ctx.goal = total - 1;  // all digits at their maximum
    return ctx;
}

// Eligible probes per token at a given state.
void eligible_masks(const ExactContext& ctx, const std::vector<int>& prog,
                    std::vector<std::uint64_t>& by_token) {
    std::fill(by_token.begin(), by_token.end(), 0);
    for (int i = 0; i < ctx.n; ++i) {
        if (prog[i] < ctx.tk.probe_len(i)) {
            by_token[ctx.tk.seqs[i][prog[i]]] |= 1ull << i;
        }
    }
}

std::uint64_t advance(const ExactContext& ctx, std::uint64_t state,
                      std::uint64_t subset) {
    while (subset) {
        int i = std::countr_zero(subset);
        subset &= subset - 1;
        state += ctx.stride[i];
    }
    return state;
}

Solution build_solution(const ExactContext& ctx, const Instance& instance,
                        const Placement& placement,
                        const std::vector<std::pair<int, std::uint64_t>>& steps) {
    Solution sol;
    sol.placement = placement;
    for (const auto& [tok, subset] : steps) {
        sol.schedule.deposition.push_back(ctx.tk.id_to_token[tok]);
    }
    sol.schedule.embed.assign(instance.n(),
                              std::vector<std::uint8_t>(steps.size(), 0));
    for (std::size_t t = 0; t < steps.size(); ++t) {
        for (int i = 0; i < instance.n(); ++i) {
            if ((steps[t].second >> i) & 1ull) sol.schedule.embed[i][t] = 1;
        }
    }
    sol.cost = border_length_pairwise(placement, sol.schedule, instance.grid);
    return sol;
}

}  // namespace

ExactResult pbmp_exact(const Instance& instance, const Placement& placement,
                       const ExactBudget& budget) {
    auto ctx_opt = make_context(instance, placement, budget);
    if (!ctx_opt) return {ExactStatus::kBudgetExceeded, {}};
    const ExactContext& ctx = *ctx_opt;

    // Cost-to-go over the full state DAG, swept in descending progress sum so
    // every successor is final before its predecessors.
    std::vector<long long> best(ctx.total_states, kInf);
    best[ctx.goal] = 0;
    const int max_sum = [&] {
        int s = 0;
        for (int i = 0; i < ctx.n; ++i) s += ctx.tk.probe_len(i);
        return s;
    }();
    std::vector<std::vector<std::uint64_t>> by_sum(max_sum + 1);
    {
        std::vector<int> prog(ctx.n);
        for (std::uint64_t s = 0; s < ctx.total_states; ++s) {
            ctx.decode(s, prog);
            int sum = 0;
            for (int v : prog) sum += v;
            by_sum[sum].push_back(s);
        }
    }
    std::vector<int> prog(ctx.n);
    std::vector<std::uint64_t> by_token(ctx.n_tokens);
    for (int sum = max_sum - 1; sum >= 0; --sum) {
        for (std::uint64_t s : by_sum[sum]) {
            ctx.decode(s, prog);
            eligible_masks(ctx, prog, by_token);
            long long b = kInf;
            for (int tok = 0; tok < ctx.n_tokens; ++tok) {
                std::uint64_t m = by_token[tok];
                if (!m) continue;
                for (std::uint64_t sub = m; sub; sub = (sub - 1) & m) {
                    long long c = ctx.mask_cost(sub) + best[advance(ctx, s, sub)];
                    b = std::min(b, c);
                }
            }
            best[s] = b;
        }
    }

    // Reconstruct the lexicographically smallest optimal deposition sequence.
    // Memoized over the optimal subgraph only, which stays small.
    std::unordered_map<std::uint64_t, std::vector<std::pair<int, std::uint64_t>>> memo;
    auto lex_suffix = [&](auto&& self, std::uint64_t s)
        -> const std::vector<std::pair<int, std::uint64_t>>& {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::vector<std::pair<int, std::uint64_t>> result;
        if (s != ctx.goal) {
            std::vector<int> pr(ctx.n);
            ctx.decode(s, pr);
            std::vector<std::uint64_t> masks(ctx.n_tokens);
            eligible_masks(ctx, pr, masks);
            bool have = false;
            for (int tok = 0; tok < ctx.n_tokens; ++tok) {
                std::uint64_t m = masks[tok];
                if (!m) continue;
                if (have && result[0].first < tok) break;  // tokens ascend; no better prefix left
                for (std::uint64_t sub = m; sub; sub = (sub - 1) & m) {
                    std::uint64_t nxt = advance(ctx, s, sub);
                    if (ctx.mask_cost(sub) + best[nxt] != best[s]) continue;
                    std::vector<std::pair<int, std::uint64_t>> cand;
                    cand.emplace_back(tok, sub);
                    const auto& tail = self(self, nxt);
                    cand.insert(cand.end(), tail.begin(), tail.end());
                    auto lex_less = [](const auto& x, const auto& y) {
                        std::vector<int> xs, ys;
                        for (auto& st : x) xs.push_back(st.first);
                        for (auto& st : y) ys.push_back(st.first);
                        return xs < ys;
                    };
                    if (!have || lex_less(cand, result)) {
                        result = std::move(cand);
                        have = true;
                    }
                }
            }
        }
        return memo.emplace(s, std::move(result)).first->second;
    };

    if (best[0] >= kInf) return {ExactStatus::kBudgetExceeded, {}};
    const auto& steps = lex_suffix(lex_suffix, 0);
    Solution sol = build_solution(ctx, instance, placement, steps);
    assert(sol.cost == best[0]);
    return {ExactStatus::kOptimal, std::move(sol)};
}

ExactResult pbmp_exact_bounded(const Instance& instance, const Placement& placement,
                               long long cutoff, const ExactBudget& budget) {
    auto ctx_opt = make_context(instance, placement, budget);
    if (!ctx_opt) return {ExactStatus::kBudgetExceeded, {}};
    const ExactContext& ctx = *ctx_opt;

    // Admissible heuristic: LCS distance between remaining suffixes, summed
    // over adjacent pairs. Suffix distance tables are built per pair.
    std::vector<std::vector<std::vector<long long>>> suffd(ctx.tk.adj.size());
    for (std::size_t e = 0; e < ctx.tk.adj.size(); ++e) {
        auto [i, j] = ctx.tk.adj[e];
        const auto& a = ctx.tk.seqs[i];
        const auto& b = ctx.tk.seqs[j];
        const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
        std::vector<std::vector<long long>> lcs(la + 1, std::vector<long long>(lb + 1, 0));
        for (int x = la - 1; x >= 0; --x) {
            for (int y = lb - 1; y >= 0; --y) {
                lcs[x][y] = a[x] == b[y] ? lcs[x + 1][y + 1] + 1
                                         : std::max(lcs[x + 1][y], lcs[x][y + 1]);
            }
        }
        suffd[e].assign(la + 1, std::vector<long long>(lb + 1, 0));
        for (int x = 0; x <= la; ++x) {
            for (int y = 0; y <= lb; ++y) {
                suffd[e][x][y] = (la - x) + (lb - y) - 2 * lcs[x][y];
            }
        }
    }
    auto heuristic = [&](const std::vector<int>& prog) {
        long long h = 0;
        for (std::size_t e = 0; e < ctx.tk.adj.size(); ++e) {
            h += suffd[e][prog[ctx.tk.adj[e].first]][prog[ctx.tk.adj[e].second]];
        }
        return h;
    };

    struct Entry {
        long long f;
        long long g;
        std::uint64_t state;
        bool operator>(const Entry& o) const {
            // Smallest f first; among ties prefer deeper states, then a
            // deterministic state order.
            if (f != o.f) return f > o.f;
            if (g != o.g) return g < o.g;
            return state > o.state;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::unordered_map<std::uint64_t, long long> dist;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::pair<int, std::uint64_t>>>
        parent;

    std::vector<int> prog(ctx.n);
    ctx.decode(0, prog);
    long long h0 = heuristic(prog);
    if (cutoff >= 0 && h0 >= cutoff) return {ExactStatus::kCutoff, {}};
    dist[0] = 0;
    open.push({h0, 0, 0});
    std::uint64_t expansions = 0;

    while (!open.empty()) {
        Entry e = open.top();
        open.pop();
        auto it = dist.find(e.state);
        if (it == dist.end() || it->second != e.g) continue;  // stale entry
        if (cutoff >= 0 && e.f >= cutoff) return {ExactStatus::kCutoff, {}};
        if (e.state == ctx.goal) {
            std::vector<std::pair<int, std::uint64_t>> steps;
            std::uint64_t s = e.state;
            while (s != 0) {
                auto [prev, step] = parent.at(s);
                steps.push_back(step);
                s = prev;
            }
            std::reverse(steps.begin(), steps.end());
            Solution sol = build_solution(ctx, instance, placement, steps);
            assert(sol.cost == e.g);
            return {ExactStatus::kOptimal, std::move(sol)};
        }
        if (++expansions > budget.max_states) return {ExactStatus::kBudgetExceeded, {}};

        ctx.decode(e.state, prog);
        std::vector<std::uint64_t> by_token(ctx.n_tokens, 0);
        eligible_masks(ctx, prog, by_token);
        for (int tok = 0; tok < ctx.n_tokens; ++tok) {
            std::uint64_t m = by_token[tok];
            if (!m) continue;
            for (std::uint64_t sub = m; sub; sub = (sub - 1) & m) {
                std::uint64_t nxt = advance(ctx, e.state, sub);
                long long g2 = e.g + ctx.mask_cost(sub);
                auto dit = dist.find(nxt);
                if (dit != dist.end() && dit->second <= g2) continue;
                dist[nxt] = g2;
                parent[nxt] = {e.state, {tok, sub}};
                std::vector<int> prog2(ctx.n);
                ctx.decode(nxt, prog2);
                open.push({g2 + heuristic(prog2), g2, nxt});
            }
        }
    }
    return {ExactStatus::kBudgetExceeded, {}};  // unreachable for valid inputs
}

}  // namespace bmp
