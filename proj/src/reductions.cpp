#include "bmp/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bmp/lcs_metric.hpp"

namespace bmp {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

int ScsInput::max_len() const {
    int m = 0;
    for (const auto& s : strings) m = std::max(m, static_cast<int>(s.size()));
    return m;
}

long long ScsInput::total_len() const {
    long long t = 0;
    for (const auto& s : strings) t += static_cast<long long>(s.size());
    return t;
}

ScsInput make_scs_input(std::vector<std::string> strings) {
    if (strings.empty()) throw std::invalid_argument("need at least one string");
    for (const auto& s : strings) {
        for (char c : s) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("strings must be binary");
            }
        }
    }
    return ScsInput{std::move(strings)};
}

// ---------------------------------------------------------------------------
// I(p,q) construction.

IpqInstance build_ipq(const ScsInput& scs, int p, int q) {
    const int k = scs.k();
    const long long L = scs.total_len();
    if (p < 0 || q < 0 || p > L + k || q > L + k) {
        throw std::invalid_argument("p,q out of range");
    }
    const int side = 2 * k + 1;
    // Special rows; with k == 1 there is no room for dummy rows.
    const int row_all0 = k >= 2 ? 1 : 0;
    const int row_seq = row_all0 + 1;
    const int row_all1 = row_seq + 1;

    IpqInstance out;
    out.k = k;
    out.L = L;
    out.instance.grid = {side, side};
    out.instance.alphabet = {"0", "1", "$"};
    out.placement.cell_of.resize(side * side);
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            Probe probe;
            probe.id = r * side + c;
            if (r == row_all0) {
                probe.seq.assign(p, "0");
            } else if (r == row_all1) {
                probe.seq.assign(q, "1");
            } else if (r == row_seq && c % 2 == 1) {
                for (char ch : scs.strings[(c - 1) / 2]) {
                    probe.seq.emplace_back(1, ch);
                }
            } else {
                probe.seq = {"$"};
            }
            out.placement.cell_of[probe.id] = {r, c};
            out.instance.probes.push_back(std::move(probe));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structured exact solver. After the single "$" mask, the remaining
// deposition is over {0,1}; the all-0/all-1 rows deposit uniformly and the
// seq-row strings sit between "$" delimiters, so the only coupling is
// vertical through the deposition sequence. Per step with character a:
// depositing the whole all-a-row costs k (the row/seq Hamming contribution
// of that step), while leaving it idle costs 2 per depositing seq cell.

namespace {

struct IpqDp {
    const ScsInput* scs;
    int p, q, k;
    std::vector<int> len;
    std::vector<long long> stride;  // progress strides, then o, then z
    long long n_states = 0;

    long long encode(int z, int o, const std::vector<int>& prog) const {
        long long idx = 0;
        for (int i = 0; i < k; ++i) idx += stride[i] * prog[i];
        idx += stride[k] * o + stride[k + 1] * z;
        return idx;
    }
    void decode(long long idx, int& z, int& o, std::vector<int>& prog) const {
        z = static_cast<int>(idx / stride[k + 1]);
        idx %= stride[k + 1];
        o = static_cast<int>(idx / stride[k]);
        idx %= stride[k];
        for (int i = k - 1; i >= 0; --i) {
            prog[i] = static_cast<int>(idx / stride[i]);
            idx %= stride[i];
        }
    }
};

struct IpqStep {
    char a;            // '0' or '1'
    bool row_dep;
    unsigned subset;   // seq cells advancing
};

IpqDp make_ipq_dp(const ScsInput& scs, int p, int q) {
    IpqDp dp;
    dp.scs = &scs;
    dp.p = p;
    dp.q = q;
    dp.k = scs.k();
    if (dp.k > 16) throw std::invalid_argument("too many strings");
    for (const auto& s : scs.strings) dp.len.push_back(static_cast<int>(s.size()));
    long long total = 1;
    for (int i = 0; i < dp.k; ++i) {
        dp.stride.push_back(total);
        total *= dp.len[i] + 1;
    }
    dp.stride.push_back(total);
    total *= q + 1;
    dp.stride.push_back(total);
    total *= p + 1;
    dp.n_states = total;
    return dp;
}

// All transitions from a state, with their costs and successors.
template <typename Fn>
void ipq_transitions(const IpqDp& dp, int z, int o, const std::vector<int>& prog,
                     long long idx, Fn&& fn) {
    for (char a : {'0', '1'}) {
        unsigned eligible = 0;
        for (int i = 0; i < dp.k; ++i) {
            if (prog[i] < dp.len[i] && dp.scs->strings[i][prog[i]] == a) {
                eligible |= 1u << i;
            }
        }
        const bool row_ok = a == '0' ? z < dp.p : o < dp.q;
        for (int row_dep = 1; row_dep >= 0; --row_dep) {
            if (row_dep && !row_ok) continue;
            // Enumerate subsets of eligible cells, largest first is not
            // needed; empty subset is only legal with a row deposit.
            unsigned sub = eligible;
            while (true) {
                if (row_dep || sub) {
                    int m = std::popcount(sub);
                    long long cost = (row_dep ? dp.k - m : m) + m;
                    long long nxt = idx + (row_dep ? dp.stride[a == '0' ? dp.k + 1 : dp.k] : 0);
                    for (int i = 0; i < dp.k; ++i) {
                        if ((sub >> i) & 1u) nxt += dp.stride[i];
                    }
                    fn(IpqStep{a, row_dep != 0, sub}, cost, nxt);
                }
                if (sub == 0) break;
                sub = (sub - 1) & eligible;
            }
        }
    }
}

}  // namespace

IpqResult solve_ipq_exact(const ScsInput& scs, int p, int q) {
    IpqInstance built = build_ipq(scs, p, q);
    const int k = scs.k();
    const long long L = scs.total_len();
    IpqDp dp = make_ipq_dp(scs, p, q);

    // Cost-to-go sweep in descending total progress.
    std::vector<long long> best(dp.n_states, kInf);
    const int max_sum = p + q + static_cast<int>(L);
    std::vector<std::vector<long long>> by_sum(max_sum + 1);
    {
        std::vector<int> prog(k);
        int z, o;
        for (long long s = 0; s < dp.n_states; ++s) {
            dp.decode(s, z, o, prog);
            int sum = z + o;
            for (int v : prog) sum += v;
            by_sum[sum].push_back(s);
        }
    }
    best[dp.n_states - 1] = 0;
    std::vector<int> prog(k);
    int z, o;
    for (int sum = max_sum - 1; sum >= 0; --sum) {
        for (long long s : by_sum[sum]) {
            dp.decode(s, z, o, prog);
            long long b = kInf;
            ipq_transitions(dp, z, o, prog, s,
                            [&](const IpqStep&, long long cost, long long nxt) {
                                b = std::min(b, cost + best[nxt]);
                            });
            best[s] = b;
        }
    }

    // Lexicographically least optimal deposition, memoized on the optimal
    // subgraph reachable from the start.
    std::map<long long, std::string> lex;
    auto lex_suffix = [&](auto&& self, long long s) -> const std::string& {
        auto it = lex.find(s);
        if (it != lex.end()) return it->second;
        std::string r;
        if (s != dp.n_states - 1) {
            std::vector<int> pr(k);
            int zz, oo;
            dp.decode(s, zz, oo, pr);
            bool have = false;
            ipq_transitions(dp, zz, oo, pr, s,
                            [&](const IpqStep& step, long long cost, long long nxt) {
                                if (cost + best[nxt] != best[s]) return;
                                std::string cand;
                                cand += step.a;
                                cand += self(self, nxt);
                                if (!have || cand < r) {
                                    r = std::move(cand);
                                    have = true;
                                }
                            });
        }
        return lex.emplace(s, std::move(r)).first->second;
    };
    const std::string depo = lex_suffix(lex_suffix, 0);

    // Re-walk the lex-min path collecting concrete steps: prefer a row
    // deposit, then the smallest cell subset, among moves that keep both
    // optimality and the chosen character suffix.
    std::vector<IpqStep> steps;
    {
        long long s = 0;
        std::string rem = depo;
        while (s != dp.n_states - 1) {
            std::vector<int> pr(k);
            int zz, oo;
            dp.decode(s, zz, oo, pr);
            bool found = false;
            IpqStep pick{};
            long long pick_next = -1;
            ipq_transitions(dp, zz, oo, pr, s,
                            [&](const IpqStep& step, long long cost, long long nxt) {
                                if (cost + best[nxt] != best[s]) return;
                                if (step.a != rem[0]) return;
                                if (lex.at(nxt) != rem.substr(1)) return;
                                bool better = !found ||
                                              (step.row_dep && !pick.row_dep) ||
                                              (step.row_dep == pick.row_dep &&
                                               step.subset < pick.subset);
                                if (better) {
                                    pick = step;
                                    pick_next = nxt;
                                    found = true;
                                }
                            });
            assert(found);
            steps.push_back(pick);
            rem.erase(rem.begin());
            s = pick_next;
        }
    }

    // Constant part of the cost: vertical borders against dummy rows and "$"
    // columns plus the seq-row's horizontal borders.
    const long long const_part =
        static_cast<long long>(p + q) * (k + 1) + 2 * L +
        (k >= 2 ? static_cast<long long>(p + q) * (2 * k + 1) : 0);

    IpqResult out;
    out.deposition01 = depo;
    out.cost_excl = const_part + best[0];

    // The single "$" mask, measured on the actual geometry.
    Mask dollar;
    dollar.token = "$";
    for (const Probe& probe : built.instance.probes) {
        if (probe.seq == std::vector<Token>{"$"}) {
            dollar.cells.push_back(built.placement.cell_of[probe.id]);
        }
    }
    out.dollar_mask_cost = mask_border(dollar, built.instance.grid);
    out.cost_incl = out.cost_excl + out.dollar_mask_cost;

    // Full witness schedule.
    const int side = 2 * k + 1;
    const int row_all0 = k >= 2 ? 1 : 0;
    const int width = 1 + static_cast<int>(steps.size());
    Solution witness;
    witness.placement = built.placement;
    witness.schedule.deposition.emplace_back("$");
    for (const IpqStep& st : steps) {
        witness.schedule.deposition.emplace_back(1, st.a);
    }
    witness.schedule.embed.assign(built.instance.n(),
                                  std::vector<std::uint8_t>(width, 0));
    for (const Probe& probe : built.instance.probes) {
        auto [r, c] = built.placement.cell_of[probe.id];
        auto& row = witness.schedule.embed[probe.id];
        if (probe.seq == std::vector<Token>{"$"}) {
            row[0] = 1;
        } else if (r == row_all0) {
            for (std::size_t t = 0; t < steps.size(); ++t) {
                if (steps[t].a == '0' && steps[t].row_dep) row[1 + t] = 1;
            }
        } else if (r == row_all0 + 2) {
            for (std::size_t t = 0; t < steps.size(); ++t) {
                if (steps[t].a == '1' && steps[t].row_dep) row[1 + t] = 1;
            }
        } else if (r == row_all0 + 1) {
            const int cell = (c - 1) / 2;
            for (std::size_t t = 0; t < steps.size(); ++t) {
                if ((steps[t].subset >> cell) & 1u) row[1 + t] = 1;
            }
        }
    }
    witness.cost = border_length_pairwise(witness.placement, witness.schedule,
                                          built.instance.grid);
    assert(witness.cost == out.cost_incl);
    out.witness = std::move(witness);
    return out;
}

// ---------------------------------------------------------------------------
// SCS extraction and the direct oracle.

ScsResult extract_scs(const ScsInput& scs) {
    const int k = scs.k();
    const long long L = scs.total_len();
    const long long cap = L;  // an SCS never needs more than L of either bit
    for (long long sum = 0; sum <= 2 * cap; ++sum) {
        ScsResult found;
        bool any = false;
        for (long long p = std::max<long long>(0, sum - cap);
             p <= std::min(sum, cap); ++p) {
            const long long q = sum - p;
            IpqResult r = solve_ipq_exact(scs, static_cast<int>(p),
                                          static_cast<int>(q));
            // Sharing-perfect cost: every step carries a whole row.
            const long long target =
                static_cast<long long>(p + q) * (k + 1) + 2 * L +
                (k >= 2 ? static_cast<long long>(p + q) * (2 * k + 1) : 0) +
                static_cast<long long>(k) * (p + q);
            if (r.cost_excl != target) continue;
            if (!any || r.deposition01 < found.witness) {
                found = {static_cast<int>(sum), r.deposition01};
                any = true;
            }
        }
        if (any) return found;
    }
    throw std::logic_error("no supersequence found");  // unreachable
}

ScsResult scs_exact_dp(const std::vector<std::string>& strings) {
    const int k = static_cast<int>(strings.size());
    if (k == 0) return {0, ""};
    std::vector<int> len(k);
    std::vector<long long> stride(k);
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        len[i] = static_cast<int>(strings[i].size());
        stride[i] = total;
        total *= len[i] + 1;
    }
    std::string chars;
    for (const auto& s : strings) chars += s;
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());

    std::vector<int> rem(total, -1);
    rem[total - 1] = 0;
    // Descending total progress sweep.
    std::vector<std::vector<long long>> by_sum;
    {
        int max_sum = 0;
        for (int l : len) max_sum += l;
        by_sum.assign(max_sum + 1, {});
        std::vector<int> prog(k);
        for (long long s = 0; s < total; ++s) {
            long long x = s;
            int sum = 0;
            for (int i = k - 1; i >= 0; --i) {
                prog[i] = static_cast<int>(x / stride[i]);
                x %= stride[i];
                sum += prog[i];
            }
            by_sum[sum].push_back(s);
        }
        auto advance = [&](long long s, const std::vector<int>& prog, char c) {
            long long nxt = s;
            for (int i = 0; i < k; ++i) {
                if (prog[i] < len[i] && strings[i][prog[i]] == c) nxt += stride[i];
            }
            return nxt;
        };
        for (int sum = max_sum - 1; sum >= 0; --sum) {
            for (long long s : by_sum[sum]) {
                long long x = s;
                for (int i = k - 1; i >= 0; --i) {
                    prog[i] = static_cast<int>(x / stride[i]);
                    x %= stride[i];
                }
                int b = INT32_MAX;
                for (char c : chars) {
                    long long nxt = advance(s, prog, c);
                    if (nxt != s) b = std::min(b, 1 + rem[nxt]);
                }
                rem[s] = b;
            }
        }
        // Lexicographically least witness.
        ScsResult out;
        out.length = rem[0];
        long long s = 0;
        while (s != total - 1) {
            long long x = s;
            for (int i = k - 1; i >= 0; --i) {
                prog[i] = static_cast<int>(x / stride[i]);
                x %= stride[i];
            }
            for (char c : chars) {
                long long nxt = advance(s, prog, c);
                if (nxt != s && 1 + rem[nxt] == rem[s]) {
                    out.witness += c;
                    s = nxt;
                    break;
                }
            }
        }
        return out;
    }
}

// ---------------------------------------------------------------------------
// Hamiltonian path gadget.

namespace {

std::vector<std::pair<int, int>> sorted_edges(const GraphInput& g) {
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    return edges;
}

Token edge_token(int i, int j) {
    return "e_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

Instance build_hampath_instance(const GraphInput& g) {
    const int n = g.n;
    auto edges = sorted_edges(g);

    Instance inst;
    inst.grid = {1, n + 2};
    for (auto [i, j] : edges) inst.alphabet.push_back(edge_token(i, j));
    inst.alphabet.emplace_back("$");
    inst.alphabet.emplace_back("#");

    for (int v = 1; v <= n; ++v) {
        Probe probe;
        probe.id = v - 1;
        for (auto [i, j] : edges) {
            if (i == v || j == v) probe.seq.push_back(edge_token(i, j));
        }
        inst.probes.push_back(std::move(probe));
    }
    Probe dollar;
    dollar.id = n;
    dollar.seq.assign(n + 1, "$");
    inst.probes.push_back(std::move(dollar));
    Probe hash;
    hash.id = n + 1;
    hash.seq.assign(n + 1, "#");
    inst.probes.push_back(std::move(hash));
    return inst;
}

HampathCertificate check_hampath_certificate(const GraphInput& g,
                                             const std::vector<int>& vertex_order) {
    const int n = g.n;
    const long long m = static_cast<long long>(g.edges.size());
    {
        std::vector<bool> seen(n + 1, false);
        if (static_cast<int>(vertex_order.size()) != n) {
            throw std::invalid_argument("order must list every vertex once");
        }
        for (int v : vertex_order) {
            if (v < 1 || v > n || seen[v]) {
                throw std::invalid_argument("order must list every vertex once");
            }
            seen[v] = true;
        }
    }
    auto edges = sorted_edges(g);
    auto adjacent = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    };
    long long shared = 0;
    for (int t = 0; t + 1 < n; ++t) {
        if (adjacent(vertex_order[t], vertex_order[t + 1])) ++shared;
    }

    HampathCertificate out;
    out.cost = 2LL * (n + 1) + 4 * m - 2 * shared;
    out.bound = 2LL * (n + 1) + 4 * m - 2 * (n - 1);
    out.achieves_bound = out.cost == out.bound;

    // Witness: dummies at the ends, one block per dummy token, then each edge
    // token once — both endpoints deposit together wherever they share it.
    Instance inst = build_hampath_instance(g);
    Solution w;
    w.placement.cell_of.resize(n + 2);
    w.placement.cell_of[n] = {0, 0};
    for (int t = 0; t < n; ++t) w.placement.cell_of[vertex_order[t] - 1] = {0, t + 1};
    w.placement.cell_of[n + 1] = {0, n + 1};

    const int width = 2 * (n + 1) + static_cast<int>(edges.size());
    for (int t = 0; t <= n; ++t) w.schedule.deposition.emplace_back("$");
    for (int t = 0; t <= n; ++t) w.schedule.deposition.emplace_back("#");
    for (auto [i, j] : edges) w.schedule.deposition.push_back(edge_token(i, j));
    w.schedule.embed.assign(n + 2, std::vector<std::uint8_t>(width, 0));
    for (int t = 0; t <= n; ++t) {
        w.schedule.embed[n][t] = 1;
        w.schedule.embed[n + 1][n + 1 + t] = 1;
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        w.schedule.embed[edges[e].first - 1][2 * (n + 1) + e] = 1;
        w.schedule.embed[edges[e].second - 1][2 * (n + 1) + e] = 1;
    }
    w.cost = border_length_pairwise(w.placement, w.schedule, inst.grid);
    assert(w.cost == out.cost);
    out.witness = std::move(w);
    return out;
}

// ---------------------------------------------------------------------------
// Exact 1D solver.

ExactResult solve_1d_exact(const Instance& instance, const ExactBudget& budget,
                           bool pin_dummies) {
    if (instance.grid.rows != 1) throw std::invalid_argument("grid must be 1xN");
    const int n = instance.n();
    if (n != instance.grid.cols) {
        throw std::invalid_argument("probe count must equal grid cell count");
    }

    auto uniform = [&](int i, const Token& t) {
        const auto& s = instance.probes[i].seq;
        return !s.empty() &&
               std::all_of(s.begin(), s.end(), [&](const Token& x) { return x == t; });
    };
    int pin_left = -1, pin_right = -1;
    for (int i = 0; i < n; ++i) {
        if (pin_left < 0 && uniform(i, "$")) pin_left = i;
        else if (pin_right < 0 && uniform(i, "#")) pin_right = i;
    }
    const bool pinned = pin_dummies && pin_left >= 0 && pin_right >= 0;

    std::vector<std::vector<int>> orders;
    if (pinned) {
        std::vector<int> free;
        for (int i = 0; i < n; ++i) {
            if (i != pin_left && i != pin_right) free.push_back(i);
        }
        std::sort(free.begin(), free.end());
        do {
            std::vector<int> order;
            order.push_back(pin_left);
            order.insert(order.end(), free.begin(), free.end());
            order.push_back(pin_right);
            orders.push_back(std::move(order));
        } while (std::next_permutation(free.begin(), free.end()));
    } else {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        do {
            std::vector<int> rev(all.rbegin(), all.rend());
            if (rev < all) continue;  // mirror image, same cost
            orders.push_back(all);
        } while (std::next_permutation(all.begin(), all.end()));
    }

    MetricSpace metric = build_metric(instance);
    std::vector<std::pair<long long, std::size_t>> ranked;
    for (std::size_t idx = 0; idx < orders.size(); ++idx) {
        long long lb = 0;
        for (int t = 0; t + 1 < n; ++t) lb += metric(orders[idx][t], orders[idx][t + 1]);
        ranked.emplace_back(lb, idx);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](const auto& a, const auto& b) {
                         if (a.first != b.first) return a.first < b.first;
                         return orders[a.second] < orders[b.second];
                     });

    ExactResult best{ExactStatus::kBudgetExceeded, {}};
    bool have = false;
    for (const auto& [lb, idx] : ranked) {
        if (have && lb >= best.solution.cost) break;
        Placement placement;
        placement.cell_of.resize(n);
        for (int t = 0; t < n; ++t) placement.cell_of[orders[idx][t]] = {0, t};
        long long cutoff = have ? best.solution.cost : -1;
        ExactResult r = pbmp_exact_bounded(instance, placement, cutoff, budget);
        if (r.status == ExactStatus::kBudgetExceeded) return r;
        if (r.status == ExactStatus::kOptimal) {
            best = std::move(r);
            have = true;
        }
    }
    if (!have) return {ExactStatus::kBudgetExceeded, {}};
    best.status = ExactStatus::kOptimal;
    return best;
}

// ---------------------------------------------------------------------------
// 1D -> 2D lift.

Instance lift_1d_to_2d(const Instance& instance_1d) {
    if (instance_1d.grid.rows != 1) throw std::invalid_argument("grid must be 1xN");
    const int n = instance_1d.n();
    long long ell = 0;
    for (const Probe& p : instance_1d.probes) ell = std::max<long long>(ell, p.len());
    const long long k = 4LL * n * n * ell + 1;

    Instance out;
    out.grid = {n, n};
    out.alphabet = instance_1d.alphabet;
    for (int i = 0; i < n; ++i) {
        Token pad = "x" + std::to_string(i + 1);
        while (std::find(out.alphabet.begin(), out.alphabet.end(), pad) !=
               out.alphabet.end()) {
            pad += "x";
        }
        out.alphabet.push_back(pad);
        Probe probe;
        probe.id = i;
        probe.seq.assign(k - instance_1d.probes[i].len(), pad);
        probe.seq.insert(probe.seq.end(), instance_1d.probes[i].seq.begin(),
                         instance_1d.probes[i].seq.end());
        out.probes.push_back(std::move(probe));
    }
    if (std::find(out.alphabet.begin(), out.alphabet.end(), Token("$")) ==
        out.alphabet.end()) {
        out.alphabet.emplace_back("$");
    }
    for (int i = n; i < n * n; ++i) {
        Probe dummy;
        dummy.id = i;
        dummy.seq = {"$"};
        out.probes.push_back(std::move(dummy));
    }
    return out;
}

}  // namespace bmp
