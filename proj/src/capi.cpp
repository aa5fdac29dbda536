#include "bmp/bmp_c.h"

#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "bmp/embed.hpp"
#include "bmp/io.hpp"
#include "bmp/lcs_metric.hpp"
#include "bmp/model.hpp"
#include "bmp/oracle.hpp"
#include "bmp/pipeline.hpp"
#include "bmp/reductions.hpp"
#include "bmp/render.hpp"
#include "bmp/rng.hpp"

using namespace bmp;

struct bmp_instance {
    Instance value;
};
struct bmp_solution {
    Solution value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs fn, translating exceptions to BMP_ERR_INVALID.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return fail(BMP_ERR_INVALID, e.what());
    }
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    std::string cur;
    for (const char* p = csv; *p; ++p) {
        if (*p == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += *p;
        }
    }
    out.push_back(cur);
    return out;
}

int exact_status_code(ExactStatus status) {
    return status == ExactStatus::kOptimal ? BMP_OK : BMP_ERR_BUDGET;
}

}  // namespace

extern "C" {

const char* bmp_last_error(void) { return g_last_error.c_str(); }

void bmp_string_free(char* s) { delete[] s; }

int bmp_instance_parse(const char* text, bmp_instance** out) {
    auto r = parse_instance(text ? text : "");
    if (!r.ok()) return fail(BMP_ERR_PARSE, r.error);
    *out = new bmp_instance{std::move(*r.value)};
    return BMP_OK;
}

int bmp_instance_emit(const bmp_instance* instance, char** out) {
    *out = dup_string(emit_instance(instance->value));
    return BMP_OK;
}

void bmp_instance_free(bmp_instance* instance) { delete instance; }

int bmp_instance_probes(const bmp_instance* instance) {
    return instance->value.n();
}

int bmp_solution_parse(const char* text, bmp_solution** out) {
    auto r = parse_solution(text ? text : "");
    if (!r.ok()) return fail(BMP_ERR_PARSE, r.error);
    *out = new bmp_solution{std::move(*r.value)};
    return BMP_OK;
}

int bmp_solution_emit(const bmp_solution* solution, char** out) {
    *out = dup_string(emit_solution(solution->value));
    return BMP_OK;
}

void bmp_solution_free(bmp_solution* solution) { delete solution; }

long long bmp_solution_cost(const bmp_solution* solution) {
    return solution->value.cost;
}

int bmp_solve(const bmp_instance* instance, uint64_t seed, int trials,
              bmp_solution** out, char** report_out) {
    return guarded([&] {
        SolveOptions options;
        options.seed = seed;
        options.trials = trials;
        SolveOutcome outcome = solve_bmp(instance->value, options);
        if (report_out) {
            *report_out = dup_string(
                ratio_report(instance->value, outcome.solution, &outcome.stats));
        }
        *out = new bmp_solution{std::move(outcome.solution)};
        return BMP_OK;
    });
}

int bmp_solve_exact(const bmp_instance* instance, uint64_t max_states,
                    bmp_solution** out) {
    return guarded([&] {
        ExactBudget budget;
        if (max_states) budget.max_states = max_states;
        ExactResult r = bmp_exact(instance->value, budget);
        if (r.status != ExactStatus::kOptimal) {
            return fail(BMP_ERR_BUDGET, "state budget exceeded");
        }
        *out = new bmp_solution{std::move(r.solution)};
        return BMP_OK;
    });
}

int bmp_solve_1d_exact(const bmp_instance* instance, uint64_t max_states,
                       int pin, bmp_solution** out) {
    return guarded([&] {
        ExactBudget budget;
        if (max_states) budget.max_states = max_states;
        ExactResult r = solve_1d_exact(instance->value, budget, pin != 0);
        if (r.status != ExactStatus::kOptimal) {
            return fail(BMP_ERR_BUDGET, "state budget exceeded");
        }
        *out = new bmp_solution{std::move(r.solution)};
        return BMP_OK;
    });
}

int bmp_verify(const bmp_instance* instance, const bmp_solution* solution) {
    return guarded([&] {
        ValidationReport report = validate_solution(instance->value, solution->value);
        if (!report.ok) return fail(BMP_ERR_VERIFY, report.message);
        return BMP_OK;
    });
}

int bmp_lower_bound(const bmp_instance* instance, long long* out) {
    return guarded([&] {
        *out = lower_bound(instance->value);
        return BMP_OK;
    });
}

int bmp_metric_text(const bmp_instance* instance, char** out) {
    return guarded([&] {
        MetricSpace metric = build_metric(instance->value);
        std::ostringstream os;
        for (int i = 0; i < metric.n; ++i) {
            for (int j = 0; j < metric.n; ++j) {
                os << (j ? " " : "") << metric(i, j);
            }
            os << "\n";
        }
        *out = dup_string(os.str());
        return BMP_OK;
    });
}

int bmp_render_text(const bmp_instance* instance, const bmp_solution* solution,
                    char** out) {
    return guarded([&] {
        *out = dup_string(render_text(instance->value, solution->value));
        return BMP_OK;
    });
}

int bmp_render_svg(const bmp_instance* instance, const bmp_solution* solution,
                   char** out) {
    return guarded([&] {
        *out = dup_string(render_svg(instance->value, solution->value));
        return BMP_OK;
    });
}

int bmp_gen_random(int n, int len, int alphabet, uint64_t seed,
                   bmp_instance** out) {
    return guarded([&] {
        if (n < 1 || len < 0 || alphabet < 1 || alphabet > 26) {
            return fail(BMP_ERR_INVALID, "invalid generator parameters");
        }
        Instance inst;
        int side = 1;
        while (side * side < n) ++side;
        inst.grid = side * side == n ? Grid{side, side} : Grid{1, n};
        for (int a = 0; a < alphabet; ++a) {
            inst.alphabet.emplace_back(1, static_cast<char>('A' + a));
        }
        auto rng = make_rng(seed);
        for (int i = 0; i < n; ++i) {
            Probe probe;
            probe.id = i;
            for (int t = 0; t < len; ++t) {
                probe.seq.push_back(inst.alphabet[rng() % alphabet]);
            }
            inst.probes.push_back(std::move(probe));
        }
        *out = new bmp_instance{std::move(inst)};
        return BMP_OK;
    });
}

int bmp_gen_scs_ipq(const char* strings_csv, int p, int q, bmp_instance** out,
                    bmp_solution** witness_out) {
    return guarded([&] {
        ScsInput scs = make_scs_input(split_csv(strings_csv));
        IpqInstance built = build_ipq(scs, p, q);
        if (witness_out) {
            IpqResult r = solve_ipq_exact(scs, p, q);
            *witness_out = new bmp_solution{std::move(r.witness)};
        }
        *out = new bmp_instance{std::move(built.instance)};
        return BMP_OK;
    });
}

int bmp_ipq_solve(const char* strings_csv, int p, int q, long long* cost_excl,
                  long long* cost_incl, char** deposition_out) {
    return guarded([&] {
        ScsInput scs = make_scs_input(split_csv(strings_csv));
        IpqResult r = solve_ipq_exact(scs, p, q);
        if (cost_excl) *cost_excl = r.cost_excl;
        if (cost_incl) *cost_incl = r.cost_incl;
        if (deposition_out) *deposition_out = dup_string(r.deposition01);
        return BMP_OK;
    });
}

int bmp_scs_extract(const char* strings_csv, int* length_out, char** witness_out) {
    return guarded([&] {
        ScsResult r = extract_scs(make_scs_input(split_csv(strings_csv)));
        if (length_out) *length_out = r.length;
        if (witness_out) *witness_out = dup_string(r.witness);
        return BMP_OK;
    });
}

int bmp_scs_dp(const char* strings_csv, int* length_out, char** witness_out) {
    return guarded([&] {
        ScsResult r = scs_exact_dp(make_scs_input(split_csv(strings_csv)).strings);
        if (length_out) *length_out = r.length;
        if (witness_out) *witness_out = dup_string(r.witness);
        return BMP_OK;
    });
}

int bmp_gen_hampath(const char* graph_text, bmp_instance** out) {
    auto g = parse_graph(graph_text ? graph_text : "");
    if (!g.ok()) return fail(BMP_ERR_PARSE, g.error);
    return guarded([&] {
        *out = new bmp_instance{build_hampath_instance(*g.value)};
        return BMP_OK;
    });
}

int bmp_hampath_cert(const char* graph_text, const int* order, int order_len,
                     long long* cost_out, long long* bound_out, int* achieves_out) {
    auto g = parse_graph(graph_text ? graph_text : "");
    if (!g.ok()) return fail(BMP_ERR_PARSE, g.error);
    return guarded([&] {
        std::vector<int> vertex_order(order, order + order_len);
        HampathCertificate cert = check_hampath_certificate(*g.value, vertex_order);
        if (cost_out) *cost_out = cert.cost;
        if (bound_out) *bound_out = cert.bound;
        if (achieves_out) *achieves_out = cert.achieves_bound ? 1 : 0;
        return BMP_OK;
    });
}

int bmp_gen_lift2d(const bmp_instance* instance_1d, bmp_instance** out) {
    return guarded([&] {
        *out = new bmp_instance{lift_1d_to_2d(instance_1d->value)};
        return BMP_OK;
    });
}

}  // extern "C"
