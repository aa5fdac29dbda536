// bmp: command-line front end for the BMP solver shared library.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmp/bmp_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct InstanceDeleter {
    void operator()(bmp_instance* p) const { bmp_instance_free(p); }
};
struct SolutionDeleter {
    void operator()(bmp_solution* p) const { bmp_solution_free(p); }
};
using InstancePtr = std::unique_ptr<bmp_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<bmp_solution, SolutionDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    bmp_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitInput;
}

InstancePtr load_instance(const std::string& path, int& exit_code) {
    std::string text;
    if (!read_file(path, text)) {
        exit_code = fail_input("cannot read " + path);
        return nullptr;
    }
    bmp_instance* raw = nullptr;
    if (bmp_instance_parse(text.c_str(), &raw) != BMP_OK) {
        exit_code = fail_input(path + ": " + bmp_last_error());
        return nullptr;
    }
    exit_code = kExitOk;
    return InstancePtr(raw);
}

SolutionPtr load_solution(const std::string& path, int& exit_code) {
    std::string text;
    if (!read_file(path, text)) {
        exit_code = fail_input("cannot read " + path);
        return nullptr;
    }
    bmp_solution* raw = nullptr;
    if (bmp_solution_parse(text.c_str(), &raw) != BMP_OK) {
        exit_code = fail_input(path + ": " + bmp_last_error());
        return nullptr;
    }
    exit_code = kExitOk;
    return SolutionPtr(raw);
}

int cmd_solve(const std::string& instance_path, const std::string& algo,
              std::uint64_t seed, int trials, std::uint64_t max_states,
              const std::string& out_path, const std::string& report_path) {
    int code;
    InstancePtr instance = load_instance(instance_path, code);
    if (!instance) return code;

    bmp_solution* raw = nullptr;
    std::string report;
    if (algo == "exact") {
        int rc = bmp_solve_exact(instance.get(), max_states, &raw);
        if (rc == BMP_ERR_BUDGET) {
            std::cerr << "error: " << bmp_last_error() << "\n";
            return kExitBudget;
        }
        if (rc != BMP_OK) return fail_input(bmp_last_error());
        report = "algo exact\ncost " + std::to_string(bmp_solution_cost(raw)) + "\n";
    } else if (algo == "pipeline") {
        char* report_raw = nullptr;
        int rc = bmp_solve(instance.get(), seed, trials, &raw, &report_raw);
        if (rc != BMP_OK) return fail_input(bmp_last_error());
        report = take_string(report_raw);
    } else {
        return fail_input("unknown algorithm: " + algo);
    }
    SolutionPtr solution(raw);

    char* emitted = nullptr;
    bmp_solution_emit(solution.get(), &emitted);
    if (!write_output(out_path, take_string(emitted))) {
        return fail_input("cannot write " + out_path);
    }
    if (report_path.empty()) {
        std::cerr << report;
    } else if (!write_output(report_path, report)) {
        return fail_input("cannot write " + report_path);
    }
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
    int code;
    InstancePtr instance = load_instance(instance_path, code);
    if (!instance) return code;
    SolutionPtr solution = load_solution(solution_path, code);
    if (!solution) return code;
    if (bmp_verify(instance.get(), solution.get()) != BMP_OK) {
        std::cerr << "verification failed: " << bmp_last_error() << "\n";
        return kExitVerify;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_hampath_cert(const std::string& graph_path, std::vector<int> order) {
    std::string text;
    if (!read_file(graph_path, text)) return fail_input("cannot read " + graph_path);
    long long cost = 0, bound = 0;
    int achieves = 0;
    if (bmp_hampath_cert(text.c_str(), order.data(),
                         static_cast<int>(order.size()), &cost, &bound,
                         &achieves) != BMP_OK) {
        return fail_input(bmp_last_error());
    }
    std::cout << "cost " << cost << "\nbound " << bound << "\nachieves "
              << achieves << "\n";
    return kExitOk;
}

int cmd_render(const std::string& instance_path, const std::string& solution_path,
               bool svg, const std::string& out_path) {
    int code;
    InstancePtr instance = load_instance(instance_path, code);
    if (!instance) return code;
    SolutionPtr solution = load_solution(solution_path, code);
    if (!solution) return code;
    char* raw = nullptr;
    int rc = svg ? bmp_render_svg(instance.get(), solution.get(), &raw)
                 : bmp_render_text(instance.get(), solution.get(), &raw);
    if (rc != BMP_OK) return fail_input(bmp_last_error());
    if (!write_output(out_path, take_string(raw))) {
        return fail_input("cannot write " + out_path);
    }
    return kExitOk;
}

int cmd_metric(const std::string& instance_path) {
    int code;
    InstancePtr instance = load_instance(instance_path, code);
    if (!instance) return code;
    char* raw = nullptr;
    if (bmp_metric_text(instance.get(), &raw) != BMP_OK) {
        return fail_input(bmp_last_error());
    }
    std::cout << take_string(raw);
    return kExitOk;
}

int emit_instance_to(bmp_instance* instance, const std::string& out_path) {
    char* emitted = nullptr;
    bmp_instance_emit(instance, &emitted);
    if (!write_output(out_path, take_string(emitted))) {
        return fail_input("cannot write " + out_path);
    }
    return kExitOk;
}

int cmd_bench(std::uint64_t seed) {
    std::printf("%-10s %6s %6s %6s %8s\n", "instance", "n", "cost", "lb", "ratio");
    for (int n : {4, 9, 16}) {
        bmp_instance* instance = nullptr;
        if (bmp_gen_random(n, 4, 2, seed, &instance) != BMP_OK) {
            return fail_input(bmp_last_error());
        }
        bmp_solution* solution = nullptr;
        if (bmp_solve(instance, seed, 16, &solution, nullptr) != BMP_OK) {
            bmp_instance_free(instance);
            return fail_input(bmp_last_error());
        }
        long long lb = 0;
        bmp_lower_bound(instance, &lb);
        long long cost = bmp_solution_cost(solution);
        double ratio = lb > 0 ? static_cast<double>(cost) / lb : 1.0;
        std::printf("random-%-3d %6d %6lld %6lld %8.3f\n", n, n, cost, lb, ratio);
        bmp_solution_free(solution);
        bmp_instance_free(instance);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Border minimization solver for asynchronous microarray synthesis"};
    app.require_subcommand(1);

    // solve
    std::string solve_instance, solve_algo = "pipeline", solve_out, solve_report;
    std::uint64_t solve_seed = 0, solve_states = 0;
    int solve_trials = 16;
    bool solve_exact_flag = false;
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    solve->add_option("instance", solve_instance, "instance file")->required();
    solve->add_option("--algo", solve_algo, "pipeline|exact");
    solve->add_flag("--exact", solve_exact_flag, "same as --algo exact");
    solve->add_option("--seed", solve_seed, "random seed");
    solve->add_option("--trials", solve_trials, "independent pipeline trials");
    solve->add_option("--max-states", solve_states, "exact search state budget");
    solve->add_option("--out", solve_out, "solution output file (default stdout)");
    solve->add_option("--report", solve_report, "report output file (default stderr)");

    // verify, with the hampath-cert sub-mode
    std::string verify_instance, verify_solution, cert_graph;
    std::vector<int> cert_order;
    auto* verify = app.add_subcommand("verify", "Verify a solution file");
    verify->add_option("instance", verify_instance, "instance file");
    verify->add_option("solution", verify_solution, "solution file");
    auto* cert = verify->add_subcommand(
        "hampath-cert", "Check a vertex order against the Hamiltonian bound");
    cert->add_option("--graph", cert_graph, "edge-list graph file")->required();
    cert->add_option("--order", cert_order, "vertex order, 1-based")->required();

    // render
    std::string render_instance, render_solution, render_out;
    bool render_svg_flag = false;
    auto* render = app.add_subcommand("render", "Render mask frames");
    render->add_option("instance", render_instance, "instance file")->required();
    render->add_option("solution", render_solution, "solution file")->required();
    render->add_flag("--svg", render_svg_flag, "emit SVG instead of text");
    render->add_option("--out", render_out, "output file (default stdout)");

    // metric
    std::string metric_instance;
    auto* metric = app.add_subcommand("metric", "Dump the LCS distance matrix");
    metric->add_option("instance", metric_instance, "instance file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    std::string gen_out;

    int rand_n = 9, rand_len = 3, rand_alphabet = 4;
    std::uint64_t rand_seed = 0;
    auto* gen_random = gen->add_subcommand("random", "Uniform random instance");
    gen_random->add_option("--n", rand_n, "probe count");
    gen_random->add_option("--len", rand_len, "probe length");
    gen_random->add_option("--alphabet", rand_alphabet, "alphabet size");
    gen_random->add_option("--seed", rand_seed, "random seed");
    gen_random->add_option("--out", gen_out, "output file (default stdout)");

    std::string ipq_strings;
    int ipq_p = 1, ipq_q = 1;
    auto* gen_ipq = gen->add_subcommand("scs-ipq", "Structured I(p,q) instance");
    gen_ipq->add_option("--strings", ipq_strings, "comma-separated binary strings")
        ->required();
    gen_ipq->add_option("--p", ipq_p, "zeros in the all-0-row");
    gen_ipq->add_option("--q", ipq_q, "ones in the all-1-row");
    gen_ipq->add_option("--out", gen_out, "output file (default stdout)");

    std::string ham_graph;
    auto* gen_ham = gen->add_subcommand("hampath", "Hamiltonian path gadget");
    gen_ham->add_option("--graph", ham_graph, "edge-list graph file")->required();
    gen_ham->add_option("--out", gen_out, "output file (default stdout)");

    std::string lift_instance;
    auto* gen_lift = gen->add_subcommand("lift2d", "Lift a 1D instance to 2D");
    gen_lift->add_option("--instance", lift_instance, "1xN instance file")->required();
    gen_lift->add_option("--out", gen_out, "output file (default stdout)");

    // scs
    auto* scs = app.add_subcommand("scs", "Shortest common supersequence tools");
    scs->require_subcommand(1);
    std::string scs_strings;
    auto* scs_extract = scs->add_subcommand(
        "extract", "SCS via the structured instance family");
    scs_extract->add_option("--strings", scs_strings, "comma-separated binary strings")
        ->required();
    auto* scs_dp = scs->add_subcommand("dp", "Direct SCS dynamic program");
    scs_dp->add_option("--strings", scs_strings, "comma-separated strings")
        ->required();

    // bench
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "Deterministic benchmark table");
    bench->add_option("--seed", bench_seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    if (*solve) {
        if (solve_exact_flag) solve_algo = "exact";
        return cmd_solve(solve_instance, solve_algo, solve_seed, solve_trials,
                         solve_states, solve_out, solve_report);
    }
    if (*verify) {
        if (*cert) return cmd_hampath_cert(cert_graph, cert_order);
        if (verify_instance.empty() || verify_solution.empty()) {
            return fail_input("verify needs an instance and a solution file");
        }
        return cmd_verify(verify_instance, verify_solution);
    }
    if (*render) {
        return cmd_render(render_instance, render_solution, render_svg_flag,
                          render_out);
    }
    if (*metric) return cmd_metric(metric_instance);
    if (*gen) {
        bmp_instance* instance = nullptr;
        if (*gen_random) {
            if (bmp_gen_random(rand_n, rand_len, rand_alphabet, rand_seed,
                               &instance) != BMP_OK) {
                return fail_input(bmp_last_error());
            }
        } else if (*gen_ipq) {
            if (bmp_gen_scs_ipq(ipq_strings.c_str(), ipq_p, ipq_q, &instance,
                                nullptr) != BMP_OK) {
                return fail_input(bmp_last_error());
            }
        } else if (*gen_ham) {
            std::string text;
            if (!read_file(ham_graph, text)) {
                return fail_input("cannot read " + ham_graph);
            }
            if (bmp_gen_hampath(text.c_str(), &instance) != BMP_OK) {
                return fail_input(bmp_last_error());
            }
        } else if (*gen_lift) {
            int code;
            InstancePtr base = load_instance(lift_instance, code);
            if (!base) return code;
            if (bmp_gen_lift2d(base.get(), &instance) != BMP_OK) {
                return fail_input(bmp_last_error());
            }
        }
        int rc = emit_instance_to(instance, gen_out);
        bmp_instance_free(instance);
        return rc;
    }
    if (*scs) {
        int length = 0;
        char* witness = nullptr;
        int rc = *scs_extract
                     ? bmp_scs_extract(scs_strings.c_str(), &length, &witness)
                     : bmp_scs_dp(scs_strings.c_str(), &length, &witness);
        if (rc != BMP_OK) return fail_input(bmp_last_error());
        std::cout << "length " << length << "\nwitness " << take_string(witness)
                  << "\n";
        return kExitOk;
    }
    if (*bench) return cmd_bench(bench_seed);
    return kExitInput;
}
