#include <cstring>
#include <string>

#include "bmp/bmp_c.h"
#include "bmp/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bmp;
using namespace bmp::testutil;

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { bmp_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct InstanceOut {
    bmp_instance* h = nullptr;
    ~InstanceOut() { bmp_instance_free(h); }
};

struct SolutionOut {
    bmp_solution* h = nullptr;
    ~SolutionOut() { bmp_solution_free(h); }
};

}  // namespace

TEST_CASE("instances round-trip through the C boundary") {
    std::string text = emit_instance(reference_instance());
    InstanceOut inst;
    REQUIRE(bmp_instance_parse(text.c_str(), &inst.h) == BMP_OK);
    CHECK(bmp_instance_probes(inst.h) == 4);
    StringOut emitted;
    REQUIRE(bmp_instance_emit(inst.h, &emitted.s) == BMP_OK);
    CHECK(emitted.str() == text);
}

TEST_CASE("parse failures set an error message and return BMP_ERR_PARSE") {
    InstanceOut inst;
    CHECK(bmp_instance_parse("not an instance", &inst.h) == BMP_ERR_PARSE);
    CHECK(inst.h == nullptr);
    std::string err = bmp_last_error();
    CHECK(err.find("line") != std::string::npos);
}

TEST_CASE("solving through the C interface is deterministic and verifiable") {
    std::string text = emit_instance(reference_instance());
    InstanceOut inst;
    REQUIRE(bmp_instance_parse(text.c_str(), &inst.h) == BMP_OK);

    SolutionOut a, b;
    StringOut report;
    REQUIRE(bmp_solve(inst.h, 7, 8, &a.h, &report.s) == BMP_OK);
    REQUIRE(bmp_solve(inst.h, 7, 8, &b.h, nullptr) == BMP_OK);
    CHECK(bmp_solution_cost(a.h) == bmp_solution_cost(b.h));

    StringOut ea, eb;
    REQUIRE(bmp_solution_emit(a.h, &ea.s) == BMP_OK);
    REQUIRE(bmp_solution_emit(b.h, &eb.s) == BMP_OK);
    CHECK(ea.str() == eb.str());
    CHECK(report.str().find("cost") != std::string::npos);
    CHECK(bmp_verify(inst.h, a.h) == BMP_OK);

    long long lb = -1;
    REQUIRE(bmp_lower_bound(inst.h, &lb) == BMP_OK);
    CHECK(lb <= bmp_solution_cost(a.h));
}

TEST_CASE("verification failures carry the violation message") {
    std::string text = emit_instance(reference_instance());
    InstanceOut inst;
    REQUIRE(bmp_instance_parse(text.c_str(), &inst.h) == BMP_OK);
    Solution bad = reference_solution();
    bad.cost += 1;
    SolutionOut sol;
    REQUIRE(bmp_solution_parse(emit_solution(bad).c_str(), &sol.h) == BMP_OK);
    CHECK(bmp_verify(inst.h, sol.h) == BMP_ERR_VERIFY);
    CHECK(std::string(bmp_last_error()).find("cost mismatch") != std::string::npos);
}

TEST_CASE("exact solver and renderers work through the C interface") {
    std::string text = emit_instance(reference_instance());
    InstanceOut inst;
    REQUIRE(bmp_instance_parse(text.c_str(), &inst.h) == BMP_OK);
    SolutionOut sol;
    REQUIRE(bmp_solve_exact(inst.h, 0, &sol.h) == BMP_OK);
    CHECK(bmp_solution_cost(sol.h) == 8);

    StringOut txt, svg, metric;
    REQUIRE(bmp_render_text(inst.h, sol.h, &txt.s) == BMP_OK);
    CHECK(txt.str().find("total 8") != std::string::npos);
    REQUIRE(bmp_render_svg(inst.h, sol.h, &svg.s) == BMP_OK);
    CHECK(svg.str().find("<svg") != std::string::npos);
    REQUIRE(bmp_metric_text(inst.h, &metric.s) == BMP_OK);
    CHECK(metric.str().find('0') != std::string::npos);
}

TEST_CASE("generators produce parseable instances") {
    InstanceOut rnd;
    REQUIRE(bmp_gen_random(9, 3, 2, 42, &rnd.h) == BMP_OK);
    CHECK(bmp_instance_probes(rnd.h) == 9);
    CHECK(bmp_gen_random(0, 3, 2, 42, &rnd.h) == BMP_ERR_INVALID);

    InstanceOut ipq;
    SolutionOut witness;
    REQUIRE(bmp_gen_scs_ipq("010,100,00", 3, 3, &ipq.h, &witness.h) == BMP_OK);
    CHECK(bmp_instance_probes(ipq.h) == 49);
    CHECK(bmp_verify(ipq.h, witness.h) == BMP_OK);

    long long excl = 0, incl = 0;
    StringOut depo;
    REQUIRE(bmp_ipq_solve("010,100,00", 3, 3, &excl, &incl, &depo.s) == BMP_OK);
    CHECK(excl == 100);
    CHECK(incl == 128);
    CHECK(depo.str() == "010011");
}

TEST_CASE("SCS helpers agree through the C interface") {
    int len_extract = 0, len_dp = 0;
    StringOut w1, w2;
    REQUIRE(bmp_scs_extract("010,100,00", &len_extract, &w1.s) == BMP_OK);
    REQUIRE(bmp_scs_dp("010,100,00", &len_dp, &w2.s) == BMP_OK);
    CHECK(len_extract == 4);
    CHECK(len_dp == 4);
    CHECK(w1.str() == "0100");
    CHECK(w2.str() == "0100");
    CHECK(bmp_scs_dp("01,0a", &len_dp, &w2.s) == BMP_ERR_INVALID);
}

TEST_CASE("gadget generator and certificate work end to end") {
    const char* graph = "5 6\n1 2\n2 3\n2 4\n3 4\n1 5\n4 5\n";
    InstanceOut gadget;
    REQUIRE(bmp_gen_hampath(graph, &gadget.h) == BMP_OK);
    CHECK(bmp_instance_probes(gadget.h) == 7);

    SolutionOut sol;
    REQUIRE(bmp_solve_1d_exact(gadget.h, 0, 1, &sol.h) == BMP_OK);
    CHECK(bmp_solution_cost(sol.h) == 28);

    int order[] = {1, 2, 3, 4, 5};
    long long cost = 0, bound = 0;
    int achieves = -1;
    REQUIRE(bmp_hampath_cert(graph, order, 5, &cost, &bound, &achieves) == BMP_OK);
    CHECK(cost == 28);
    CHECK(bound == 28);
    CHECK(achieves == 1);

    int detour[] = {1, 2, 3, 5, 4};
    REQUIRE(bmp_hampath_cert(graph, detour, 5, &cost, &bound, &achieves) == BMP_OK);
    CHECK(cost == 30);
    CHECK(achieves == 0);

    InstanceOut lifted;
    InstanceOut tiny;
    REQUIRE(bmp_instance_parse(
                "grid 1 2\nalphabet A B\nprobe 0 A\nprobe 1 A B\n",
                &tiny.h) == BMP_OK);
    REQUIRE(bmp_gen_lift2d(tiny.h, &lifted.h) == BMP_OK);
    CHECK(bmp_instance_probes(lifted.h) == 4);
}
