#include <doctest.h>

#include <sstream>

#include "c1ke/bench.hpp"
#include "c1ke/syntax.hpp"

using namespace c1ke;

namespace {

std::vector<BenchProblem> phi5_problems(int lo, int hi) {
    std::vector<BenchProblem> out;
    for (int n = lo; n <= hi; ++n) out.push_back(to_bench_problem(gen_phi5(n)));
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("phi5 records for n = 1..5") {
    BenchConfig cfg;
    auto records = run_bench(phi5_problems(1, 5), cfg);
    REQUIRE(records.size() == 5);
    std::size_t prev_nodes = 0;
    for (const auto& r : records) {
        CHECK(r.verdict == Verdict::Closed);
        CHECK(r.expected_valid == std::optional<bool>(true));
        CHECK(!r.mismatch());
        CHECK(!r.limit_hit);
        CHECK(r.stats.formula_nodes >= prev_nodes);
        prev_nodes = r.stats.formula_nodes;
    }
}

TEST_CASE("medical records match the documented verdicts") {
    std::vector<BenchProblem> problems;
    for (const auto& inst : medical_cases()) problems.push_back(to_bench_problem(inst));
    auto records = run_bench(problems, BenchConfig{});
    REQUIRE(records.size() == 4);
    CHECK(records[0].verdict == Verdict::Closed);
    CHECK(records[1].verdict == Verdict::Closed);
    CHECK(records[2].verdict == Verdict::Open);
    CHECK(records[3].verdict == Verdict::Closed);
    for (const auto& r : records) CHECK(!r.mismatch());
}

TEST_CASE("mismatches are flagged") {
    BenchProblem p;
    p.id = "weakening";
    p.sequent = parse_sequent("A |- A | B");
    p.expected_valid = false;  // wrong on purpose
    auto records = run_bench({p}, BenchConfig{});
    REQUIRE(records.size() == 1);
    CHECK(records[0].verdict == Verdict::Closed);
    CHECK(records[0].mismatch());
}

TEST_CASE("limits become record fields") {
    BenchProblem p = to_bench_problem(gen_phi5(3));
    BenchConfig cfg;
    cfg.strategy.node_limit = 4;
    auto records = run_bench({p}, cfg);
    REQUIRE(records.size() == 1);
    CHECK(!records[0].verdict.has_value());
    CHECK(records[0].limit_hit == LimitKind::Node);
    CHECK(!records[0].mismatch());
}

TEST_CASE("CSV output") {
    SUBCASE("empty set yields the header only") {
        std::string csv = bench_csv({});
        auto lines = split_lines(csv);
        REQUIRE(lines.size() == 1);
        CHECK(lines[0] ==
              "id,family,n,verdict,expected,nodes,branches,pb,rule_applications,elapsed_ms,"
              "peak_stack,limit_hit\r");
    }
    SUBCASE("fields that need quoting are quoted") {
        BenchRecord r;
        r.id = "odd,\"id\"";
        r.family = "f";
        std::string csv = bench_csv({r});
        CHECK(csv.find("\"odd,\"\"id\"\"\"") != std::string::npos);
    }
    SUBCASE("identical across jobs=1 and jobs=8") {
        auto problems = phi5_problems(1, 6);
        BenchConfig serial;
        serial.jobs = 1;
        BenchConfig parallel;
        parallel.jobs = 8;
        std::string a = bench_csv(run_bench(problems, serial));
        std::string b = bench_csv(run_bench(problems, parallel));
        CHECK(a == b);
        auto lines = split_lines(a);
        REQUIRE(lines.size() == 7);
        CHECK(lines[1].rfind("phi5_1,phi5,1,closed,valid,", 0) == 0);
    }
}
