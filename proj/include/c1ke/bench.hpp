// ============================================================================
// c1ke/bench.hpp — benchmark runner
// ============================================================================
//
// Runs a list of problems under per-problem node/time limits, optionally on
// several worker threads, and reports one record per problem.  Records are
// merged in input order, so CSV output does not depend on scheduling; the
// elapsed_ms column is zero unless timings are requested.
//
// ============================================================================

#ifndef C1KE_BENCH_HPP
#define C1KE_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "c1ke/families.hpp"
#include "c1ke/tableau.hpp"

namespace c1ke {

enum class LimitKind : std::uint8_t { Node, Time, Universe };

std::string_view limit_name(LimitKind k);

struct BenchProblem {
    std::string id;
    std::string family;  // empty for file-based problems
    int index = 0;
    Sequent sequent;
    std::optional<bool> expected_valid;
};

struct BenchRecord {
    std::string id;
    std::string family;
    int index = 0;
    std::optional<Verdict> verdict;  // present iff no limit was hit
    std::optional<bool> expected_valid;
    ProofStats stats;
    std::optional<LimitKind> limit_hit;

    bool mismatch() const {
        return verdict && expected_valid &&
               (*verdict == Verdict::Closed) != *expected_valid;
    }
};

struct BenchConfig {
    StrategyConfig strategy;  // node_limit/time_limit apply per problem
    int jobs = 1;
    bool with_timings = false;
};

std::vector<BenchRecord> run_bench(const std::vector<BenchProblem>& problems,
                                   const BenchConfig& cfg);

// RFC-4180 CSV; header:
// id,family,n,verdict,expected,nodes,branches,pb,rule_applications,elapsed_ms,peak_stack,limit_hit
std::string bench_csv(const std::vector<BenchRecord>& records, bool with_timings = false);

BenchProblem to_bench_problem(const ProblemInstance& inst);

}  // namespace c1ke

#endif  // C1KE_BENCH_HPP
