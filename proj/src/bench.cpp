#include "c1ke/bench.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "c1ke/export.hpp"

namespace c1ke {

std::string_view limit_name(LimitKind k) {
    switch (k) {
        case LimitKind::Node: return "node";
        case LimitKind::Time: return "time";
        case LimitKind::Universe: return "universe";
    }
    return "?";
}

BenchProblem to_bench_problem(const ProblemInstance& inst) {
    BenchProblem p;
    p.id = inst.id();
    p.family = family_name(inst.family);
    p.index = inst.index;
    p.sequent = inst.sequent;
    p.expected_valid = inst.expected_valid;
    return p;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchProblem>& problems,
                                   const BenchConfig& cfg) {
    std::vector<BenchRecord> records(problems.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= problems.size()) return;
            const BenchProblem& p = problems[i];
            BenchRecord& r = records[i];
            r.id = p.id;
            r.family = p.family;
            r.index = p.index;
            r.expected_valid = p.expected_valid;
            try {
                ProofResult res = prove(p.sequent, cfg.strategy);
                r.verdict = res.verdict;
                r.stats = res.stats;
            } catch (const NodeLimitExceeded& e) {
                r.stats = e.partial;
                r.limit_hit = LimitKind::Node;
            } catch (const TimeLimitExceeded& e) {
                r.stats = e.partial;
                r.limit_hit = LimitKind::Time;
            } catch (const UniverseLimitExceeded&) {
                r.limit_hit = LimitKind::Universe;
            }
        }
    };

    int jobs = cfg.jobs < 1 ? 1 : cfg.jobs;
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool with_timings) {
    auto field = [](std::string s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };

    std::ostringstream os;
    os << "id,family,n,verdict,expected,nodes,branches,pb,rule_applications,elapsed_ms,"
          "peak_stack,limit_hit\r\n";
    for (const BenchRecord& r : records) {
        os << field(r.id) << ',' << field(r.family) << ',' << r.index << ','
           << (r.verdict ? verdict_name(*r.verdict) : "") << ','
           << (r.expected_valid ? (*r.expected_valid ? "valid" : "invalid") : "") << ','
           << r.stats.formula_nodes << ',' << r.stats.branches << ',' << r.stats.pb_applications
           << ',' << r.stats.total_rule_applications() << ','
           << (with_timings ? r.stats.elapsed.count() / 1000 : 0) << ','
           << r.stats.peak_open_stack << ','
           << (r.limit_hit ? std::string(limit_name(*r.limit_hit)) : "") << "\r\n";
    }
    return os.str();
}

}  // namespace c1ke
