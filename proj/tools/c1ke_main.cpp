// c1ke — KE tableau prover for the paraconsistent logic C1.
//
// Subcommands: prove, check, gen, bench, parse.  Exit codes: 0 all verdicts
// computed and matching any stated expectations, 1 expectation mismatch,
// 2 usage or syntax error, 3 node/time/universe limit hit.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "c1ke/bench.hpp"
#include "c1ke/export.hpp"
#include "c1ke/families.hpp"
#include "c1ke/oracle.hpp"
#include "c1ke/syntax.hpp"

#ifdef _WIN32
#else
#include <unistd.h>
#endif

namespace {

using namespace c1ke;

bool use_color() {
    const char* env = std::getenv("C1KE_COLOR");
    if (env && std::string(env) == "never") return false;
#ifndef _WIN32
    return isatty(fileno(stdout));
#else
    return false;
#endif
}

std::string paint(const std::string& text, const char* code) {
    if (!use_color()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_banner(Verdict v) {
    return v == Verdict::Closed ? paint("CLOSED", "32") : paint("OPEN", "33");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct IndexRange {
    int lo = 1, hi = 1;
};

// "3" or "1..10"
IndexRange parse_range(const std::string& text) {
    IndexRange r;
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected an index like '3' or a range like '1..10'");
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw CLI::ValidationError("--n", "invalid index range");
    return r;
}

struct ProveOptions {
    std::string input;
    std::string mode = "sigma-circ";
    bool no_derived = false;
    bool json = false;
    std::string dot_path;
    std::size_t node_limit = 1'000'000;
    double time_limit_s = 0;
    bool timings = false;
};

StrategyConfig strategy_from(const ProveOptions& opt) {
    StrategyConfig cfg;
    cfg.signature_mode = opt.mode == "sigma" ? Signature::Sigma : Signature::SigmaCirc;
    cfg.use_derived_rules = !opt.no_derived;
    cfg.node_limit = opt.node_limit;
    if (opt.time_limit_s > 0)
        cfg.time_limit = std::chrono::milliseconds(static_cast<long>(opt.time_limit_s * 1000));
    return cfg;
}

int cmd_prove(const ProveOptions& opt) {
    auto problems = parse_problem_text(read_input(opt.input));
    StrategyConfig cfg = strategy_from(opt);

    bool mismatch = false, limit = false;
    int index = 0;
    for (const ProblemLine& p : problems) {
        ++index;
        if (problems.size() > 1 && !opt.json)
            std::cout << "# [" << index << "] " << p.text << "\n";
        try {
            ProofResult res = prove(p.sequent, cfg);
            if (opt.json) {
                std::cout << proof_to_json(p.sequent, cfg, res, opt.timings) << "\n";
            } else {
                std::cout << verdict_banner(res.verdict) << "\n";
                std::cout << "nodes=" << res.stats.formula_nodes
                          << " branches=" << res.stats.branches
                          << " pb=" << res.stats.pb_applications << "\n";
                if (opt.timings)
                    std::cerr << "elapsed_ms=" << res.stats.elapsed.count() / 1000.0 << "\n";
            }
            if (!opt.dot_path.empty()) {
                std::string path = opt.dot_path;
                if (problems.size() > 1) {
                    std::filesystem::path fp(path);
                    fp.replace_filename(fp.stem().string() + "_" + std::to_string(index) +
                                        fp.extension().string());
                    path = fp.string();
                }
                std::ofstream out(path, std::ios::binary);
                out << tableau_to_dot(res.tableau);
            }
            if (p.expected_valid) {
                bool got_valid = res.verdict == Verdict::Closed;
                if (got_valid != *p.expected_valid) {
                    std::cerr << "mismatch: expected "
                              << (*p.expected_valid ? "valid" : "invalid") << ", proof is "
                              << verdict_name(res.verdict) << ": " << p.text << "\n";
                    mismatch = true;
                }
            }
        } catch (const NodeLimitExceeded&) {
            std::cerr << "node limit exceeded: " << p.text << "\n";
            limit = true;
        } catch (const TimeLimitExceeded&) {
            std::cerr << "time limit exceeded: " << p.text << "\n";
            limit = true;
        }
    }
    return mismatch ? 1 : limit ? 3 : 0;
}

int cmd_check(const std::string& input, std::size_t cap) {
    auto problems = parse_problem_text(read_input(input));
    OracleOptions opt;
    opt.universe_cap = cap;

    bool mismatch = false, limit = false;
    int index = 0;
    for (const ProblemLine& p : problems) {
        ++index;
        if (problems.size() > 1) std::cout << "# [" << index << "] " << p.text << "\n";
        try {
            OracleResult res = oracle_verdict(p.sequent, opt);
            std::cout << (res.valid ? paint("VALID", "32") : paint("INVALID", "31")) << "\n";
            if (res.certificate) {
                std::cout << "admissible-assignment certificate:\n";
                for (FormulaId f : res.certificate->domain)
                    std::cout << print_formula(f) << " := " << (*res.certificate->value(f) ? 1 : 0)
                              << "\n";
            }
            if (p.expected_valid && res.valid != *p.expected_valid) {
                std::cerr << "mismatch: expected " << (*p.expected_valid ? "valid" : "invalid")
                          << ", oracle says " << (res.valid ? "valid" : "invalid") << ": "
                          << p.text << "\n";
                mismatch = true;
            }
        } catch (const UniverseLimitExceeded& e) {
            std::cerr << e.what() << ": " << p.text << "\n";
            limit = true;
        }
    }
    return mismatch ? 1 : limit ? 3 : 0;
}

int cmd_gen(const std::string& family, const std::string& range_text, const std::string& out_dir) {
    std::vector<ProblemInstance> instances;
    if (family == "medical") {
        instances = medical_cases();
    } else {
        IndexRange r = parse_range(range_text);
        for (int n = r.lo; n <= r.hi; ++n)
            instances.push_back(family == "phi5" ? gen_phi5(n) : gen_phi6(n));
    }

    auto render = [](const ProblemInstance& inst) {
        ProblemLine line;
        line.sequent = inst.sequent;
        line.expected_valid = inst.expected_valid;
        line.text = print_sequent(inst.sequent);
        return format_problem_line(line) + "\n";
    };

    if (out_dir.empty()) {
        for (const auto& inst : instances) std::cout << render(inst);
    } else {
        std::filesystem::create_directories(out_dir);
        for (const auto& inst : instances) {
            std::filesystem::path path = std::filesystem::path(out_dir) / (inst.id() + ".p");
            std::ofstream out(path, std::ios::binary);
            out << "# " << inst.id() << "\n" << render(inst);
        }
    }
    return 0;
}

std::vector<BenchProblem> load_bench_problems(const std::string& what) {
    std::vector<BenchProblem> problems;
    auto add_file = [&](const std::filesystem::path& path) {
        auto lines = parse_problem_file(path.string());
        for (const ProblemLine& p : lines) {
            BenchProblem bp;
            bp.id = path.filename().string() + ":" + std::to_string(p.line_no);
            bp.index = static_cast<int>(p.line_no);
            bp.sequent = p.sequent;
            bp.expected_valid = p.expected_valid;
            problems.push_back(std::move(bp));
        }
    };

    if (std::filesystem::is_directory(what)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(what))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) add_file(f);
        return problems;
    }
    if (std::filesystem::is_regular_file(what)) {
        add_file(what);
        return problems;
    }

    // family spec: "phi5:1..10", "phi6:3", "medical"
    std::string fam = what;
    std::string range = "1";
    std::size_t colon = what.find(':');
    if (colon != std::string::npos) {
        fam = what.substr(0, colon);
        range = what.substr(colon + 1);
    }
    if (fam == "medical") {
        for (const auto& inst : medical_cases()) problems.push_back(to_bench_problem(inst));
    } else if (fam == "phi5" || fam == "phi6") {
        IndexRange r = parse_range(range);
        for (int n = r.lo; n <= r.hi; ++n)
            problems.push_back(to_bench_problem(fam == "phi5" ? gen_phi5(n) : gen_phi6(n)));
    } else {
        throw CLI::ValidationError(
            "problems", "expected a directory, a problem file, or a family spec like phi5:1..10");
    }
    return problems;
}

int cmd_bench(const std::string& what, const std::string& csv_path, ProveOptions opt, int jobs) {
    std::vector<BenchProblem> problems = load_bench_problems(what);

    if (opt.time_limit_s <= 0) opt.time_limit_s = 60;  // per-problem default
    BenchConfig cfg;
    cfg.strategy = strategy_from(opt);
    cfg.jobs = jobs;
    cfg.with_timings = opt.timings;

    std::vector<BenchRecord> records = run_bench(problems, cfg);
    std::string csv = bench_csv(records, opt.timings);
    if (csv_path.empty() || csv_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path, std::ios::binary);
        out << csv;
    }

    bool mismatch = false, limit = false;
    for (const BenchRecord& r : records) {
        if (r.mismatch()) {
            std::cerr << "mismatch: " << r.id << " expected "
                      << (*r.expected_valid ? "valid" : "invalid") << ", proof is "
                      << verdict_name(*r.verdict) << "\n";
            mismatch = true;
        }
        if (r.limit_hit) limit = true;
    }
    return mismatch ? 1 : limit ? 3 : 0;
}

int cmd_parse(const std::string& input) {
    std::string content = read_input(input);
    std::size_t line_no = 0, start = 0;
    while (start <= content.size()) {
        std::size_t nl = content.find('\n', start);
        std::string line =
            content.substr(start, nl == std::string::npos ? content.size() - start : nl - start);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b != std::string::npos) {
            line = line.substr(b);
            std::string printed;
            if (line.find("|-") != std::string::npos) {
                Sequent s = parse_sequent(line);
                printed = print_sequent(s);
                Sequent again = parse_sequent(printed);
                if (again.premises != s.premises || again.conclusion != s.conclusion)
                    throw std::logic_error("round-trip failed at line " + std::to_string(line_no));
            } else {
                FormulaId f = parse_formula(line);
                printed = print_formula(f);
                if (parse_formula(printed) != f)
                    throw std::logic_error("round-trip failed at line " + std::to_string(line_no));
            }
            std::cout << printed << "\n";
        }
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KE tableau prover for the paraconsistent logic C1"};
    app.require_subcommand(1);

    ProveOptions popt;
    auto add_strategy_flags = [&](CLI::App* cmd) {
        cmd->add_option("--mode", popt.mode, "signature mode")
            ->check(CLI::IsMember({"sigma", "sigma-circ"}))
            ->capture_default_str();
        cmd->add_flag("--no-derived", popt.no_derived, "disable the 6 derived two-premiss rules");
        cmd->add_option("--node-limit", popt.node_limit, "formula-node cap per proof")
            ->capture_default_str();
        cmd->add_option("--time-limit", popt.time_limit_s, "wall-clock cap per proof, seconds");
        cmd->add_flag("--timings", popt.timings, "include wall-clock timings in output");
    };

    auto* prove_cmd = app.add_subcommand("prove", "run the KE proof search on a problem file");
    prove_cmd->add_option("file", popt.input, "problem file or '-' for stdin")->required();
    add_strategy_flags(prove_cmd);
    prove_cmd->add_flag("--json", popt.json, "emit the JSON proof object");
    prove_cmd->add_option("--dot", popt.dot_path, "write the proof tree in DOT format");

    std::string check_input;
    std::size_t check_cap = 24;
    auto* check_cmd = app.add_subcommand("check", "decide validity with the bivaluation oracle");
    check_cmd->add_option("file", check_input, "problem file or '-' for stdin")->required();
    check_cmd->add_option("--cap", check_cap, "formula universe cap")->capture_default_str();

    std::string gen_family, gen_range = "1", gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "generate benchmark problem families");
    gen_cmd->add_option("family", gen_family, "phi5, phi6, or medical")
        ->required()
        ->check(CLI::IsMember({"phi5", "phi6", "medical"}));
    gen_cmd->add_option("--n", gen_range, "instance index or range, e.g. 3 or 1..10");
    gen_cmd->add_option("--out", gen_out, "write one .p file per instance into this directory");

    std::string bench_what, bench_csv_path;
    int bench_jobs = 1;
    auto* bench_cmd = app.add_subcommand("bench", "run a problem set and emit CSV records");
    bench_cmd->add_option("problems", bench_what, "directory, problem file, or family spec")
        ->required();
    bench_cmd->add_option("--csv", bench_csv_path, "CSV output path ('-' for stdout)");
    bench_cmd->add_option("--jobs", bench_jobs, "worker threads")->check(CLI::PositiveNumber);
    add_strategy_flags(bench_cmd);
    bench_cmd->get_option("--time-limit")
        ->description("wall-clock cap per problem, seconds (default 60)");

    std::string parse_input;
    auto* parse_cmd = app.add_subcommand("parse", "validate parser round-trips");
    parse_cmd->add_option("file", parse_input, "formula/sequent file or '-' for stdin")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (prove_cmd->parsed()) return cmd_prove(popt);
        if (check_cmd->parsed()) return cmd_check(check_input, check_cap);
        if (gen_cmd->parsed()) return cmd_gen(gen_family, gen_range, gen_out);
        if (bench_cmd->parsed()) return cmd_bench(bench_what, bench_csv_path, popt, bench_jobs);
        if (parse_cmd->parsed()) return cmd_parse(parse_input);
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UniverseLimitExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
