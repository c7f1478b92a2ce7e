#include <doctest.h>

#include <set>

#include "c1ke/export.hpp"
#include "c1ke/families.hpp"
#include "c1ke/oracle.hpp"
#include "c1ke/syntax.hpp"
#include "c1ke/tableau.hpp"
#include "support/random_sequents.hpp"

using namespace c1ke;

namespace {

std::set<std::uint64_t> entry_keys(const Branch& b) {
    std::set<std::uint64_t> keys;
    for (const auto& e : b.entries) keys.insert(e.sf.key());
    return keys;
}

bool branch_has(const Branch& b, Sign sign, const char* text) {
    return b.contains({sign, parse_formula(text)});
}

}  // namespace

TEST_CASE("init_tableau lays out T premises then the F conclusion") {
    Prover prover;
    SUBCASE("theoremhood query") {
        Branch b = prover.init_tableau(parse_sequent("|- ~(P & (~P & @P))"));
        REQUIRE(b.entries.size() == 1);
        CHECK(b.entries[0].sf == SignedFormula{Sign::F, parse_formula("~(P & (~P & @P))")});
    }
    SUBCASE("identity closes at once") {
        Branch b = prover.init_tableau(parse_sequent("P |- P"));
        REQUIRE(b.entries.size() == 2);
        CHECK(b.entries[0].sf == SignedFormula{Sign::T, parse_formula("P")});
        CHECK(b.entries[1].sf == SignedFormula{Sign::F, parse_formula("P")});
        CHECK(b.closed);
    }
    SUBCASE("medical case 1 has seven entries") {
        Sequent s = medical_cases()[0].sequent;
        Branch b = prover.init_tableau(s);
        CHECK(b.entries.size() == 7);
        CHECK(b.entries[5].sf == SignedFormula{Sign::T, parse_formula("N")});
        CHECK(b.entries[6].sf == SignedFormula{Sign::F, parse_formula("K & ~L")});
    }
    SUBCASE("Sigma mode pre-expands") {
        StrategyConfig cfg;
        cfg.signature_mode = Signature::Sigma;
        Prover sigma(cfg);
        Branch b = sigma.init_tableau(parse_sequent("@P |- P"));
        CHECK(b.entries[0].sf.formula == parse_formula("~(P & ~P)"));
    }
}

TEST_CASE("saturate_linear") {
    Prover prover;
    SUBCASE("golden linear proof of the running theorem") {
        Branch b = prover.init_tableau(parse_sequent("|- ~(P & (~P & @P))"));
        auto trace = prover.saturate_linear(b);
        CHECK(b.closed);
        REQUIRE(b.entries.size() == 7);

        std::set<std::uint64_t> expect;
        for (const char* t : {"P", "~P & @P", "~P", "@P"})
            expect.insert(SignedFormula{Sign::T, parse_formula(t)}.key());
        expect.insert(SignedFormula{Sign::T, parse_formula("P & (~P & @P)")}.key());
        expect.insert(SignedFormula{Sign::F, parse_formula("~(P & (~P & @P))")}.key());
        expect.insert(SignedFormula{Sign::F, parse_formula("P")}.key());
        CHECK(entry_keys(b) == expect);

        // closes on {T P, F P}
        CHECK(b.entries[b.closing_pair[0]].sf == SignedFormula{Sign::T, parse_formula("P")});
        CHECK(b.entries[b.closing_pair[1]].sf == SignedFormula{Sign::F, parse_formula("P")});

        REQUIRE(trace.size() == 4);
        CHECK(trace[0].rule == RuleId::FNeg);
        CHECK(trace[1].rule == RuleId::TAnd);
        CHECK(trace[2].rule == RuleId::TAnd);
        CHECK(trace[3].rule == RuleId::TNegCons);
    }
    SUBCASE("an atom saturates to itself") {
        Branch b = prover.init_tableau(parse_sequent("P |- Q"));
        auto trace = prover.saturate_linear(b);
        CHECK(trace.empty());
        CHECK(!b.closed);
        CHECK(b.entries.size() == 2);
    }
    SUBCASE("single T& firing") {
        Branch b = prover.init_tableau(parse_sequent("A & B |- C"));
        auto trace = prover.saturate_linear(b);
        REQUIRE(trace.size() == 1);
        CHECK(trace[0].rule == RuleId::TAnd);
        CHECK(branch_has(b, Sign::T, "A"));
        CHECK(branch_has(b, Sign::T, "B"));
        CHECK(!b.closed);
    }
    SUBCASE("duplicate conclusions are not re-added") {
        Branch b = prover.init_tableau(parse_sequent("P & Q, P |- R"));
        prover.saturate_linear(b);
        CHECK(b.entries.size() == 4);  // T P&Q, T P, F R, + T Q (the second T P is suppressed)
    }
}

TEST_CASE("select_pb") {
    Prover prover;
    SUBCASE("an implication offers its antecedent") {
        Branch b = prover.init_tableau(parse_sequent("A -> B |- C"));
        prover.saturate_linear(b);
        auto pb = prover.select_pb(b);
        REQUIRE(pb);
        CHECK(pb->rule == RuleId::TImp1);
        CHECK(pb->pb_formula == parse_formula("A"));
        CHECK(b.entries[pb->candidate_pos].sf == SignedFormula{Sign::T, parse_formula("A -> B")});
    }
    SUBCASE("atoms only: PB-exhausted") {
        Branch b = prover.init_tableau(parse_sequent("P, Q |- R"));
        prover.saturate_linear(b);
        CHECK(!prover.select_pb(b));
    }
    SUBCASE("F @(A & B) splits on a consistency witness") {
        Branch b = prover.init_tableau(parse_sequent("C |- @(A & B)"));
        prover.saturate_linear(b);
        auto pb = prover.select_pb(b);
        REQUIRE(pb);
        CHECK(pb->rule == RuleId::FConsAnd1);
        CHECK(expansion(pb->pb_formula) == expansion(parse_formula("@A")));
    }
    SUBCASE("present decisions block a split") {
        Branch b = prover.init_tableau(parse_sequent("A -> B, A |- C"));
        prover.saturate_linear(b);  // t_imp_1 fires, main analysed
        CHECK(!prover.select_pb(b));
    }
}

TEST_CASE("prove on the fixture sequents") {
    SUBCASE("running theorem: closed, one branch, no PB, seven nodes") {
        ProofResult res = prove(parse_sequent("|- ~(P & (~P & @P))"));
        CHECK(res.verdict == Verdict::Closed);
        CHECK(res.stats.formula_nodes == 7);
        CHECK(res.stats.branches == 1);
        CHECK(res.stats.pb_applications == 0);
        CHECK(res.tableau.all_leaves_closed());
    }
    SUBCASE("medical cases") {
        auto cases = medical_cases();
        CHECK(prove(cases[0].sequent).verdict == Verdict::Closed);
        CHECK(prove(cases[1].sequent).verdict == Verdict::Closed);
        ProofResult case3 = prove(cases[2].sequent);
        CHECK(case3.verdict == Verdict::Open);
        REQUIRE(case3.open_branch);
        for (const char* t : {"K", "L", "M", "~K", "~L"})
            CHECK(branch_has(*case3.open_branch, Sign::T, t));
        CHECK(branch_has(*case3.open_branch, Sign::F, "~M"));
        CHECK(prove(cases[3].sequent).verdict == Verdict::Closed);
    }
    SUBCASE("independent atoms are immediately open") {
        ProofResult res = prove(parse_sequent("P |- Q"));
        CHECK(res.verdict == Verdict::Open);
        CHECK(res.stats.pb_applications == 0);
        CHECK(res.stats.formula_nodes == 2);
    }
    SUBCASE("branches = pb_applications + 1") {
        for (const char* text :
             {"|- ~(P & (~P & @P))", "A -> B, B -> C |- C", "P | Q |- P", "|- (P -> Q) | P",
              "@P, @Q |- @(P & Q)", "P -> Q, ~Q |- ~P"}) {
            ProofResult res = prove(parse_sequent(text));
            CHECK(res.stats.branches == res.stats.pb_applications + 1);
        }
    }
}

TEST_CASE("extract_countermodel") {
    SUBCASE("direct read-off") {
        ProofResult res = prove(parse_sequent("P |- Q"));
        REQUIRE(res.open_branch);
        ValuationAssignment a = extract_countermodel(*res.open_branch);
        CHECK(a.value(parse_formula("P")) == std::optional<bool>(true));
        CHECK(a.value(parse_formula("Q")) == std::optional<bool>(false));
        CHECK(a.domain.size() == 2);
    }
    SUBCASE("case 3 assignment") {
        ProofResult res = prove(medical_cases()[2].sequent);
        REQUIRE(res.open_branch);
        ValuationAssignment a = extract_countermodel(*res.open_branch);
        CHECK(a.value(parse_formula("K")) == std::optional<bool>(true));
        CHECK(a.value(parse_formula("L")) == std::optional<bool>(true));
        CHECK(a.value(parse_formula("M")) == std::optional<bool>(true));
        CHECK(a.value(parse_formula("~K")) == std::optional<bool>(true));
        CHECK(a.value(parse_formula("~L")) == std::optional<bool>(true));
        CHECK(a.value(parse_formula("~M")) == std::optional<bool>(false));
    }
    SUBCASE("hand-built branches are rejected") {
        Branch b;
        b.entries.push_back({{Sign::T, parse_formula("~P")}, -1});
        b.entries.push_back({{Sign::F, parse_formula("P")}, -1});
        CHECK_THROWS_AS(extract_countermodel(b), NotSaturated);
    }
    SUBCASE("closed results carry no open branch") {
        ProofResult res = prove(parse_sequent("P |- P"));
        CHECK(!res.open_branch);
    }
}

TEST_CASE("a consistency fact buried under negation still closes the tableau") {
    // T ~@X only yields T X, T ~X linearly; the refutation needs the
    // second-tier split on @X itself.
    for (const char* text : {"~@(Q -> Q & P) |- Q", "Q | @R, ~@(~R & ~R) |- Q",
                             "R, ~@(@Q | Q) |- Q", "~@(P & Q) |- ~@P | ~@Q"}) {
        CAPTURE(text);
        Sequent s = parse_sequent(text);
        ProofResult res = prove(s);
        CHECK(res.verdict == Verdict::Closed);
        CHECK(res.stats.pb_applications >= 1);
        CHECK(cross_check(s).agree);
    }
    // the split formula must come from the closure universe: with no @ in
    // sight the pair {T W, T ~W} is just a tolerated contradiction
    ProofResult res = prove(parse_sequent("P & Q, ~(P & Q) |- R"));
    CHECK(res.verdict == Verdict::Open);
}

TEST_CASE("every tableau formula lies in the closure universe") {
    std::vector<Sequent> items;
    for (const char* text :
         {"|- ~(P & (~P & @P))", "@P, @Q |- @(P & Q)", "~@(Q -> Q & P) |- Q", "P | Q |- P"})
        items.push_back(parse_sequent(text));
    for (const auto& inst : medical_cases()) items.push_back(inst.sequent);
    testing::RandomFormulaConfig cfg;
    std::mt19937_64 rng(4242u);
    for (int i = 0; i < 100; ++i) items.push_back(testing::random_sequent(rng, cfg));

    for (const Sequent& s : items) {
        std::vector<FormulaId> u;
        try {
            u = cons_closure_universe(s, 1u << 12);
        } catch (const UniverseLimitExceeded&) {
            continue;
        }
        std::set<FormulaId> universe(u.begin(), u.end());
        ProofResult res = prove(s);
        for (const TreeNode& n : res.tableau.nodes) {
            if (n.kind == TreeNodeKind::Formula)
                CHECK(universe.count(expansion(n.sf.formula)) == 1);
            if (n.kind == TreeNodeKind::Split)
                CHECK(universe.count(expansion(n.pb_formula)) == 1);
        }
    }
}

TEST_CASE("derived rules change proof shape, not verdicts") {
    StrategyConfig no_derived;
    no_derived.use_derived_rules = false;
    for (const char* text :
         {"|- ~(P & (~P & @P))", "P -> Q, ~Q |- ~P", "P | Q |- P", "@P, P |- ~P",
          "@(P & Q) |- @P | @Q", "|- P | ~P"}) {
        Sequent s = parse_sequent(text);
        CHECK(prove(s).verdict == prove(s, no_derived).verdict);
    }
}

TEST_CASE("Sigma and SigmaCirc runs agree") {
    StrategyConfig sigma;
    sigma.signature_mode = Signature::Sigma;
    for (const char* text : {"|- ~(P & (~P & @P))", "@P, P |- ~P", "@(P & Q) |- @P | @Q",
                             "@P, @Q |- @(P -> Q)", "P |- @P"}) {
        Sequent s = parse_sequent(text);
        ProofResult circ = prove(s);
        ProofResult expanded = prove(s, sigma);
        CHECK(circ.verdict == expanded.verdict);
        CHECK(circ.stats.formula_nodes == expanded.stats.formula_nodes);
        CHECK(circ.stats.pb_applications == expanded.stats.pb_applications);
    }
}

TEST_CASE("proof output is deterministic") {
    Sequent s = parse_sequent("@P, @Q |- @(P & Q)");
    StrategyConfig cfg;
    ProofResult r1 = prove(s, cfg);
    ProofResult r2 = prove(s, cfg);
    CHECK(proof_to_json(s, cfg, r1) == proof_to_json(s, cfg, r2));
    CHECK(tableau_to_dot(r1.tableau) == tableau_to_dot(r2.tableau));
}

TEST_CASE("node limit reports partial stats") {
    StrategyConfig cfg;
    cfg.node_limit = 3;
    try {
        prove(medical_cases()[0].sequent, cfg);
        FAIL("should have thrown");
    } catch (const NodeLimitExceeded& e) {
        CHECK(e.partial.formula_nodes == 3);
    }
}

TEST_CASE("an expired time limit aborts the run") {
    StrategyConfig cfg;
    cfg.time_limit = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(prove(medical_cases()[1].sequent, cfg), TimeLimitExceeded);
}

TEST_CASE("tableau tree bookkeeping") {
    ProofResult res = prove(parse_sequent("P | Q |- P"));
    const Tableau& t = res.tableau;
    REQUIRE(!t.nodes.empty());
    CHECK(t.count_kind(TreeNodeKind::Split) == res.stats.pb_applications);
    CHECK(t.count_kind(TreeNodeKind::Formula) == res.stats.formula_nodes);
    // every justification reference points above in the tree
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (int ref : t.nodes[i].premiss_refs) CHECK(ref < static_cast<int>(i));
}
