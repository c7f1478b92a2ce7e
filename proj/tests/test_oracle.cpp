#include <doctest.h>

#include "c1ke/families.hpp"
#include "c1ke/oracle.hpp"
#include "c1ke/syntax.hpp"
#include "support/random_sequents.hpp"

using namespace c1ke;

namespace {

ValuationAssignment assign(std::initializer_list<std::pair<const char*, bool>> items) {
    ValuationAssignment a;
    for (const auto& [text, v] : items) a.set(parse_formula(text), v);
    sort_by_digest(a.domain);
    return a;
}

bool oracle_valid(const char* text) { return oracle_verdict(parse_sequent(text)).valid; }

// Truth-table check for the classical {&,|,->} fragment.
bool classically_valid(const Sequent& s) {
    std::vector<FormulaId> atoms;
    for (FormulaId f : cons_closure_universe(s, 64))
        if (kind(f) == Kind::Atom) atoms.push_back(f);
    sort_by_digest(atoms);

    for (std::uint64_t bits = 0; bits < (1ull << atoms.size()); ++bits) {
        std::unordered_map<FormulaId, bool> env;
        for (std::size_t i = 0; i < atoms.size(); ++i) env[atoms[i]] = (bits >> i) & 1;
        auto eval = [&](auto&& self, FormulaId f) -> bool {
            switch (kind(f)) {
                case Kind::Atom: return env.at(f);
                case Kind::And: return self(self, left(f)) && self(self, right(f));
                case Kind::Or: return self(self, left(f)) || self(self, right(f));
                case Kind::Imp: return !self(self, left(f)) || self(self, right(f));
                default: throw std::logic_error("not in the classical fragment");
            }
        };
        bool all = true;
        for (FormulaId p : s.premises) all = all && eval(eval, p);
        if (all && !eval(eval, s.conclusion)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("admissibility of the clause fixtures") {
    SUBCASE("a contradiction is admissible (paraconsistency)") {
        CHECK(admissible(assign({{"P", 1}, {"~P", 1}})));
    }
    SUBCASE("both P and ~P false violates the negation clause") {
        AdmissibilityReport r = admissible(assign({{"P", 0}, {"~P", 0}}));
        CHECK(!r);
        CHECK(r.violated_clause == "v(~a) = 0 implies v(a) = 1");
    }
    SUBCASE("a consistent contradiction violates the @ clause") {
        AdmissibilityReport r =
            admissible(assign({{"P", 1}, {"~P", 1}, {"P & ~P", 1}, {"~(P & ~P)", 1}}));
        CHECK(!r);
        CHECK(r.violated_clause == "v(@a) = 1 implies v(a) = 0 or v(~a) = 0");
    }
    SUBCASE("biconditional clauses") {
        CHECK(!admissible(assign({{"P", 1}, {"Q", 0}, {"P & Q", 1}})));
        CHECK(!admissible(assign({{"P", 0}, {"Q", 0}, {"P | Q", 1}})));
        CHECK(!admissible(assign({{"P", 1}, {"Q", 0}, {"P -> Q", 1}})));
        CHECK(admissible(assign({{"P", 1}, {"Q", 1}, {"P & Q", 1}})));
    }
    SUBCASE("double negation clause") {
        CHECK(!admissible(assign({{"P", 0}, {"~~P", 1}})));
        CHECK(admissible(assign({{"P", 1}, {"~~P", 1}})));
        CHECK(admissible(assign({{"P", 0}, {"~~P", 0}})));
    }
    SUBCASE("component-witness clause") {
        // @(P & Q) = 0 forces @P = 0 or @Q = 0
        ValuationAssignment a = assign({{"@(P & Q)", 0}, {"@P", 1}, {"@Q", 1}});
        AdmissibilityReport r = admissible(a);
        CHECK(!r);
        CHECK(r.violated_clause == "v(@(a # b)) = 0 implies v(@a) = 0 or v(@b) = 0");
        CHECK(admissible(assign({{"@(P & Q)", 0}, {"@P", 0}, {"@Q", 1}})));
    }
    SUBCASE("clauses with missing parts are skipped") {
        CHECK(admissible(assign({{"P & Q", 1}, {"P", 0}})));  // Q not in domain
        CHECK(admissible(assign({{"@(P & Q)", 0}, {"@P", 1}})));
    }
}

TEST_CASE("monotone restriction: admissibility survives domain shrinking") {
    testing::RandomFormulaConfig cfg;
    std::mt19937_64 rng(99u);
    int found = 0;
    while (found < 50) {
        Sequent s = testing::random_sequent(rng, cfg);
        std::vector<FormulaId> u;
        try {
            u = cons_closure_universe(s, 14);
        } catch (const UniverseLimitExceeded&) {
            continue;
        }
        sort_by_digest(u);
        std::uniform_int_distribution<std::uint64_t> d;
        std::uint64_t bits = d(rng);
        ValuationAssignment full;
        for (std::size_t i = 0; i < u.size(); ++i) full.set(u[i], (bits >> i) & 1);
        if (!admissible(full)) continue;
        ++found;
        // drop every other formula; clause instances only disappear
        ValuationAssignment part;
        for (std::size_t i = 0; i < u.size(); i += 2) part.set(u[i], *full.value(u[i]));
        CHECK(admissible(part));
    }
}

TEST_CASE("oracle verdicts on the fixtures") {
    CHECK(oracle_valid("P |- P"));
    CHECK(!oracle_valid("P |- Q"));

    SUBCASE("medical cases") {
        auto cases = medical_cases();
        CHECK(oracle_verdict(cases[0].sequent).valid);
        CHECK(oracle_verdict(cases[1].sequent).valid);
        OracleResult case3 = oracle_verdict(cases[2].sequent);
        CHECK(!case3.valid);
        REQUIRE(case3.certificate);
        // certificate matches the prover's open branch on shared formulas
        ProofResult pr = prove(cases[2].sequent);
        REQUIRE(pr.open_branch);
        ValuationAssignment branch_model = extract_countermodel(*pr.open_branch);
        for (FormulaId f : branch_model.domain) {
            REQUIRE(case3.certificate->value(f).has_value());
            CHECK(case3.certificate->value(f) == branch_model.value(f));
        }
        CHECK(oracle_verdict(cases[3].sequent).valid);
    }

    SUBCASE("certificates satisfy premises and refute the conclusion") {
        OracleResult res = oracle_verdict(parse_sequent("P -> Q, ~Q |- ~P"));
        REQUIRE(!res.valid);
        REQUIRE(res.certificate);
        CHECK(admissible(*res.certificate));
        CHECK(res.certificate->value(parse_formula("~P")) == std::optional<bool>(false));
        CHECK(res.certificate->value(parse_formula("P -> Q")) == std::optional<bool>(true));
        CHECK(res.certificate->value(parse_formula("~Q")) == std::optional<bool>(true));
    }

    SUBCASE("universe cap propagates") {
        OracleOptions tight;
        tight.universe_cap = 3;
        CHECK_THROWS_AS(oracle_verdict(parse_sequent("@(P & Q) |- R"), tight),
                        UniverseLimitExceeded);
    }
}

TEST_CASE("the Hilbert axioms hold and explosion fails") {
    // axiom schemas instantiated at atoms
    for (const char* ax : {
             "|- P -> Q -> P",                                      // Ax1
             "|- (P -> Q) -> (P -> Q -> R) -> P -> R",              // Ax2
             "|- P -> Q -> P & Q",                                  // Ax3
             "|- P & Q -> P",                                       // Ax4
             "|- P & Q -> Q",                                       // Ax5
             "|- P -> P | Q",                                       // Ax6
             "|- Q -> P | Q",                                       // Ax7
             "|- (P -> R) -> (Q -> R) -> (P | Q -> R)",             // Ax8
             "|- P | ~P",                                           // Ax10
             "|- ~~P -> P",                                         // Ax11
             "|- @P -> P -> ~P -> Q",                               // bc1
             "|- @P & @Q -> @(P & Q)",                              // ca1
             "|- @P & @Q -> @(P | Q)",                              // ca2
             "|- @P & @Q -> @(P -> Q)",                             // ca3
         }) {
        CAPTURE(ax);
        CHECK(oracle_valid(ax));
    }
    // the classical explosion law is not C1-valid
    CHECK(!oracle_valid("|- P -> ~P -> Q"));
    CHECK(!oracle_valid("P & ~P |- Q"));
    CHECK(!oracle_valid("P, ~P |- Q"));
    // but explosion with consistency holds
    CHECK(oracle_valid("@P, P, ~P |- Q"));
}

TEST_CASE("classical fragment agrees with truth tables") {
    testing::RandomFormulaConfig cfg;
    std::mt19937_64 rng(0xc1a551calu);
    int found = 0;
    while (found < 120) {
        Sequent s = testing::random_sequent(rng, cfg);
        bool classical = true;
        auto scan = [&](FormulaId f) {
            for (FormulaId sub : subformulas(f)) {
                Kind k = kind(sub);
                if (k == Kind::Neg || k == Kind::Cons) return false;
            }
            return true;
        };
        for (FormulaId p : s.premises) classical = classical && scan(p);
        classical = classical && scan(s.conclusion);
        if (!classical) continue;
        ++found;
        CHECK(oracle_verdict(s).valid == classically_valid(s));
    }
}

TEST_CASE("cross_check agreement on fixtures") {
    SUBCASE("running theorem: closed and valid") {
        AgreementReport rep = cross_check(parse_sequent("|- ~(P & (~P & @P))"));
        CHECK(rep.agree);
        CHECK(rep.prover_verdict == Verdict::Closed);
        CHECK(rep.oracle_valid);
    }
    SUBCASE("medical case 3: open and invalid, countermodel admissible") {
        AgreementReport rep = cross_check(medical_cases()[2].sequent);
        CHECK(rep.agree);
        CHECK(rep.prover_verdict == Verdict::Open);
        CHECK(!rep.oracle_valid);
        REQUIRE(rep.countermodel_admissible);
        CHECK(*rep.countermodel_admissible);
    }
    SUBCASE("disjunction weakening is refuted on both routes") {
        AgreementReport rep = cross_check(parse_sequent("A | B |- A"));
        CHECK(rep.agree);
        CHECK(rep.prover_verdict == Verdict::Open);
    }
}
