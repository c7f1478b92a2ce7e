#include "c1ke/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace c1ke {

namespace {

// Compiled clause program over universe positions.  Values live in a flat
// bit vector indexed by position in the digest-sorted universe.
struct Enumeration {
    enum class Op : std::uint8_t { And, Or, Imp, ConsShape };

    struct Forced {
        Op op;
        int target;
        int a, b;  // And/Or/Imp: children; ConsShape: x and ~x
    };
    struct NegClause {       // v(~a)=0 -> v(a)=1
        int neg, inner;
    };
    struct NegNegClause {    // v(~~a)=1 -> v(a)=1
        int outer, inner;
    };
    struct ConsCompClause {  // v(@(a#b))=0 -> v(@a)=0 or v(@b)=0
        int whole, ca, cb;
    };

    std::vector<FormulaId> order;
    std::vector<int> free_positions;
    std::vector<Forced> forced;  // topologically ordered, children first
    std::vector<NegClause> neg_clauses;
    std::vector<NegNegClause> neg_neg_clauses;
    std::vector<ConsCompClause> cons_comp_clauses;
    std::vector<int> premises;
    int conclusion = -1;
};

Enumeration compile(const Sequent& s, const std::vector<FormulaId>& universe) {
    Enumeration e;
    e.order = universe;
    sort_by_digest(e.order);

    std::unordered_map<FormulaId, int> pos;
    for (std::size_t i = 0; i < e.order.size(); ++i)
        pos.emplace(e.order[i], static_cast<int>(i));
    auto at = [&](FormulaId f) {
        auto it = pos.find(expansion(f));
        assert(it != pos.end());
        return it->second;
    };

    // Children of a universe member are universe members (subterm closure),
    // so truth-functional nodes and consistency shapes are always forced.
    std::vector<FormulaId> by_size = e.order;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](FormulaId a, FormulaId b) { return size(a) < size(b); });

    for (FormulaId f : by_size) {
        Kind k = kind(f);
        if (k == Kind::Atom) {
            e.free_positions.push_back(at(f));
            continue;
        }
        if (k == Kind::And || k == Kind::Or || k == Kind::Imp) {
            Enumeration::Op op = k == Kind::And ? Enumeration::Op::And
                               : k == Kind::Or  ? Enumeration::Op::Or
                                                : Enumeration::Op::Imp;
            e.forced.push_back({op, at(f), at(left(f)), at(right(f))});
            continue;
        }
        // Neg
        if (auto x = cons_shape(f)) {
            // v(@x) = 0 iff v(x & ~x) = 1: forced both ways by the ~ and @
            // clauses together.
            FormulaId xe = expansion(*x);
            e.forced.push_back({Enumeration::Op::ConsShape, at(f), at(xe), at(mk_neg(xe))});
            Kind xk = kind(xe);
            if (xk == Kind::And || xk == Kind::Or || xk == Kind::Imp)
                e.cons_comp_clauses.push_back({at(f), at(expansion(mk_cons(left(xe)))),
                                               at(expansion(mk_cons(right(xe))))});
        } else {
            e.free_positions.push_back(at(f));
            e.neg_clauses.push_back({at(f), at(left(f))});
        }
        if (kind(left(f)) == Kind::Neg)
            e.neg_neg_clauses.push_back({at(f), at(left(left(f)))});
    }

    // Free bits follow the digest-sorted universe order, first formula most
    // significant, so the first countermodel found is the lexicographically
    // first admissible one.
    std::sort(e.free_positions.begin(), e.free_positions.end());
    if (e.free_positions.size() > 32) throw UniverseLimitExceeded(e.free_positions.size());

    for (FormulaId p : s.premises) e.premises.push_back(at(p));
    e.conclusion = at(s.conclusion);
    return e;
}

bool admissible_values(const Enumeration& e, std::vector<std::uint8_t>& v, std::uint64_t bits) {
    for (std::size_t j = 0; j < e.free_positions.size(); ++j)
        v[e.free_positions[j]] =
            static_cast<std::uint8_t>((bits >> (e.free_positions.size() - 1 - j)) & 1);
    for (const auto& f : e.forced) {
        switch (f.op) {
            case Enumeration::Op::And: v[f.target] = v[f.a] & v[f.b]; break;
            case Enumeration::Op::Or: v[f.target] = v[f.a] | v[f.b]; break;
            case Enumeration::Op::Imp:
                v[f.target] = static_cast<std::uint8_t>(!v[f.a] || v[f.b]);
                break;
            case Enumeration::Op::ConsShape:
                v[f.target] = static_cast<std::uint8_t>(!(v[f.a] & v[f.b]));
                break;
        }
    }
    for (const auto& c : e.neg_clauses)
        if (!v[c.neg] && !v[c.inner]) return false;
    for (const auto& c : e.neg_neg_clauses)
        if (v[c.outer] && !v[c.inner]) return false;
    for (const auto& c : e.cons_comp_clauses)
        if (!v[c.whole] && v[c.ca] && v[c.cb]) return false;
    return true;
}

}  // namespace

OracleResult oracle_verdict(const Sequent& s, const OracleOptions& opt) {
    Enumeration e = compile(s, cons_closure_universe(s, opt.universe_cap));

    OracleResult res;
    res.universe = e.order;

    std::vector<std::uint8_t> v(e.order.size());
    std::uint64_t total = 1ull << e.free_positions.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (!admissible_values(e, v, bits)) continue;
        if (v[e.conclusion]) continue;
        bool premises_hold = true;
        for (int p : e.premises)
            if (!v[p]) {
                premises_hold = false;
                break;
            }
        if (!premises_hold) continue;

        ValuationAssignment cert;
        for (std::size_t i = 0; i < e.order.size(); ++i) cert.set(e.order[i], v[i] != 0);
        sort_by_digest(cert.domain);
        res.valid = false;
        res.certificate = std::move(cert);
        return res;
    }
    res.valid = true;
    return res;
}

AgreementReport cross_check(const Sequent& s, const StrategyConfig& cfg,
                            const OracleOptions& opt) {
    ProofResult pr = prove(s, cfg);
    OracleResult orc = oracle_verdict(s, opt);

    AgreementReport rep;
    rep.prover_verdict = pr.verdict;
    rep.oracle_valid = orc.valid;
    rep.agree = (pr.verdict == Verdict::Closed) == orc.valid;
    if (pr.verdict == Verdict::Open) {
        ValuationAssignment counter = extract_countermodel(*pr.open_branch);
        rep.countermodel_admissible = static_cast<bool>(admissible(counter));
    }
    return rep;
}

}  // namespace c1ke
