#include "c1ke/families.hpp"

#include <stdexcept>

namespace c1ke {

namespace {

FormulaId indexed_atom(const char* base, int i) {
    return mk_atom(std::string(base) + std::to_string(i));
}

FormulaId fold_and(const std::vector<FormulaId>& items) {
    FormulaId acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) acc = mk_and(items[i], acc);
    return acc;
}

FormulaId fold_or(const std::vector<FormulaId>& items) {
    FormulaId acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) acc = mk_or(items[i], acc);
    return acc;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Phi5: return "phi5";
        case Family::Phi6: return "phi6";
        case Family::Medical: return "medical";
    }
    return "?";
}

std::string ProblemInstance::id() const {
    return std::string(family_name(family)) + "_" + std::to_string(index);
}

ProblemInstance gen_phi5(int n) {
    if (n < 1) throw std::invalid_argument("phi5 index must be >= 1");
    std::vector<FormulaId> a, all_a, rules, cons_a;
    for (int i = 1; i <= n + 1; ++i) a.push_back(indexed_atom("A", i));
    for (int i = 1; i <= n; ++i) {
        all_a.push_back(a[i - 1]);
        cons_a.push_back(mk_cons(a[i - 1]));
        FormulaId bi = indexed_atom("B", i);
        rules.push_back(mk_imp(a[n], mk_imp(mk_or(a[i - 1], bi), mk_cons(a[i]))));
    }
    FormulaId an1 = a[n];
    Sequent s;
    s.premises = {mk_cons(a[0]), fold_and(all_a), fold_and(rules),
                  mk_imp(fold_and(cons_a), mk_neg(an1))};
    s.conclusion = mk_neg(mk_neg(mk_neg(an1)));
    return ProblemInstance{Family::Phi5, n, std::move(s), true};
}

ProblemInstance gen_phi6(int n) {
    if (n < 1) throw std::invalid_argument("phi6 index must be >= 1");
    std::vector<FormulaId> a, b, c, cons_c, rules, plain_c, goals;
    for (int i = 1; i <= n + 1; ++i) a.push_back(indexed_atom("A", i));
    for (int i = 1; i <= n; ++i) {
        b.push_back(indexed_atom("B", i));
        c.push_back(indexed_atom("C", i));
    }
    FormulaId d = mk_atom("D");
    for (int i = 1; i <= n; ++i) {
        cons_c.push_back(mk_cons(c[i - 1]));
        plain_c.push_back(c[i - 1]);
        rules.push_back(mk_imp(mk_or(a[i - 1], b[i - 1]), mk_cons(a[i])));
        goals.push_back(mk_cons(mk_imp(a[i], c[i - 1])));
    }
    goals.push_back(d);
    Sequent s;
    s.premises = {fold_and(b), fold_and(cons_c), fold_and(rules),
                  mk_imp(fold_and(plain_c), mk_and(d, mk_neg(c[0])))};
    s.conclusion = fold_or(goals);
    return ProblemInstance{Family::Phi6, n, std::move(s), true};
}

std::vector<ProblemInstance> medical_cases() {
    FormulaId K = mk_atom("K"), L = mk_atom("L"), M = mk_atom("M");
    FormulaId N = mk_atom("N"), O = mk_atom("O");
    std::vector<FormulaId> kb = {
        mk_imp(K, mk_neg(L)),  // F1: K and L exclude each other
        mk_imp(L, mk_neg(K)),  // F2
        mk_imp(K, M),          // F3: K entails M
        mk_imp(N, K),          // F4: symptom N indicates K
        mk_imp(O, L),          // F5: symptom O indicates L
    };

    auto make = [&](int case_no, std::vector<FormulaId> extra, FormulaId goal, bool valid) {
        Sequent s;
        s.premises = kb;
        for (FormulaId f : extra) s.premises.push_back(f);
        s.conclusion = goal;
        return ProblemInstance{Family::Medical, case_no, std::move(s), valid};
    };

    return {
        make(1, {N}, mk_and(K, mk_neg(L)), true),
        make(2, {N, O}, mk_and(K, L), true),
        make(3, {N, O}, mk_neg(M), false),
        make(4, {N, O}, mk_and(K, mk_neg(mk_cons(K))), true),
    };
}

}  // namespace c1ke
