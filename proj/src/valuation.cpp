#include "c1ke/valuation.hpp"

#include <algorithm>

#include "c1ke/syntax.hpp"

namespace c1ke {

void ValuationAssignment::set(FormulaId f, bool v) {
    f = expansion(f);
    if (values.emplace(f, v).second) domain.push_back(f);
    else values[f] = v;
}

std::optional<bool> ValuationAssignment::value(FormulaId f) const {
    auto it = values.find(expansion(f));
    if (it == values.end()) return std::nullopt;
    return it->second;
}

void sort_by_digest(std::vector<FormulaId>& formulas) {
    std::sort(formulas.begin(), formulas.end(), [](FormulaId a, FormulaId b) {
        std::uint64_t da = digest(a), db = digest(b);
        if (da != db) return da < db;
        if (a == b) return false;
        return print_formula(a) < print_formula(b);
    });
    formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());
}

AdmissibilityReport admissible(const ValuationAssignment& a) {
    std::vector<FormulaId> order = a.domain;
    sort_by_digest(order);

    auto val = [&](FormulaId f) { return a.value(f); };
    auto fail = [&](const char* clause, FormulaId at) {
        AdmissibilityReport r;
        r.admissible = false;
        r.violated_clause = clause;
        r.at = at;
        return r;
    };

    for (FormulaId f : order) {
        bool vf = *val(f);
        Kind k = kind(f);
        if (k == Kind::And || k == Kind::Or || k == Kind::Imp) {
            auto va = val(left(f));
            auto vb = val(right(f));
            if (va && vb) {
                bool want = k == Kind::And ? (*va && *vb)
                          : k == Kind::Or  ? (*va || *vb)
                                           : (!*va || *vb);
                if (vf != want)
                    return fail(k == Kind::And ? "v(a & b) = 1 iff v(a) = 1 and v(b) = 1"
                                : k == Kind::Or ? "v(a | b) = 1 iff v(a) = 1 or v(b) = 1"
                                                : "v(a -> b) = 1 iff v(a) = 0 or v(b) = 1",
                                f);
            }
            continue;
        }
        if (k != Kind::Neg) continue;

        FormulaId inner = left(f);
        if (auto vi = val(inner); vi && !vf && !*vi)
            return fail("v(~a) = 0 implies v(a) = 1", f);
        if (kind(inner) == Kind::Neg) {
            if (auto vc = val(left(inner)); vc && vf && !*vc)
                return fail("v(~~a) = 1 implies v(a) = 1", f);
        }
        if (auto x = cons_shape(f)) {
            FormulaId xe = expansion(*x);
            auto vx = val(xe);
            auto vnx = val(mk_neg(xe));
            if (vx && vnx && vf && *vx && *vnx)
                return fail("v(@a) = 1 implies v(a) = 0 or v(~a) = 0", f);
            Kind xk = kind(xe);
            if (xk == Kind::And || xk == Kind::Or || xk == Kind::Imp) {
                auto vca = val(expansion(mk_cons(left(xe))));
                auto vcb = val(expansion(mk_cons(right(xe))));
                if (vca && vcb && !vf && *vca && *vcb)
                    return fail("v(@(a # b)) = 0 implies v(@a) = 0 or v(@b) = 0", f);
            }
        }
    }
    return AdmissibilityReport{};
}

}  // namespace c1ke
