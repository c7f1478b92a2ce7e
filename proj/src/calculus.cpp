#include "c1ke/calculus.hpp"

#include <array>
#include <cassert>

namespace c1ke {

namespace {

struct RuleMeta {
    RuleId id;
    std::string_view name;
};

constexpr std::array<RuleMeta, 19> k_rule_table{{
    {RuleId::FImp, "f_imp"},
    {RuleId::TAnd, "t_and"},
    {RuleId::FOr, "f_or"},
    {RuleId::FNeg, "f_neg"},
    {RuleId::TNegNeg, "t_neg_neg"},
    {RuleId::TImp1, "t_imp_1"},
    {RuleId::FAnd1, "f_and_1"},
    {RuleId::TOr1, "t_or_1"},
    {RuleId::TNegCons, "t_neg_cons"},
    {RuleId::FConsAnd1, "f_cons_and_1"},
    {RuleId::FConsOr1, "f_cons_or_1"},
    {RuleId::FConsImp1, "f_cons_imp_1"},
    {RuleId::TImp2, "t_imp_2"},
    {RuleId::FAnd2, "f_and_2"},
    {RuleId::TOr2, "t_or_2"},
    {RuleId::FConsAnd2, "f_cons_and_2"},
    {RuleId::FConsOr2, "f_cons_or_2"},
    {RuleId::FConsImp2, "f_cons_imp_2"},
    {RuleId::PB, "pb"},
}};

RuleId cons_rule(Kind connective, bool second) {
    switch (connective) {
        case Kind::And: return second ? RuleId::FConsAnd2 : RuleId::FConsAnd1;
        case Kind::Or: return second ? RuleId::FConsOr2 : RuleId::FConsOr1;
        default: return second ? RuleId::FConsImp2 : RuleId::FConsImp1;
    }
}

}  // namespace

std::string print_signed(SignedFormula sf, PrintStyle style) {
    std::string out = sf.sign == Sign::T ? "T " : "F ";
    out += print_formula(sf.formula, style);
    return out;
}

std::string_view rule_name(RuleId id) {
    return k_rule_table[static_cast<std::size_t>(id)].name;
}

std::optional<RuleId> rule_from_name(std::string_view name) {
    for (const auto& m : k_rule_table)
        if (m.name == name) return m.id;
    return std::nullopt;
}

bool is_one_premiss(RuleId id) { return id <= RuleId::TNegNeg; }

bool is_derived(RuleId id) { return id >= RuleId::TImp2 && id != RuleId::PB; }

CatalogCounts catalog_counts() {
    CatalogCounts c{0, 0, 0, 0};
    for (const auto& m : k_rule_table) {
        if (m.id == RuleId::PB) c.branching++;
        else if (is_one_premiss(m.id)) c.one_premiss++;
        else if (is_derived(m.id)) c.derived_two_premiss++;
        else c.essential_two_premiss++;
    }
    return c;
}

std::optional<RuleApplication> apply_one_premiss(SignedFormula sf, Signature /*mode*/) {
    Shape s = shape(sf.formula);
    switch (sf.sign) {
        case Sign::F:
            switch (s.kind) {
                case Kind::Imp:
                    return RuleApplication{RuleId::FImp, sf, std::nullopt,
                                           {{Sign::T, s.left}, {Sign::F, s.right}}};
                case Kind::Or:
                    return RuleApplication{RuleId::FOr, sf, std::nullopt,
                                           {{Sign::F, s.left}, {Sign::F, s.right}}};
                case Kind::Neg:
                    return RuleApplication{RuleId::FNeg, sf, std::nullopt, {{Sign::T, s.left}}};
                default: return std::nullopt;
            }
        case Sign::T:
            switch (s.kind) {
                case Kind::And:
                    return RuleApplication{RuleId::TAnd, sf, std::nullopt,
                                           {{Sign::T, s.left}, {Sign::T, s.right}}};
                case Kind::Neg: {
                    Shape inner = shape(s.left);
                    if (inner.kind == Kind::Neg)
                        return RuleApplication{RuleId::TNegNeg, sf, std::nullopt,
                                               {{Sign::T, inner.left}}};
                    return std::nullopt;
                }
                default: return std::nullopt;
            }
    }
    return std::nullopt;
}

std::vector<MinorTarget> minor_targets(SignedFormula main, Signature mode, bool with_derived) {
    std::vector<MinorTarget> out;
    Shape s = shape(main.formula);

    if (main.sign == Sign::T && s.kind == Kind::Imp) {
        out.push_back({RuleId::TImp1, {Sign::T, s.left}, s.left});
        if (with_derived) out.push_back({RuleId::TImp2, {Sign::F, s.right}, s.right});
        return out;
    }
    if (main.sign == Sign::F && s.kind == Kind::And) {
        out.push_back({RuleId::FAnd1, {Sign::T, s.left}, s.left});
        if (with_derived) out.push_back({RuleId::FAnd2, {Sign::T, s.right}, s.right});
        return out;
    }
    if (main.sign == Sign::T && s.kind == Kind::Or) {
        out.push_back({RuleId::TOr1, {Sign::F, s.left}, s.left});
        if (with_derived) out.push_back({RuleId::TOr2, {Sign::F, s.right}, s.right});
        return out;
    }

    if (auto inner = cons_shape(main.formula)) {
        if (main.sign == Sign::T) {
            FormulaId neg_inner = mk_neg(*inner);
            out.push_back({RuleId::TNegCons, {Sign::T, neg_inner}, neg_inner});
            return out;
        }
        // F @(A # B): the minors are consistency witnesses for the
        // components — not subformulas of the main premiss.
        Shape comp = shape(*inner);
        if (comp.kind == Kind::And || comp.kind == Kind::Or || comp.kind == Kind::Imp) {
            FormulaId ca = mk_cons_in(comp.left, mode);
            FormulaId cb = mk_cons_in(comp.right, mode);
            out.push_back({cons_rule(comp.kind, false), {Sign::T, ca}, ca});
            if (with_derived) out.push_back({cons_rule(comp.kind, true), {Sign::T, cb}, cb});
        }
    }
    return out;
}

std::optional<RuleApplication> apply_two_premiss(SignedFormula main, SignedFormula minor,
                                                 Signature mode, bool with_derived) {
    Shape s = shape(main.formula);
    auto minor_is = [&](SignedFormula want) { return minor == want; };

    if (main.sign == Sign::T && s.kind == Kind::Imp) {
        if (minor_is({Sign::T, s.left}))
            return RuleApplication{RuleId::TImp1, main, minor, {{Sign::T, s.right}}};
        if (with_derived && minor_is({Sign::F, s.right}))
            return RuleApplication{RuleId::TImp2, main, minor, {{Sign::F, s.left}}};
        return std::nullopt;
    }
    if (main.sign == Sign::F && s.kind == Kind::And) {
        if (minor_is({Sign::T, s.left}))
            return RuleApplication{RuleId::FAnd1, main, minor, {{Sign::F, s.right}}};
        if (with_derived && minor_is({Sign::T, s.right}))
            return RuleApplication{RuleId::FAnd2, main, minor, {{Sign::F, s.left}}};
        return std::nullopt;
    }
    if (main.sign == Sign::T && s.kind == Kind::Or) {
        if (minor_is({Sign::F, s.left}))
            return RuleApplication{RuleId::TOr1, main, minor, {{Sign::T, s.right}}};
        if (with_derived && minor_is({Sign::F, s.right}))
            return RuleApplication{RuleId::TOr2, main, minor, {{Sign::T, s.left}}};
        return std::nullopt;
    }

    if (auto inner = cons_shape(main.formula)) {
        if (main.sign == Sign::T) {
            if (minor_is({Sign::T, mk_neg(*inner)}))
                return RuleApplication{RuleId::TNegCons, main, minor, {{Sign::F, *inner}}};
            return std::nullopt;
        }
        Shape comp = shape(*inner);
        if (comp.kind == Kind::And || comp.kind == Kind::Or || comp.kind == Kind::Imp) {
            FormulaId ca = mk_cons_in(comp.left, mode);
            FormulaId cb = mk_cons_in(comp.right, mode);
            if (minor_is({Sign::T, ca}))
                return RuleApplication{cons_rule(comp.kind, false), main, minor, {{Sign::F, cb}}};
            if (with_derived && minor_is({Sign::T, cb}))
                return RuleApplication{cons_rule(comp.kind, true), main, minor, {{Sign::F, ca}}};
        }
    }
    return std::nullopt;
}

}  // namespace c1ke
