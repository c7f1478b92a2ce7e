// ============================================================================
// c1ke/calculus.hpp — the C1 KE rule catalog
// ============================================================================
//
// Signed formulas T A / F A and the rules that eliminate them.  The catalog:
//
//   one-premiss (5):
//     F(A -> B)  |-  T A, F B          (f_imp)
//     T(A & B)   |-  T A, T B          (t_and)
//     F(A | B)   |-  F A, F B          (f_or)
//     F ~A       |-  T A               (f_neg)
//     T ~~A      |-  T A               (t_neg_neg)
//
//   essential two-premiss (7), main premiss first:
//     T(A -> B), T A   |-  T B         (t_imp_1)
//     F(A & B),  T A   |-  F B         (f_and_1)
//     T(A | B),  F A   |-  T B         (t_or_1)
//     T @A,      T ~A  |-  F A         (t_neg_cons)
//     F @(A # B), T @A |-  F @B        (f_cons_{and,or,imp}_1)  for # in {&,|,->}
//
//   derived two-premiss (6):
//     T(A -> B), F B   |-  F A         (t_imp_2)
//     F(A & B),  T B   |-  F A         (f_and_2)
//     T(A | B),  F B   |-  T A         (t_or_2)
//     F @(A # B), T @B |-  F @A        (f_cons_{and,or,imp}_2)
//
//   branching (1):
//     PB — split a branch into T A | F A for a chosen formula A.
//
// All @-sided patterns go through cons_shape, so a premiss written as
// ~(A & ~A) matches exactly like one written as @A.  In every two-premiss
// rule the minor premiss is strictly smaller than the main premiss.
//
// ============================================================================

#ifndef C1KE_CALCULUS_HPP
#define C1KE_CALCULUS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "c1ke/formula.hpp"
#include "c1ke/syntax.hpp"

namespace c1ke {

enum class Sign : std::uint8_t { T, F };

inline Sign flipped(Sign s) { return s == Sign::T ? Sign::F : Sign::T; }

struct SignedFormula {
    Sign sign;
    FormulaId formula;

    // Identity is (sign, expansion): T @P and T ~(P & ~P) are the same
    // signed formula.
    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(expansion(formula)) << 1) |
               static_cast<std::uint64_t>(sign);
    }
    bool operator==(const SignedFormula& o) const { return key() == o.key(); }
};

inline SignedFormula conjugate(SignedFormula sf) { return {flipped(sf.sign), sf.formula}; }

std::string print_signed(SignedFormula sf, PrintStyle style = PrintStyle::Ascii);

enum class RuleId : std::uint8_t {
    // one-premiss
    FImp, TAnd, FOr, FNeg, TNegNeg,
    // essential two-premiss
    TImp1, FAnd1, TOr1, TNegCons, FConsAnd1, FConsOr1, FConsImp1,
    // derived two-premiss
    TImp2, FAnd2, TOr2, FConsAnd2, FConsOr2, FConsImp2,
    // branching
    PB,
};

// Stable serialization names: "f_imp", "t_neg_cons", "f_cons_and_2", "pb", ...
std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);

bool is_one_premiss(RuleId id);
bool is_derived(RuleId id);

struct CatalogCounts {
    int one_premiss;
    int essential_two_premiss;
    int derived_two_premiss;
    int branching;
};

// 5 / 7 / 6 / 1; verified against the rule table at engine startup.
CatalogCounts catalog_counts();

struct RuleApplication {
    RuleId rule;
    SignedFormula main;
    std::optional<SignedFormula> minor;
    std::vector<SignedFormula> conclusions;
};

// The unique one-premiss rule whose premiss shape sf fits, if any.
// T ~~A matches only t_neg_neg; a plain T ~A heads no one-premiss rule.
std::optional<RuleApplication> apply_one_premiss(SignedFormula sf,
                                                 Signature mode = Signature::SigmaCirc);

// The two-premiss rule with main premiss `main` and minor premiss `minor`,
// if the pair fits one.  Essential rules are tried before derived ones;
// derived rules are skipped when with_derived is false.
std::optional<RuleApplication> apply_two_premiss(SignedFormula main, SignedFormula minor,
                                                 Signature mode = Signature::SigmaCirc,
                                                 bool with_derived = true);

struct MinorTarget {
    RuleId rule;
    SignedFormula minor;    // the exact minor signed formula the rule needs
    FormulaId pb_formula;   // the unsigned formula whose T/F split enables it
};

// Every two-premiss rule for which `main` fits the main-premiss slot.
// Empty for atoms and for shapes heading no two-premiss rule.
std::vector<MinorTarget> minor_targets(SignedFormula main,
                                       Signature mode = Signature::SigmaCirc,
                                       bool with_derived = true);

}  // namespace c1ke

#endif  // C1KE_CALCULUS_HPP
