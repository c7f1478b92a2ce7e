// ============================================================================
// c1ke/valuation.hpp — partial 0/1 assignments and the C1 valuation clauses
// ============================================================================

#ifndef C1KE_VALUATION_HPP
#define C1KE_VALUATION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "c1ke/formula.hpp"

namespace c1ke {

// A total 0/1 map over a finite, Cons-expanded formula domain.  Admissibility
// against the C1 clauses is a checked property, not guaranteed by
// construction.
struct ValuationAssignment {
    std::vector<FormulaId> domain;  // expanded ids, digest-sorted
    std::unordered_map<FormulaId, bool> values;

    void set(FormulaId f, bool v);
    std::optional<bool> value(FormulaId f) const;
    bool contains(FormulaId f) const { return values.count(expansion(f)) != 0; }
};

// Sorts by digest, tie-broken structurally via the printed form.
void sort_by_digest(std::vector<FormulaId>& formulas);

struct AdmissibilityReport {
    bool admissible = true;
    std::string violated_clause;   // empty when admissible
    FormulaId at = k_no_formula;   // the formula whose clause instance failed

    explicit operator bool() const { return admissible; }
};

// Checks every clause instance all of whose mentioned formulas lie in the
// domain:
//   v(a & b)=1  iff  v(a)=1 and v(b)=1        (likewise | and ->)
//   v(~a)=0     implies  v(a)=1
//   v(~~a)=1    implies  v(a)=1
//   v(@a)=1     implies  v(a)=0 or v(~a)=0
//   v(@(a#b))=0 implies  v(@a)=0 or v(@b)=0,  # in {&,|,->}
// Returns the first violation in domain order for diagnostics.
AdmissibilityReport admissible(const ValuationAssignment& a);

}  // namespace c1ke

#endif  // C1KE_VALUATION_HPP
