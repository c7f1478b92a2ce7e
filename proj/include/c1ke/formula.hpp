// ============================================================================
// c1ke/formula.hpp — interned formula DAG for the C1 language
// ============================================================================
//
// Every formula is a node in a process-wide interned DAG.  Two structurally
// identical formulas share the same FormulaId, so equality is an integer
// comparison.  Node kinds:
//
//     Atom  : propositional variable (identifier)
//     Neg   : negation, child
//     And   : conjunction, left & right
//     Or    : disjunction, left | right
//     Imp   : implication, left -> right
//     Cons  : consistency operator, child ("@A" in ASCII syntax)
//
// Cons is an abbreviation, not a primitive: @A stands for ~(A & ~A).  Each
// node caches the id of its fully expanded form (no Cons nodes remain), and
// *all* logical bookkeeping — equality, closure detection, valuation keys —
// runs on the expanded form.  Folding ~(X & ~X) back to @X is print-layer
// sugar only; expansion is the canonical representative because inner folds
// can destroy outer redexes.
//
// The interner is append-only: ids are never invalidated, node payloads are
// immutable, readers need no synchronization, and writers are serialized.
//
// ============================================================================

#ifndef C1KE_FORMULA_HPP
#define C1KE_FORMULA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace c1ke {

using FormulaId = std::uint32_t;
inline constexpr FormulaId k_no_formula = static_cast<FormulaId>(-1);

enum class Kind : std::uint8_t { Atom, Neg, And, Or, Imp, Cons };

// Which representation a proof run works with.  SigmaCirc keeps @ nodes as
// given and recognizes ~(A & ~A) shapes on the fly; Sigma expands every
// formula up front.  The choice affects matching bookkeeping and printing,
// never verdicts.
enum class Signature : std::uint8_t { Sigma, SigmaCirc };

// ── constructors ────────────────────────────────────────────────────────────

// Atom names follow [A-Za-z][A-Za-z0-9_]*; anything else throws.
FormulaId mk_atom(std::string_view name);
FormulaId mk_neg(FormulaId a);
FormulaId mk_and(FormulaId a, FormulaId b);
FormulaId mk_or(FormulaId a, FormulaId b);
FormulaId mk_imp(FormulaId a, FormulaId b);
FormulaId mk_cons(FormulaId a);

// ── accessors ───────────────────────────────────────────────────────────────

Kind kind(FormulaId f);
FormulaId left(FormulaId f);   // unary child for Neg/Cons
FormulaId right(FormulaId f);  // binary right child
std::string_view atom_name(FormulaId f);

// Id of the Cons-free expansion of f (f itself when already Cons-free).
FormulaId expansion(FormulaId f);

// Structural 64-bit hash of the expanded form.  digest(f) == digest(g) iff
// expansion(f) and expansion(g) are node-identical.
std::uint64_t digest(FormulaId f);

// Size of the expanded form: 1 for atoms, 1 + child sizes otherwise.
// s(@A) = 2*s(A) + 3.
std::uint32_t size(FormulaId f);

// Connective-counting size where Cons counts as an ordinary unary
// connective (reporting only; never used by the calculus).
std::uint32_t folded_size(FormulaId f);

inline bool same_formula(FormulaId a, FormulaId b) {
    return expansion(a) == expansion(b);
}

// The root constructor of the expansion, with presentation-level children:
// a Cons node reads as Neg over And without losing the sugar inside.
struct Shape {
    Kind kind;  // never Cons
    FormulaId left = k_no_formula;
    FormulaId right = k_no_formula;
};
Shape shape(FormulaId f);

// Recognizes the consistency shape: returns X when f is @X or has the
// expanded form ~(X & ~X); empty otherwise.
std::optional<FormulaId> cons_shape(FormulaId f);

// @A in the requested representation: a Cons node under SigmaCirc, the
// expansion under Sigma.  Either way the digest is that of ~(A & ~A).
FormulaId mk_cons_in(FormulaId a, Signature mode);

// ── derived sets ────────────────────────────────────────────────────────────

// Reflexive-transitive subterm closure of expansion(f), in first-visit
// (preorder) order.
std::vector<FormulaId> subformulas(FormulaId f);

struct Sequent {
    std::vector<FormulaId> premises;
    FormulaId conclusion = k_no_formula;
};

struct UniverseLimitExceeded : std::runtime_error {
    explicit UniverseLimitExceeded(std::size_t cap)
        : std::runtime_error("formula universe exceeds cap of " + std::to_string(cap)),
          cap(cap) {}
    std::size_t cap;
};

// The finite formula universe of a sequent: expansions of all sequent
// formulas, closed under subterms, plus the consistency witnesses @a and @b
// for every member of shape ~((a # b) & ~(a # b)) with binary #.  This is
// exactly the set of formulas any tableau rule can introduce for the
// sequent.  Throws UniverseLimitExceeded when the set would grow past cap.
std::vector<FormulaId> cons_closure_universe(const Sequent& s, std::size_t cap = 1u << 16);

// Number of interned nodes (diagnostics).
std::size_t interner_size();

}  // namespace c1ke

#endif  // C1KE_FORMULA_HPP
