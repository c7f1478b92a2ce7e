// ============================================================================
// c1ke/tableau.hpp — branches, proof trees, and the Simple Strategy
// ============================================================================
//
// The proof search keeps one current branch plus a stack of open branches.
// Each round:
//
//   1. saturate the current branch under all linear rules — one-premiss
//      rules first, then two-premiss rules, FIFO over entry positions;
//   2. if the branch closed (it contains T A and F A for some A), pop the
//      next open branch off the stack; when the stack is empty the tableau
//      is closed;
//   3. otherwise pick a PB split: an unanalysed non-atomic entry that can
//      head a two-premiss rule, whose needed minor premiss (the PB formula)
//      is not yet decided in the branch.  The left branch receives
//      T pb_formula and stays current; the right branch receives
//      F pb_formula and is pushed.  If no candidate exists, the branch is
//      saturated and PB-exhausted and the tableau is open.
//
// A signed formula fires its one-premiss rule at most once per branch, and
// serves as two-premiss main at most once per branch; both flags are
// inherited by child branches at a split.  PB candidates are ordered by
// smallest PB formula, tie-broken by entry position.
//
// When no minor-target split remains, a second candidate tier keeps the
// search complete: for an inconsistency pair {T W, T ~W} with compound W
// whose witness @W lies in the sequent's closure universe and is still
// undecided, the branch splits on @W.  The T @W side closes at once
// (t_neg_cons against T ~W); the F @W side makes the consistency refutation
// explicit so the F@ rules can fire.  Without this tier a valid sequent can
// stall with the @-fact buried under a negation, e.g. ~@(Q -> Q & P) |- Q.
//
// ============================================================================

#ifndef C1KE_TABLEAU_HPP
#define C1KE_TABLEAU_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "c1ke/calculus.hpp"
#include "c1ke/formula.hpp"
#include "c1ke/valuation.hpp"

namespace c1ke {

enum class PbSelection : std::uint8_t { SmallestFormulaFirst };

struct StrategyConfig {
    Signature signature_mode = Signature::SigmaCirc;
    bool use_derived_rules = true;
    PbSelection pb_selection = PbSelection::SmallestFormulaFirst;
    std::size_t node_limit = 1'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct ProofStats {
    std::size_t formula_nodes = 0;
    std::size_t branches = 1;
    std::size_t pb_applications = 0;
    std::map<RuleId, std::size_t> rule_applications;
    std::chrono::microseconds elapsed{0};
    std::size_t peak_open_stack = 0;

    std::size_t total_rule_applications() const;
};

struct NodeLimitExceeded : std::runtime_error {
    explicit NodeLimitExceeded(ProofStats partial)
        : std::runtime_error("node limit exceeded"), partial(std::move(partial)) {}
    ProofStats partial;
};

struct TimeLimitExceeded : std::runtime_error {
    explicit TimeLimitExceeded(ProofStats partial)
        : std::runtime_error("time limit exceeded"), partial(std::move(partial)) {}
    ProofStats partial;
};

struct NotSaturated : std::runtime_error {
    NotSaturated() : std::runtime_error("branch is not a saturated open branch") {}
};

// ── proof tree ──────────────────────────────────────────────────────────────

enum class TreeNodeKind : std::uint8_t { Formula, Split, Closure };

struct TreeNode {
    TreeNodeKind kind;
    // Formula nodes
    SignedFormula sf{Sign::T, k_no_formula};
    std::optional<RuleId> rule;           // nullopt = premise
    std::vector<int> premiss_refs;        // node ids of the justifying premisses
    // Split nodes
    FormulaId pb_formula = k_no_formula;
    std::vector<int> children;
};

struct Tableau {
    std::vector<TreeNode> nodes;  // id = index; 0 is the first premise (or root)

    int add_node(TreeNode n, int parent);
    std::size_t count_kind(TreeNodeKind k) const;
    bool all_leaves_closed() const;
};

// ── branches ────────────────────────────────────────────────────────────────

struct BranchEntry {
    SignedFormula sf;
    int tree_node = -1;
    bool analysed_one = false;  // fired its one-premiss rule
    bool analysed_two = false;  // served as two-premiss main
};

struct Branch {
    std::vector<BranchEntry> entries;
    std::unordered_map<std::uint64_t, int> index;  // SignedFormula::key -> entry position
    bool closed = false;
    int closing_pair[2] = {-1, -1};  // entry positions of {T A, F A}
    int attach = -1;                 // tree node new formulas hang under
    bool saturation_certified = false;

    bool contains(SignedFormula sf) const { return index.count(sf.key()) != 0; }
    int position_of(SignedFormula sf) const;
};

// ── results ─────────────────────────────────────────────────────────────────

enum class Verdict : std::uint8_t { Closed, Open };

struct ProofResult {
    Verdict verdict;
    Tableau tableau;
    std::optional<Branch> open_branch;  // saturated and PB-exhausted when Open
    ProofStats stats;
};

struct PbChoice {
    int candidate_pos;      // entry position of the motivating main premiss
    RuleId rule;            // the two-premiss rule the split enables
    SignedFormula minor;    // the minor premiss that rule needs
    FormulaId pb_formula;
};

// ── prover ──────────────────────────────────────────────────────────────────

class Prover {
  public:
    explicit Prover(StrategyConfig cfg = {});

    const StrategyConfig& config() const { return cfg_; }

    // T premise_1 ... T premise_n, F conclusion, in order.  Under Sigma the
    // formulas are pre-expanded.  Duplicates collapse; an immediate
    // conjugate pair closes the branch on the spot.
    Branch init_tableau(const Sequent& s);

    // Applies linear rules until none fires or the branch closes; returns
    // the applications in firing order.
    std::vector<RuleApplication> saturate_linear(Branch& b);

    // The PB candidate the strategy would split on, if any.  Requires b to
    // be linearly saturated and not closed.
    std::optional<PbChoice> select_pb(const Branch& b);

    ProofResult prove(const Sequent& s);

    const Tableau& tableau() const { return tree_; }
    const ProofStats& stats() const { return stats_; }

    // Every rule application fired during the last run, including ones all
    // of whose conclusions were already present.
    const std::vector<RuleApplication>& application_log() const { return log_; }

  private:
    friend ProofResult prove(const Sequent&, const StrategyConfig&);

    bool add_conclusion(Branch& b, SignedFormula sf, std::optional<RuleId> rule,
                        std::vector<int> premiss_refs);
    bool fire(Branch& b, const RuleApplication& app, int main_pos, int minor_pos);
    void check_time();

    StrategyConfig cfg_;
    Tableau tree_;
    ProofStats stats_;
    std::vector<RuleApplication> log_;
    // expansions of compound formulas whose consistency witness lives in the
    // sequent's closure universe (the second PB tier draws from these)
    std::unordered_map<FormulaId, FormulaId> universe_cons_witnesses_;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

ProofResult prove(const Sequent& s, const StrategyConfig& cfg = {});

// Reads the countermodel off an open branch: 1 for each T entry, 0 for each
// F entry.  The branch must be an engine-produced saturated, PB-exhausted
// open branch; anything else throws NotSaturated.
ValuationAssignment extract_countermodel(const Branch& b);

}  // namespace c1ke

#endif  // C1KE_TABLEAU_HPP
