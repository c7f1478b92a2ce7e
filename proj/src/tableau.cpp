#include "c1ke/tableau.hpp"

#include <algorithm>
#include <cassert>

namespace c1ke {

std::size_t ProofStats::total_rule_applications() const {
    std::size_t n = 0;
    for (const auto& [rule, count] : rule_applications) n += count;
    return n;
}

// ── Tableau ─────────────────────────────────────────────────────────────────

int Tableau::add_node(TreeNode n, int parent) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(n));
    if (parent >= 0) nodes[parent].children.push_back(id);
    return id;
}

std::size_t Tableau::count_kind(TreeNodeKind k) const {
    std::size_t n = 0;
    for (const auto& node : nodes)
        if (node.kind == k) ++n;
    return n;
}

bool Tableau::all_leaves_closed() const {
    if (nodes.empty()) return false;
    for (const auto& node : nodes)
        if (node.children.empty() && node.kind != TreeNodeKind::Closure) return false;
    return true;
}

int Branch::position_of(SignedFormula sf) const {
    auto it = index.find(sf.key());
    return it == index.end() ? -1 : it->second;
}

// ── Prover ──────────────────────────────────────────────────────────────────

Prover::Prover(StrategyConfig cfg) : cfg_(cfg) {
    // Catalog sanity: 5 one-premiss, 7 essential two-premiss, 6 derived
    // two-premiss, 1 branching rule.
    CatalogCounts c = catalog_counts();
    if (c.one_premiss != 5 || c.essential_two_premiss != 7 || c.derived_two_premiss != 6 ||
        c.branching != 1)
        throw std::logic_error("C1 KE rule catalog is out of shape");
    if (cfg_.node_limit == 0) throw std::invalid_argument("node_limit must be positive");
}

void Prover::check_time() {
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_)
        throw TimeLimitExceeded(stats_);
}

bool Prover::add_conclusion(Branch& b, SignedFormula sf, std::optional<RuleId> rule,
                            std::vector<int> premiss_refs) {
    if (b.contains(sf)) return false;
    if (stats_.formula_nodes >= cfg_.node_limit) throw NodeLimitExceeded(stats_);

    TreeNode node;
    node.kind = TreeNodeKind::Formula;
    node.sf = sf;
    node.rule = rule;
    node.premiss_refs = std::move(premiss_refs);
    int id = tree_.add_node(std::move(node), b.attach);
    b.attach = id;
    ++stats_.formula_nodes;

    int pos = static_cast<int>(b.entries.size());
    b.entries.push_back(BranchEntry{sf, id});
    b.index.emplace(sf.key(), pos);

    int conj = b.position_of(conjugate(sf));
    if (conj >= 0) {
        b.closed = true;
        b.closing_pair[0] = conj;
        b.closing_pair[1] = pos;
        TreeNode mark;
        mark.kind = TreeNodeKind::Closure;
        mark.premiss_refs = {b.entries[conj].tree_node, id};
        tree_.add_node(std::move(mark), b.attach);
    }
    return true;
}

bool Prover::fire(Branch& b, const RuleApplication& app, int main_pos, int minor_pos) {
    assert(!is_one_premiss(app.rule) || minor_pos < 0);
    // A two-premiss minor must be strictly smaller than its main.
    assert(minor_pos < 0 || size(app.minor->formula) < size(app.main.formula));

    ++stats_.rule_applications[app.rule];
    log_.push_back(app);
    if (is_one_premiss(app.rule)) b.entries[main_pos].analysed_one = true;
    else b.entries[main_pos].analysed_two = true;

    std::vector<int> refs{b.entries[main_pos].tree_node};
    if (minor_pos >= 0) refs.push_back(b.entries[minor_pos].tree_node);

    bool added = false;
    for (SignedFormula sf : app.conclusions) {
        added |= add_conclusion(b, sf, app.rule, refs);
        if (b.closed) break;
    }
    return added;
}

Branch Prover::init_tableau(const Sequent& s) {
    Branch b;
    auto as_mode = [&](FormulaId f) {
        return cfg_.signature_mode == Signature::Sigma ? expansion(f) : f;
    };
    for (FormulaId p : s.premises) {
        if (b.closed) break;
        add_conclusion(b, {Sign::T, as_mode(p)}, std::nullopt, {});
    }
    if (!b.closed) add_conclusion(b, {Sign::F, as_mode(s.conclusion)}, std::nullopt, {});
    return b;
}

std::vector<RuleApplication> Prover::saturate_linear(Branch& b) {
    std::vector<RuleApplication> trace;

    auto one_premiss_pass = [&]() {
        // The entry list grows while we scan it; new conclusions are
        // decomposed in FIFO order within the same pass.
        for (std::size_t i = 0; i < b.entries.size() && !b.closed; ++i) {
            BranchEntry& e = b.entries[i];
            if (e.analysed_one) continue;
            auto app = apply_one_premiss(e.sf, cfg_.signature_mode);
            if (!app) {
                e.analysed_one = true;  // heads no one-premiss rule; skip next time
                continue;
            }
            fire(b, *app, static_cast<int>(i), -1);
            trace.push_back(*app);
        }
    };

    while (!b.closed) {
        check_time();
        one_premiss_pass();
        if (b.closed) break;

        // First fireable two-premiss rule, scanning mains in entry order.
        bool fired = false;
        for (std::size_t i = 0; i < b.entries.size() && !fired; ++i) {
            if (b.entries[i].analysed_two) continue;
            for (const MinorTarget& t :
                 minor_targets(b.entries[i].sf, cfg_.signature_mode, cfg_.use_derived_rules)) {
                int minor_pos = b.position_of(t.minor);
                if (minor_pos < 0) continue;
                auto app = apply_two_premiss(b.entries[i].sf, t.minor, cfg_.signature_mode,
                                             cfg_.use_derived_rules);
                if (!app) continue;
                fire(b, *app, static_cast<int>(i), minor_pos);
                trace.push_back(*app);
                fired = true;
                break;
            }
        }
        if (!fired) break;  // linearly saturated
    }
    return trace;
}

std::optional<PbChoice> Prover::select_pb(const Branch& b) {
    std::optional<PbChoice> best;
    std::uint32_t best_size = 0;
    auto undecided = [&](FormulaId f) {
        return !b.contains({Sign::T, f}) && !b.contains({Sign::F, f});
    };

    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        const BranchEntry& e = b.entries[i];
        if (e.analysed_two) continue;
        if (kind(expansion(e.sf.formula)) == Kind::Atom) continue;
        for (const MinorTarget& t :
             minor_targets(e.sf, cfg_.signature_mode, cfg_.use_derived_rules)) {
            // If either side of the split were already present, the linear
            // phase would have fired (or the rule is moot).
            if (!undecided(t.pb_formula)) continue;
            std::uint32_t sz = size(t.pb_formula);
            if (!best || sz < best_size) {
                best = PbChoice{static_cast<int>(i), t.rule, t.minor, t.pb_formula};
                best_size = sz;
            }
        }
    }
    if (best) return best;

    // Second tier: split on an undecided consistency witness @W of an
    // inconsistency pair {T W, T ~W}.  T @W closes against T ~W via
    // t_neg_cons; F @W drives the F@ rules.
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        const BranchEntry& e = b.entries[i];
        if (e.sf.sign != Sign::T) continue;
        auto witness = universe_cons_witnesses_.find(expansion(e.sf.formula));
        if (witness == universe_cons_witnesses_.end()) continue;
        SignedFormula negated{Sign::T, mk_neg(e.sf.formula)};
        if (!b.contains(negated)) continue;
        FormulaId pb = witness->second;
        if (!undecided(pb)) continue;
        std::uint32_t sz = size(pb);
        if (!best || sz < best_size) {
            best = PbChoice{static_cast<int>(i), RuleId::TNegCons, negated, pb};
            best_size = sz;
        }
    }
    return best;
}

ProofResult Prover::prove(const Sequent& s) {
    auto started = std::chrono::steady_clock::now();
    tree_ = Tableau{};
    stats_ = ProofStats{};
    log_.clear();
    has_deadline_ = cfg_.time_limit.has_value();
    if (has_deadline_) deadline_ = started + *cfg_.time_limit;

    universe_cons_witnesses_.clear();
    try {
        for (FormulaId f : cons_closure_universe(s, 1u << 20)) {
            auto w = cons_shape(f);
            if (!w) continue;
            Kind k = kind(expansion(*w));
            if (k == Kind::And || k == Kind::Or || k == Kind::Imp)
                universe_cons_witnesses_.emplace(
                    expansion(*w), mk_cons_in(expansion(*w), cfg_.signature_mode));
        }
    } catch (const UniverseLimitExceeded&) {
        // Pathological closure; the node and time limits still bound the run.
        universe_cons_witnesses_.clear();
    }

    auto finish = [&](Verdict v, std::optional<Branch> open) {
        stats_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - started);
        stats_.branches = stats_.pb_applications + 1;
        return ProofResult{v, std::move(tree_), std::move(open), stats_};
    };

    Branch current = init_tableau(s);
    std::vector<Branch> open_stack;

    while (true) {
        if (!current.closed) saturate_linear(current);

        if (current.closed) {
            if (open_stack.empty()) return finish(Verdict::Closed, std::nullopt);
            current = std::move(open_stack.back());
            open_stack.pop_back();
            continue;
        }

        std::optional<PbChoice> pb = select_pb(current);
        if (!pb) {
            current.saturation_certified = true;
            return finish(Verdict::Open, std::move(current));
        }

        ++stats_.pb_applications;
        stats_.branches = stats_.pb_applications + 1;
        TreeNode split;
        split.kind = TreeNodeKind::Split;
        split.pb_formula = pb->pb_formula;
        int split_id = tree_.add_node(std::move(split), current.attach);

        Branch right = current;  // inherits entries and analysed flags
        right.attach = split_id;
        current.attach = split_id;

        add_conclusion(current, {Sign::T, pb->pb_formula}, RuleId::PB, {});
        ++stats_.rule_applications[RuleId::PB];
        add_conclusion(right, {Sign::F, pb->pb_formula}, RuleId::PB, {});

        open_stack.push_back(std::move(right));
        stats_.peak_open_stack = std::max(stats_.peak_open_stack, open_stack.size());

        // The split exists to enable a two-premiss rule; fire it up front
        // when the left side supplies the minor premiss.
        if (!current.closed && pb->minor.sign == Sign::T) {
            int main_pos = pb->candidate_pos;
            int minor_pos = current.position_of(pb->minor);
            if (minor_pos >= 0 && !current.entries[main_pos].analysed_two) {
                auto app = apply_two_premiss(current.entries[main_pos].sf, pb->minor,
                                             cfg_.signature_mode, cfg_.use_derived_rules);
                if (app) fire(current, *app, main_pos, minor_pos);
            }
        }
    }
}

ProofResult prove(const Sequent& s, const StrategyConfig& cfg) {
    Prover p(cfg);
    return p.prove(s);
}

ValuationAssignment extract_countermodel(const Branch& b) {
    if (b.closed || !b.saturation_certified) throw NotSaturated();
    ValuationAssignment a;
    for (const BranchEntry& e : b.entries)
        a.set(e.sf.formula, e.sf.sign == Sign::T);
    sort_by_digest(a.domain);
    return a;
}

}  // namespace c1ke
