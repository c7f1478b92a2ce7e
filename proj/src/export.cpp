#include "c1ke/export.hpp"

#include <sstream>

#include <json.hpp>

#include "c1ke/syntax.hpp"
#include "c1ke/valuation.hpp"

namespace c1ke {

namespace {

using nlohmann::json;

json tree_to_json(const Tableau& t, int id) {
    const TreeNode& n = t.nodes[id];
    json out;
    out["id"] = id;
    switch (n.kind) {
        case TreeNodeKind::Formula:
            out["kind"] = "formula";
            out["sign"] = n.sf.sign == Sign::T ? "T" : "F";
            out["formula"] = print_formula(n.sf.formula);
            out["rule"] = n.rule ? std::string(rule_name(*n.rule)) : "premise";
            if (!n.premiss_refs.empty()) out["premiss_refs"] = n.premiss_refs;
            break;
        case TreeNodeKind::Split:
            out["kind"] = "split";
            out["formula"] = print_formula(n.pb_formula);
            out["rule"] = rule_name(RuleId::PB);
            break;
        case TreeNodeKind::Closure:
            out["kind"] = "closure";
            out["premiss_refs"] = n.premiss_refs;
            break;
    }
    if (!n.children.empty()) {
        json kids = json::array();
        for (int c : n.children) kids.push_back(tree_to_json(t, c));
        out["children"] = std::move(kids);
    }
    return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) { return v == Verdict::Closed ? "closed" : "open"; }

std::string_view signature_name(Signature s) {
    return s == Signature::Sigma ? "sigma" : "sigma_circ";
}

std::string proof_to_json(const Sequent& s, const StrategyConfig& cfg, const ProofResult& result,
                          bool with_timings, int indent) {
    json out;
    out["schema_version"] = k_proof_schema_version;
    out["sequent"] = print_sequent(s);

    json config;
    config["mode"] = signature_name(cfg.signature_mode);
    config["use_derived_rules"] = cfg.use_derived_rules;
    config["pb_selection"] = "smallest_formula_first";
    config["node_limit"] = cfg.node_limit;
    if (cfg.time_limit) config["time_limit_ms"] = cfg.time_limit->count();
    out["config"] = std::move(config);

    out["verdict"] = verdict_name(result.verdict);

    json stats;
    stats["formula_nodes"] = result.stats.formula_nodes;
    stats["branches"] = result.stats.branches;
    stats["pb_applications"] = result.stats.pb_applications;
    stats["peak_open_stack"] = result.stats.peak_open_stack;
    json rules = json::object();
    for (const auto& [rule, count] : result.stats.rule_applications)
        rules[std::string(rule_name(rule))] = count;
    stats["rule_applications"] = std::move(rules);
    if (with_timings) stats["elapsed_ms"] = result.stats.elapsed.count() / 1000.0;
    out["stats"] = std::move(stats);

    if (!result.tableau.nodes.empty()) out["tree"] = tree_to_json(result.tableau, 0);

    if (result.open_branch) {
        ValuationAssignment counter = extract_countermodel(*result.open_branch);
        json model = json::array();
        for (FormulaId f : counter.domain) {
            json row;
            row["formula"] = print_formula(f);
            row["value"] = *counter.value(f) ? 1 : 0;
            model.push_back(std::move(row));
        }
        out["countermodel"] = std::move(model);
    }
    return out.dump(indent);
}

std::string tableau_to_dot(const Tableau& t) {
    std::ostringstream os;
    os << "digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n";
    auto escape = [](std::string s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const TreeNode& n = t.nodes[i];
        os << "  n" << i << " [label=\"";
        switch (n.kind) {
            case TreeNodeKind::Formula:
                os << escape(print_signed(n.sf));
                if (n.rule) os << "\\n(" << rule_name(*n.rule) << ")";
                break;
            case TreeNodeKind::Split:
                os << "PB " << escape(print_formula(n.pb_formula));
                break;
            case TreeNodeKind::Closure:
                os << "×";
                break;
        }
        os << "\"";
        if (n.kind == TreeNodeKind::Split) os << ", shape=diamond";
        if (n.kind == TreeNodeKind::Closure) os << ", shape=plaintext";
        os << "];\n";
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (int c : t.nodes[i].children) os << "  n" << i << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace c1ke
