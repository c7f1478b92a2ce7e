// ============================================================================
// c1ke/export.hpp — machine-readable proof output (JSON and DOT)
// ============================================================================

#ifndef C1KE_EXPORT_HPP
#define C1KE_EXPORT_HPP

#include <string>

#include "c1ke/tableau.hpp"

namespace c1ke {

inline constexpr int k_proof_schema_version = 1;

// Stable JSON proof object.  Key order and formatting are deterministic;
// wall-clock timings are included only when with_timings is set, so default
// output is byte-identical across runs.
std::string proof_to_json(const Sequent& s, const StrategyConfig& cfg, const ProofResult& result,
                          bool with_timings = false, int indent = 2);

// Graphviz export: one graph node per formula/split node, closure leaves
// labeled with an "×".
std::string tableau_to_dot(const Tableau& t);

std::string_view verdict_name(Verdict v);
std::string_view signature_name(Signature s);

}  // namespace c1ke

#endif  // C1KE_EXPORT_HPP
