// ============================================================================
// c1ke/oracle.hpp — brute-force bivaluation oracle
// ============================================================================
//
// Decides sequent validity by enumerating every admissible assignment over
// the sequent's finite closure universe.  Compound values for &, |, -> and
// for consistency shapes ~(x & ~x) are determined by their parts, so only
// atoms and the remaining negations are enumerated; the rest is propagated
// and the directional clauses are checked per assignment.
//
// "Valid" is sound for full C1 bivaluations: any bivaluation restricts to an
// admissible assignment over the universe.  An "Invalid" certificate is an
// admissible-assignment countermodel over that universe.
//
// ============================================================================

#ifndef C1KE_ORACLE_HPP
#define C1KE_ORACLE_HPP

#include <optional>

#include "c1ke/formula.hpp"
#include "c1ke/tableau.hpp"
#include "c1ke/valuation.hpp"

namespace c1ke {

struct OracleOptions {
    std::size_t universe_cap = 24;  // formulas; 2^24 assignments worst case
};

struct OracleResult {
    bool valid = false;
    // Lexicographically first admissible countermodel over the digest-sorted
    // universe, present iff not valid.
    std::optional<ValuationAssignment> certificate;
    std::vector<FormulaId> universe;  // digest-sorted
};

OracleResult oracle_verdict(const Sequent& s, const OracleOptions& opt = {});

struct AgreementReport {
    Verdict prover_verdict;
    bool oracle_valid = false;
    bool agree = false;
    // For prover-open runs: whether the extracted countermodel passes the
    // admissibility check restricted to the branch's formulas.
    std::optional<bool> countermodel_admissible;
};

AgreementReport cross_check(const Sequent& s, const StrategyConfig& cfg = {},
                            const OracleOptions& opt = {});

}  // namespace c1ke

#endif  // C1KE_ORACLE_HPP
