// ============================================================================
// c1ke/families.hpp — benchmark problem families
// ============================================================================
//
// Two indexed families of valid sequents plus a small medical knowledge-base
// fixture set.
//
//   phi5(n): closing the tableau requires the T ~~ rule.
//
//       @A1,
//       /\_{i=1..n} A_i,
//       /\_{i=1..n} ( A_{n+1} -> ((A_i | B_i) -> @A_{i+1}) ),
//       ( /\_{i=1..n} @A_i ) -> ~A_{n+1}
//       |-  ~~~A_{n+1}
//
//   phi6(n): closing the tableau requires a rule with @ heading the main
//   premiss (f_cons_*_1 or f_cons_*_2).
//
//       /\ B_i,  /\ @C_i,  /\ ( (A_i | B_i) -> @A_{i+1} ),
//       ( /\ C_i ) -> (D & ~C1)
//       |-  ( \/_{i=1..n} @(A_{i+1} -> C_i) ) | D
//
// Iterated conjunctions and disjunctions nest to the right, matching the
// parser's associativity.
//
// The medical fixtures model diagnosing diseases K, L, M from symptoms N, O
// under the rules K -> ~L, L -> ~K, K -> M, N -> K, O -> L; case 3 is the
// classic non-valid query, the others are valid.
//
// ============================================================================

#ifndef C1KE_FAMILIES_HPP
#define C1KE_FAMILIES_HPP

#include <string>
#include <vector>

#include "c1ke/formula.hpp"

namespace c1ke {

enum class Family : std::uint8_t { Phi5, Phi6, Medical };

std::string_view family_name(Family f);

struct ProblemInstance {
    Family family;
    int index = 1;  // n for phi families, case number 1..4 for medical
    Sequent sequent;
    bool expected_valid = true;

    std::string id() const;  // "phi5_3", "medical_1", ...
};

ProblemInstance gen_phi5(int n);
ProblemInstance gen_phi6(int n);
std::vector<ProblemInstance> medical_cases();

}  // namespace c1ke

#endif  // C1KE_FAMILIES_HPP
