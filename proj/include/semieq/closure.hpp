#ifndef SEMIEQ_CLOSURE_HPP_
#define SEMIEQ_CLOSURE_HPP_

#include <string>
#include <vector>

#include "semieq/classes.hpp"
#include "semieq/corpus.hpp"
#include "semieq/eval.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

/// Smallest congruence identifying a and b: union-find seeded with the
/// pair and closed under left/right translation until fixpoint.
Congruence principal_congruence(const FiniteSemigroup& s, element a, element b);

/// Join (as equivalences) of two congruences; again a congruence.
Congruence join(const Congruence& c1, const Congruence& c2);

/// Every congruence, as the join closure of the principal ones plus the
/// identity.  Throws OrderCapExceeded above the cap (the congruence count
/// explodes combinatorially).
std::vector<Congruence> all_congruences(const FiniteSemigroup& s, element order_cap = 7);

/// Membership predicate used by the closure suites: the structural oracle
/// or the evaluated equational basis.
enum class MembershipMode { Oracle, Basis };

struct ClosureOptions {
  MembershipMode mode = MembershipMode::Oracle;
  element congruence_cap = 7;
  element member_order_cap = 0;  // 0 = no restriction
  EvalOptions eval;
};

struct ClosureViolation {
  std::string description;
};

struct ClosureResult {
  std::vector<ClosureViolation> violations;
  std::vector<std::string> skipped;  // over caps or budget; recorded, not fatal
};

/// For every corpus member in the class and every congruence, checks that
/// the quotient stays in the class.
ClosureResult closed_under_H(const std::string& class_id, const Corpus& corpus,
                             const ClosureOptions& opts = {});

/// For every pair of corpus members in the class, checks that the direct
/// product stays in the class.
ClosureResult closed_under_P(const std::string& class_id, const Corpus& corpus,
                             const ClosureOptions& opts = {});

/// Product-closure of the bare maximum-ideal-class condition over the
/// corpus.  Unlike the catalogued maxj class this condition is not
/// product-closed; the two-element null semigroup squared is the
/// documented witness.
ClosureResult maxj_bare_condition_p_study(const Corpus& corpus,
                                          element member_order_cap = 5);

}  // namespace semieq

#endif  // SEMIEQ_CLOSURE_HPP_
