#ifndef SEMIEQ_TRANSFORMS_HPP_
#define SEMIEQ_TRANSFORMS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "semieq/eqdsl.hpp"
#include "semieq/eval.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

/// Fresh operation symbol introduced while eliminating an existential
/// variable; its arguments are the universally bound symbols in whose
/// scope that variable sat (so the arity may be 0).
struct SkolemOp {
  std::string name;
  std::vector<std::string> args;
  bool operator==(const SkolemOp&) const = default;
};

/// A word over the semigroup operation whose letters are either bound
/// symbols or applications of one of the introduced operations.
struct TermFactor {
  std::string symbol;  // set when op_index < 0
  int op_index = -1;
  bool is_op() const { return op_index >= 0; }
  bool operator==(const TermFactor&) const = default;
};

struct TermWord {
  std::vector<TermFactor> factors;
  bool operator==(const TermWord&) const = default;
};

/// Purely universal conjunction of term equalities; the output of
/// Skolemisation.
struct IdentitySystem {
  std::vector<std::string> universals;
  std::vector<SkolemOp> ops;
  std::vector<std::pair<TermWord, TermWord>> identities;
  bool operator==(const IdentitySystem&) const = default;
};

/// Eliminates existential binders leftmost-first, replacing each by a
/// fresh operation applied to the preceding universals.  The input is
/// desugared first; InG and Green atoms are rejected (UnsupportedAtom),
/// as are disjunctive matrices (DisjunctiveMatrix).
IdentitySystem skolemize(const EquationSystem& sys);

/// Header line `skolem: f/2 g/0` followed by the rendered identities.
std::string render(const IdentitySystem& ids);

/// Searches for interpretations of the introduced operations over s making
/// every identity hold, by cell-wise constraint propagation with
/// backtracking.  The result is checked against evaluate(s, sys): a
/// mismatch throws InternalCheckFailed.
bool verify_skolem(const FiniteSemigroup& s, const EquationSystem& sys,
                   const IdentitySystem& ids, const EvalOptions& opts = {});

/// The local-submonoid transform: prefixes "forall A. exists X." with the
/// conjunct X in V(A), and replaces every symbol occurrence t in the
/// matrix by A*X*t*A*X.
EquationSystem localise(const EquationSystem& sys);

/// Checks, on a regular semigroup, that s satisfies localise(sys) exactly
/// when every local subsemigroup eSe satisfies sys; returns the common
/// verdict, throwing InternalCheckFailed on disagreement and NotRegular
/// when s is not regular.
bool verify_localise(const FiniteSemigroup& s, const EquationSystem& sys,
                     const EvalOptions& opts = {});

}  // namespace semieq

#endif  // SEMIEQ_TRANSFORMS_HPP_
