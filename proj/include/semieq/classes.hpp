#ifndef SEMIEQ_CLASSES_HPP_
#define SEMIEQ_CLASSES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "semieq/corpus.hpp"
#include "semieq/eqdsl.hpp"
#include "semieq/eval.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

/// One catalogued semigroup class: a structural oracle (never routed
/// through the evaluator) paired with an equational basis.  The pairing is
/// the toolkit's central cross-validation surface.
struct ClassEntry {
  std::string id;
  std::string notes;
  EquationSystem basis;
  /// True when every member of the class is a regular semigroup; these are
  /// the classes the localisation transform applies to.
  bool regular_class = false;
  /// For the deliberately weakened study entry the basis is known not to
  /// capture the oracle.
  bool weakened = false;
  std::function<bool(const FiniteSemigroup&)> oracle;
};

/// All catalogued classes, fixed order:
/// group, regular, cr, clifford, cs, ig, crypto, rightid, monoid, simple,
/// rightsimple, leftsimple, maxj, bisimple, rightgroup, id, inverse,
/// orthodox, esolid, esolid2, reg34, inv35, orth36, es37, nr.
const std::vector<ClassEntry>& catalogue();

const ClassEntry& catalogue_entry(const std::string& class_id);  // UnknownClass
bool is_catalogue_class(const std::string& class_id);

bool oracle_check(const std::string& class_id, const FiniteSemigroup& s);

struct CrossValResult {
  struct Item {
    std::string member;
    bool oracle;
    bool basis;
  };
  struct Skip {
    std::string member;
    std::uint64_t estimated_cost;
  };
  std::vector<Item> disagreements;
  std::vector<Skip> budget_skips;  // recorded, not fatal
};

/// Compares the structural oracle against the evaluated basis on every
/// corpus member.
CrossValResult cross_validate(const std::string& class_id, const Corpus& corpus,
                              const EvalOptions& opts = {});

// ---- structural helpers shared by the oracles and the suites ----

std::vector<element> idempotent_elements(const FiniteSemigroup& s);
bool idempotents_commute(const FiniteSemigroup& s);
bool idempotents_closed(const FiniteSemigroup& s);
bool idempotents_central(const FiniteSemigroup& s);
bool is_completely_regular(const FiniteSemigroup& s);
bool is_right_simple(const FiniteSemigroup& s);
bool is_left_simple(const FiniteSemigroup& s);

/// E-solid, both ways: core a union of groups, and the chain condition on
/// idempotent triples (e L f R g implies an idempotent h with e R h L g).
/// On regular input the two must agree; disagreement throws
/// InternalCheckFailed.
bool is_esolid(const FiniteSemigroup& s);
bool esolid_core_condition(const FiniteSemigroup& s);
bool esolid_solidity_condition(const FiniteSemigroup& s);

/// Maximum two-sided-ideal class conditions.  `has_max` is the bare
/// existence of a maximum class; the two refinements (collapse of the
/// complement is not a null semigroup / not a copy of the two-element null
/// semigroup) are provably equivalent and checked against each other.
struct MaxJConditions {
  bool has_max;
  bool rees_not_null;
  bool not_iso_two_null;
};
MaxJConditions maxj_conditions(const FiniteSemigroup& s);
bool has_maximum_j_class(const FiniteSemigroup& s);

struct NrCheckReport {
  bool t3_satisfies;
  bool u3_satisfies;
  bool u3_regular;
  bool u3_closed_in_t3;
};

/// Reproduces the regular-subsemigroup failure witness: T3 satisfies the
/// nr system while its regular subsemigroup U3 does not.  Throws
/// InternalCheckFailed when any leg comes out differently.
NrCheckReport nr_counterexample_check(const EvalOptions& opts = {});

}  // namespace semieq

#endif  // SEMIEQ_CLASSES_HPP_
