#ifndef SEMIEQ_EVAL_HPP_
#define SEMIEQ_EVAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semieq/eqdsl.hpp"
#include "semieq/green.hpp"
#include "semieq/semigroup.hpp"

namespace semieq {

struct EvalOptions {
  /// Cap on matrix evaluations.  Evaluation refuses to start when the
  /// worst case |S|^arity already exceeds it (BudgetExceeded carries the
  /// estimate), and exact accounting enforces it during the search.
  std::uint64_t budget = 100'000'000;
  /// Trace rows are capped at this many sampled assignments.
  std::uint32_t trace_samples = 16;
};

/// Outcome of deciding S |= sys.  The trace rows are full assignments to
/// the bound symbols (in prefix order, see `symbols`): for a satisfied
/// system they are sampled universal choices completed with the witnesses
/// the search found, for a failed system they are the first refuting
/// universal choices completed with sampled existential attempts.  Every
/// row replays through evaluate_matrix to the verdict's polarity.
struct EvalReport {
  bool verdict = false;
  std::uint64_t matrix_evals = 0;   // decision pass only
  std::uint64_t estimated_cost = 0; // |S|^arity, saturating
  std::vector<std::string> symbols;
  std::vector<std::vector<element>> trace;
};

EvalReport evaluate(const FiniteSemigroup& s, const EquationSystem& sys,
                    const EvalOptions& opts = {});

/// Matrix-only semantics under a total assignment (indexed in prefix
/// order): disjunction over disjuncts of conjunction over atoms.
bool evaluate_matrix(const FiniteSemigroup& s, const EquationSystem& sys,
                     std::span<const element> assignment);

/// Worst-case number of matrix evaluations, saturating at uint64 max.
std::uint64_t estimated_cost(const FiniteSemigroup& s, const EquationSystem& sys);

}  // namespace semieq

#endif  // SEMIEQ_EVAL_HPP_
