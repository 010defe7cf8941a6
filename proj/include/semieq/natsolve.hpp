#ifndef SEMIEQ_NATSOLVE_HPP_
#define SEMIEQ_NATSOLVE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semieq/errors.hpp"

namespace semieq {

/// One equation p = q over declared parameters (universally chosen
/// positive integers) and variables (existentially solved positive
/// integers), with per-symbol letter counts.  Text form:
///   params: a b ; vars: x y ; eq: x^13*y^24*a^2*b^5 = x^10*y^16*a^13*b^19
/// The params section may be empty or absent.
struct AdditiveEquation {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  std::vector<std::int64_t> p_var, q_var;    // counts per variable, lhs / rhs
  std::vector<std::int64_t> p_par, q_par;    // counts per parameter
};

AdditiveEquation parse_additive(const std::string& text);

/// Count vectors of one equation: per variable m_i = |p|_xi - |q|_xi, per
/// parameter n_j = |q|_aj - |p|_aj, with d = gcd(m) and d' = gcd(n)
/// (gcd of an empty or all-zero list is 0).
struct AdditiveEquationProfile {
  std::vector<std::int64_t> r, s;  // variable counts in p and q
  std::vector<std::int64_t> p, q;  // parameter counts in p and q
  std::vector<std::int64_t> m, n;
  std::int64_t d = 0, dprime = 0;
};

AdditiveEquationProfile profile(const AdditiveEquation& eq);

/// Canonical shape of S(c_1..c_r) = { t_1 c_1 + ... + t_r c_r : t_i >= 1 }.
struct SemigroupOfSums {
  enum class Form { Empty, ZeroOnly, FullLattice, Positive, Negative };
  Form form = Form::Empty;
  std::int64_t d = 0;          // gcd of the nonzero coefficients
  std::int64_t conductor = 0;  // Positive: least bound with every multiple
                               // of d at or above it a member (mirrored for
                               // Negative)
  std::vector<std::int64_t> base;  // members strictly inside the conductor

  bool contains(std::int64_t value) const;
  std::string describe() const;
};

SemigroupOfSums sums_structure(std::span<const std::int64_t> coeffs);

/// Set containment between two canonical forms.
bool sums_contained(const SemigroupOfSums& inner, const SemigroupOfSums& outer);

enum class SolvabilityRationale {
  NoVariables,    // solvable iff every parameter count difference is zero
  MixedSignsGcd,  // variables occur more on each side somewhere: d | d'
  Containment,    // general: achievable targets inside achievable sums
};

struct SolvabilityDecision {
  bool solvable = false;
  SolvabilityRationale rationale = SolvabilityRationale::Containment;
};

/// Decides solvability over the positive integers under addition.  When the
/// variable coefficients show both signs, the gcd shortcut is computed as
/// well and checked against the containment decision.
SolvabilityDecision decide_solvable_in_P(const AdditiveEquationProfile& prof);

/// All bounded witnesses t (t_i >= 1, ascending lexicographic) with
/// sum t_i m_i equal to the target determined by the parameter values.
std::vector<std::vector<std::int64_t>> enumerate_witnesses(
    const AdditiveEquationProfile& prof, std::span<const std::int64_t> params,
    std::size_t limit = 16);

/// Lexicographically least bounded witness, re-verified by substitution
/// before being returned.
std::optional<std::vector<std::int64_t>> find_witness(
    const AdditiveEquationProfile& prof, std::span<const std::int64_t> params);

/// Values of both sides of eq under the given parameter and variable
/// assignment; equal exactly when the assignment solves the equation.
std::pair<std::int64_t, std::int64_t> substitute(const AdditiveEquation& eq,
                                                 std::span<const std::int64_t> params,
                                                 std::span<const std::int64_t> vars);

enum class UniversalTag {
  EqualCounts,        // every variable occurs equally often on both sides
  MixedInequalities,  // some variable more on the left, some more on the right
  NotUniversal,
};

struct UniversalClassification {
  bool universal = false;
  UniversalTag tag = UniversalTag::NotUniversal;
};

/// Classifies a parameterless equation as solvable in every semigroup or
/// not.  Throws HasParameters when parameters are declared.
UniversalClassification classify_universal(const AdditiveEquation& eq);

}  // namespace semieq

#endif  // SEMIEQ_NATSOLVE_HPP_
