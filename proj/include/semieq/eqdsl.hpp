#ifndef SEMIEQ_EQDSL_HPP_
#define SEMIEQ_EQDSL_HPP_

#include <string>
#include <vector>

#include "semieq/errors.hpp"

namespace semieq {

// Equation-system DSL.  Grammar:
//
//   system   := block+ matrix
//   block    := ("forall" | "exists") ident+ "."
//   matrix   := disjunct ("|" disjunct)*
//   disjunct := atom ("&" atom)*
//   atom     := word "=" word
//             | word "in" "V" "(" word ")"
//             | word "in" "E"
//             | word "in" "G"
//             | word ("R"|"L"|"H"|"D"|"J") word
//   word     := factor ("*" factor)*
//   factor   := ident ("^" posint)?
//
// "&" binds tighter than "|".  Identifiers are letters followed by letters
// or digits; the keywords forall, exists, in and the single letters
// V, E, G, R, L, H, D, J are reserved.  "#" starts a comment.  Powers are
// expanded on parse, so the AST stores plain symbol sequences.

/// Nonempty sequence of bound symbols.
struct Word {
  std::vector<std::string> syms;
  bool operator==(const Word&) const = default;
};

enum class GreenRel { R, L, H, D, J };

struct Atom {
  enum class Kind { WordEq, InV, InE, InG, Green };
  Kind kind = Kind::WordEq;
  Word lhs;              // WordEq/Green: left side; InV: the inverse; InE/InG: the word
  Word rhs;              // WordEq/Green: right side; InV: the element; else empty
  GreenRel rel = GreenRel::R;  // Green only

  bool operator==(const Atom&) const = default;
};

struct QuantifierBlock {
  bool universal = true;
  std::vector<std::string> symbols;
  bool operator==(const QuantifierBlock&) const = default;
};

struct EquationSystem {
  std::vector<QuantifierBlock> prefix;          // alternating quantifiers
  std::vector<std::vector<Atom>> matrix;        // disjunction of conjunctions

  /// Symbols of the prefix, flattened in binding order.
  std::vector<std::string> bound_symbols() const;
  std::size_t arity() const;  // number of bound symbols

  /// Re-checks the structural invariants (distinct binders, alternation,
  /// all matrix symbols bound, nonempty words); throws on violation.
  void check_valid() const;

  bool operator==(const EquationSystem&) const = default;
};

EquationSystem parse_system(const std::string& text);

/// Splits on lines consisting of "---" and parses each stanza.
std::vector<EquationSystem> parse_systems(const std::string& text);

/// Rewrites InV and InE atoms into plain word equations; InG and Green
/// atoms are kept (they are evaluated semantically).  Idempotent.
EquationSystem desugar(EquationSystem sys);

std::string render(const Word& w);
std::string render(const Atom& a);
std::string render(const EquationSystem& sys);

}  // namespace semieq

#endif  // SEMIEQ_EQDSL_HPP_
