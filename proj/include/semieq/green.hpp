#ifndef SEMIEQ_GREEN_HPP_
#define SEMIEQ_GREEN_HPP_

#include <optional>
#include <vector>

#include "semieq/semigroup.hpp"

namespace semieq {

/// The five Green's relations of a finite semigroup, as dense class ids per
/// element, together with the idempotent set and the per-element flag for
/// membership in a subgroup.  All ideals are taken over S^1, so the data is
/// meaningful for non-regular semigroups as well.
struct GreenData {
  std::vector<element> r_class;
  std::vector<element> l_class;
  std::vector<element> h_class;
  std::vector<element> d_class;
  std::vector<element> j_class;
  ElementSubset idempotents;
  std::vector<bool> group_h;  // true iff a's H-class is a group (a H a*a)

  element num_r() const;
  element num_l() const;
  element num_h() const;
  element num_d() const;
  element num_j() const;
};

/// R via equality of right ideals aS^1, L dually, H = R meet L, J via
/// S^1 a S^1, D as the join of R and L.  D = J is asserted (finite case)
/// and a violation throws InternalCheckFailed.
GreenData green_data(const FiniteSemigroup& s);

/// All x with axa = a and xax = x.
ElementSubset inverses_of(const FiniteSemigroup& s, element a);

bool is_regular(const FiniteSemigroup& s);

/// Subsemigroup generated by the idempotents.  Throws NoIdempotents when
/// E(S) is empty (cannot happen for a valid finite semigroup, but the
/// contract is explicit).
SubSemigroup core(const FiniteSemigroup& s);

/// eSe for an idempotent e; always a monoid with identity e.
/// Throws NotIdempotent.
SubSemigroup local_subsemigroup(const FiniteSemigroup& s, element e);

/// Table-preserving bijection from s to t if one exists.  Backtracking
/// search seeded by per-element invariant profiles (idempotency, monogenic
/// index/period, Green class sizes).
std::optional<std::vector<element>> are_isomorphic(const FiniteSemigroup& s,
                                                   const FiniteSemigroup& t);

}  // namespace semieq

#endif  // SEMIEQ_GREEN_HPP_
