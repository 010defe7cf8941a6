#ifndef SEMIEQ_FAMILIES_HPP_
#define SEMIEQ_FAMILIES_HPP_

#include <string>
#include <vector>

#include "semieq/semigroup.hpp"

namespace semieq {

// Named families used throughout the corpus and the CLI.

FiniteSemigroup cyclic_group(element n);
/// Monogenic semigroup with index i >= 1 and period p >= 1 on the powers
/// a^1 .. a^(i+p-1).
FiniteSemigroup monogenic(element index, element period);
/// Chain semilattice on k elements, product = min, so k-1 is the identity.
FiniteSemigroup chain_semilattice(element k);
/// All products equal element 0.
FiniteSemigroup null_semigroup(element k);
FiniteSemigroup left_zero(element k);
FiniteSemigroup right_zero(element k);
/// Full transformation monoid on n points (n <= 4); elements enumerate the
/// image vectors lexicographically, and maps compose left to right:
/// x(fg) = (xf)g.
FiniteSemigroup full_transformation_monoid(element n);
/// The 21 non-permutation maps of the full transformation monoid on 3 points.
FiniteSemigroup u3();
/// Combinatorial Brandt semigroup: matrix units (i,j) for i,j < n, plus a
/// zero at the last index.
FiniteSemigroup brandt(element n);
/// Truncated Brandt-type semigroup on {(j,k) : j,k < i} plus (i,i) plus zero;
/// (i,i) sits at index i*i, zero last.
FiniteSemigroup brandt_truncated(element i);
/// 0-rectangular band over a 0/1 structure matrix: elements (i,lambda) with
/// i < cols(P), lambda < rows(P), plus zero last;
/// (i,lambda)(j,mu) = (i,mu) when P[lambda][j] = 1, else zero.
FiniteSemigroup zero_rectangular_band(const std::vector<std::vector<int>>& structure);

/// Structure matrix of the order-17 counterexample band used in the test
/// corpus: 4x4 with eight nonzero idempotents.
std::vector<std::vector<int>> counterexample_band_matrix();

/// Builds a family member from a descriptor string:
///   Zn:<n>  mono:<i>,<p>  chain:<k>  null:<k>  lz:<k>  rz:<k>  T:<n>  U3
///   brandt:<n>  btrunc:<i>  zrb:<rows>x<cols>:<01-matrix-rows-comma-separated>
/// Throws UnsupportedParameter for anything else or out-of-range parameters.
FiniteSemigroup make_family(const std::string& descriptor);

bool looks_like_descriptor(const std::string& text);

}  // namespace semieq

#endif  // SEMIEQ_FAMILIES_HPP_
