#ifndef SEMIEQ_SEMIGROUP_HPP_
#define SEMIEQ_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semieq/errors.hpp"

namespace semieq {

using element = std::uint32_t;

/// A finite semigroup given by its full multiplication table over the
/// elements 0..order-1.  Construction always goes through validated()
/// (which checks closure and associativity) or through one of the
/// table constructions below, which produce associative tables by
/// design and skip the recheck unless the debug flag is set.
///
/// Values are immutable after construction and safe to share across
/// threads.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  /// Validates a square table.  Throws OutOfRangeEntry(i,j) for the first
  /// entry outside [0, order), NonAssociative(i,j,k) for the first triple
  /// with (ij)k != i(jk), both in row-major scan order.
  static FiniteSemigroup validated(const std::vector<std::vector<element>>& rows,
                                   std::vector<std::string> labels = {});
  static FiniteSemigroup validated(element order, std::vector<element> flat_table,
                                   std::vector<std::string> labels = {});

  element order() const noexcept { return order_; }

  element product(element a, element b) const { return table_[a * order_ + b]; }

  /// Folds a nonempty word of element indices through the table.
  element word_value(std::span<const element> word) const;

  std::span<const element> row(element a) const {
    return {table_.data() + a * order_, order_};
  }
  const std::vector<element>& flat_table() const noexcept { return table_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label if present, else the decimal index.
  std::string display(element a) const;

  std::optional<element> identity_element() const;
  std::optional<element> zero_element() const;

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  element order_ = 0;
  std::vector<element> table_;
  std::vector<std::string> labels_;

  FiniteSemigroup(element order, std::vector<element> table,
                  std::vector<std::string> labels)
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {}

  friend FiniteSemigroup from_validated_parts(element, std::vector<element>,
                                              std::vector<std::string>);
};

/// Trusted constructor used by the derived constructions; rechecks
/// associativity only when construction_recheck() is enabled.
FiniteSemigroup from_validated_parts(element order, std::vector<element> table,
                                     std::vector<std::string> labels);

/// Debug switch: when on, every derived construction re-runs the full
/// associativity check on its output.
void set_construction_recheck(bool on) noexcept;
bool construction_recheck() noexcept;

/// Flags over the elements of a particular semigroup.
struct ElementSubset {
  std::vector<bool> member;

  ElementSubset() = default;
  explicit ElementSubset(element order) : member(order, false) {}

  std::size_t size() const noexcept { return member.size(); }
  bool contains(element a) const { return member[a]; }
  void add(element a) { member[a] = true; }
  std::size_t count() const;
  std::vector<element> elements() const;
  bool empty() const { return count() == 0; }

  bool operator==(const ElementSubset&) const = default;
};

/// Partition of the elements of a parent semigroup; compatibility with the
/// multiplication is the caller's claim, checked by is_congruence_on().
struct Congruence {
  std::vector<element> block_of;  // element -> block id, ids dense from 0

  element num_blocks() const;
  bool same(element a, element b) const { return block_of[a] == block_of[b]; }
  bool operator==(const Congruence&) const = default;
};

bool is_congruence_on(const FiniteSemigroup& s, const Congruence& c);
Congruence identity_congruence(const FiniteSemigroup& s);
Congruence universal_congruence(const FiniteSemigroup& s);

// ---- constructions ----

/// Componentwise product; labels become "(x,y)" pairs when both factors
/// are labelled.
FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t);

struct SubSemigroup {
  FiniteSemigroup sub;
  std::vector<element> to_parent;  // sub index -> parent index
};

/// Closure of a nonempty generating set under the table, re-indexed in
/// discovery order (generators first, in index order).
SubSemigroup subsemigroup_generated(const FiniteSemigroup& s, const ElementSubset& gens);

/// Quotient by a congruence; blocks are numbered by their least parent
/// element.  Throws NotACongruence when the partition is incompatible.
FiniteSemigroup quotient(const FiniteSemigroup& s, const Congruence& c);

/// Collapses a nonempty two-sided ideal to a single zero element, which
/// lands at the last index; the remaining elements keep their relative
/// order.  Throws NotAnIdeal.
FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const ElementSubset& ideal);

/// Returns s unchanged when it already has a two-sided identity;
/// otherwise appends one at the last index.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

}  // namespace semieq

#endif  // SEMIEQ_SEMIGROUP_HPP_
