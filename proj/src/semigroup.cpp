#include "semieq/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>

namespace semieq {

namespace {

std::atomic<bool> g_recheck{false};

void check_labels(element order, const std::vector<std::string>& labels) {
  if (labels.empty()) {
    return;
  }
  if (labels.size() != order) {
    throw Error(ErrorCode::UsageError, "label count does not match order");
  }
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::UsageError, "labels are not pairwise distinct");
  }
}

void check_table(element order, const std::vector<element>& table) {
  for (element i = 0; i < order; ++i) {
    for (element j = 0; j < order; ++j) {
      if (table[i * order + j] >= order) {
        throw Error(ErrorCode::OutOfRangeEntry,
                    "entry at (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is " + std::to_string(table[i * order + j]) +
                        ", outside [0," + std::to_string(order) + ")");
      }
    }
  }
  for (element i = 0; i < order; ++i) {
    for (element j = 0; j < order; ++j) {
      element ij = table[i * order + j];
      for (element k = 0; k < order; ++k) {
        if (table[ij * order + k] != table[i * order + table[j * order + k]]) {
          throw Error(ErrorCode::NonAssociative,
                      "first violating triple (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

}  // namespace

void set_construction_recheck(bool on) noexcept { g_recheck.store(on); }
bool construction_recheck() noexcept { return g_recheck.load(); }

FiniteSemigroup FiniteSemigroup::validated(element order, std::vector<element> flat_table,
                                           std::vector<std::string> labels) {
  if (order == 0) {
    throw Error(ErrorCode::UsageError, "a semigroup needs at least one element");
  }
  if (flat_table.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::UsageError, "table is not square of the given order");
  }
  check_labels(order, labels);
  check_table(order, flat_table);
  return FiniteSemigroup(order, std::move(flat_table), std::move(labels));
}

FiniteSemigroup FiniteSemigroup::validated(const std::vector<std::vector<element>>& rows,
                                           std::vector<std::string> labels) {
  element order = static_cast<element>(rows.size());
  std::vector<element> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::UsageError, "table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validated(order, std::move(flat), std::move(labels));
}

FiniteSemigroup from_validated_parts(element order, std::vector<element> table,
                                     std::vector<std::string> labels) {
  if (construction_recheck()) {
    check_table(order, table);
  }
  check_labels(order, labels);
  return FiniteSemigroup(order, std::move(table), std::move(labels));
}

element FiniteSemigroup::word_value(std::span<const element> word) const {
  element v = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) {
    v = product(v, word[i]);
  }
  return v;
}

std::string FiniteSemigroup::display(element a) const {
  return has_labels() ? labels_[a] : std::to_string(a);
}

std::optional<element> FiniteSemigroup::identity_element() const {
  for (element e = 0; e < order_; ++e) {
    bool ok = true;
    for (element a = 0; a < order_ && ok; ++a) {
      ok = product(e, a) == a && product(a, e) == a;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

std::optional<element> FiniteSemigroup::zero_element() const {
  for (element z = 0; z < order_; ++z) {
    bool ok = true;
    for (element a = 0; a < order_ && ok; ++a) {
      ok = product(z, a) == z && product(a, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

std::size_t ElementSubset::count() const {
  return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
}

std::vector<element> ElementSubset::elements() const {
  std::vector<element> out;
  for (element i = 0; i < member.size(); ++i) {
    if (member[i]) {
      out.push_back(i);
    }
  }
  return out;
}

element Congruence::num_blocks() const {
  element m = 0;
  for (element b : block_of) {
    m = std::max(m, b + 1);
  }
  return m;
}

bool is_congruence_on(const FiniteSemigroup& s, const Congruence& c) {
  if (c.block_of.size() != s.order()) {
    return false;
  }
  element n = s.order();
  for (element a = 0; a < n; ++a) {
    for (element b = a + 1; b < n; ++b) {
      if (!c.same(a, b)) {
        continue;
      }
      for (element x = 0; x < n; ++x) {
        if (!c.same(s.product(x, a), s.product(x, b)) ||
            !c.same(s.product(a, x), s.product(b, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence identity_congruence(const FiniteSemigroup& s) {
  Congruence c;
  c.block_of.resize(s.order());
  std::iota(c.block_of.begin(), c.block_of.end(), element{0});
  return c;
}

Congruence universal_congruence(const FiniteSemigroup& s) {
  Congruence c;
  c.block_of.assign(s.order(), 0);
  return c;
}

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  element ns = s.order(), nt = t.order();
  element n = ns * nt;
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  auto idx = [nt](element a, element b) { return a * nt + b; };
  for (element a = 0; a < ns; ++a) {
    for (element b = 0; b < nt; ++b) {
      for (element c = 0; c < ns; ++c) {
        for (element d = 0; d < nt; ++d) {
          table[idx(a, b) * n + idx(c, d)] = idx(s.product(a, c), t.product(b, d));
        }
      }
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels() && t.has_labels()) {
    labels.reserve(n);
    for (element a = 0; a < ns; ++a) {
      for (element b = 0; b < nt; ++b) {
        labels.push_back("(" + s.labels()[a] + "," + t.labels()[b] + ")");
      }
    }
  }
  return from_validated_parts(n, std::move(table), std::move(labels));
}

SubSemigroup subsemigroup_generated(const FiniteSemigroup& s, const ElementSubset& gens) {
  if (gens.size() != s.order()) {
    throw Error(ErrorCode::UsageError, "generator flags sized for a different semigroup");
  }
  std::vector<element> to_parent = gens.elements();
  if (to_parent.empty()) {
    throw Error(ErrorCode::EmptyGeneratorSet, "no generators given");
  }
  std::vector<element> sub_index(s.order(), static_cast<element>(-1));
  for (element i = 0; i < to_parent.size(); ++i) {
    sub_index[to_parent[i]] = i;
  }
  // BFS closure under products, discovery order.
  for (std::size_t head = 0; head < to_parent.size(); ++head) {
    for (std::size_t other = 0; other < to_parent.size(); ++other) {
      for (element p : {s.product(to_parent[head], to_parent[other]),
                        s.product(to_parent[other], to_parent[head])}) {
        if (sub_index[p] == static_cast<element>(-1)) {
          sub_index[p] = static_cast<element>(to_parent.size());
          to_parent.push_back(p);
        }
      }
    }
  }
  element n = static_cast<element>(to_parent.size());
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      table[i * n + j] = sub_index[s.product(to_parent[i], to_parent[j])];
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    for (element p : to_parent) {
      labels.push_back(s.labels()[p]);
    }
  }
  return {from_validated_parts(n, std::move(table), std::move(labels)),
          std::move(to_parent)};
}

FiniteSemigroup quotient(const FiniteSemigroup& s, const Congruence& c) {
  if (!is_congruence_on(s, c)) {
    throw Error(ErrorCode::NotACongruence, "partition is not compatible with the table");
  }
  // renumber blocks by least representative
  element n = s.order();
  std::vector<element> rep;  // block id (renumbered) -> representative
  std::vector<element> renum(c.num_blocks(), static_cast<element>(-1));
  std::vector<element> block(n);
  for (element a = 0; a < n; ++a) {
    if (renum[c.block_of[a]] == static_cast<element>(-1)) {
      renum[c.block_of[a]] = static_cast<element>(rep.size());
      rep.push_back(a);
    }
    block[a] = renum[c.block_of[a]];
  }
  element m = static_cast<element>(rep.size());
  std::vector<element> table(static_cast<std::size_t>(m) * m);
  for (element i = 0; i < m; ++i) {
    for (element j = 0; j < m; ++j) {
      table[i * m + j] = block[s.product(rep[i], rep[j])];
    }
  }
  return from_validated_parts(m, std::move(table), {});
}

FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const ElementSubset& ideal) {
  if (ideal.size() != s.order() || ideal.empty()) {
    throw Error(ErrorCode::NotAnIdeal, "ideal must be a nonempty subset of the semigroup");
  }
  element n = s.order();
  for (element a = 0; a < n; ++a) {
    if (!ideal.contains(a)) {
      continue;
    }
    for (element x = 0; x < n; ++x) {
      if (!ideal.contains(s.product(x, a)) || !ideal.contains(s.product(a, x))) {
        throw Error(ErrorCode::NotAnIdeal, "set is not closed under translation");
      }
    }
  }
  std::vector<element> keep;  // non-ideal elements in original order
  std::vector<element> new_index(n);
  for (element a = 0; a < n; ++a) {
    if (!ideal.contains(a)) {
      new_index[a] = static_cast<element>(keep.size());
      keep.push_back(a);
    }
  }
  element m = static_cast<element>(keep.size() + 1);
  element zero = m - 1;
  for (element a = 0; a < n; ++a) {
    if (ideal.contains(a)) {
      new_index[a] = zero;
    }
  }
  std::vector<element> table(static_cast<std::size_t>(m) * m, zero);
  for (element i = 0; i + 1 < m; ++i) {
    for (element j = 0; j + 1 < m; ++j) {
      table[i * m + j] = new_index[s.product(keep[i], keep[j])];
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    for (element a : keep) {
      labels.push_back(s.labels()[a]);
    }
    std::string zl = "0";
    while (std::find(labels.begin(), labels.end(), zl) != labels.end()) {
      zl += "_";
    }
    labels.push_back(zl);
  }
  return from_validated_parts(m, std::move(table), std::move(labels));
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.identity_element()) {
    return s;
  }
  element n = s.order();
  element m = n + 1;
  std::vector<element> table(static_cast<std::size_t>(m) * m);
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      table[i * m + j] = s.product(i, j);
    }
    table[i * m + n] = i;
    table[n * m + i] = i;
  }
  table[n * m + n] = n;
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels = s.labels();
    std::string il = "1";
    while (std::find(labels.begin(), labels.end(), il) != labels.end()) {
      il += "_";
    }
    labels.push_back(il);
  }
  return from_validated_parts(m, std::move(table), std::move(labels));
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::NoIdempotents: return "NoIdempotents";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::DuplicateBinder: return "DuplicateBinder";
    case ErrorCode::UnsupportedAtom: return "UnsupportedAtom";
    case ErrorCode::DisjunctiveMatrix: return "DisjunctiveMatrix";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::HasParameters: return "HasParameters";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Error";
}

}  // namespace semieq
