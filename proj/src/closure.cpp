#include "semieq/closure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace semieq {

namespace {

struct UnionFind {
  std::vector<element> parent;
  explicit UnionFind(element n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  element find(element a) {
    while (parent[a] != a) {
      a = parent[a] = parent[parent[a]];
    }
    return a;
  }
  // returns true when the classes were distinct
  bool unite(element a, element b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent[a] = b;
    return true;
  }
};

Congruence to_congruence(UnionFind& uf) {
  Congruence c;
  c.block_of.resize(uf.parent.size());
  std::vector<element> renum(uf.parent.size(), static_cast<element>(-1));
  element next = 0;
  for (element a = 0; a < uf.parent.size(); ++a) {
    element root = uf.find(a);
    if (renum[root] == static_cast<element>(-1)) {
      renum[root] = next++;
    }
    c.block_of[a] = renum[root];
  }
  return c;
}

}  // namespace

Congruence principal_congruence(const FiniteSemigroup& s, element a, element b) {
  if (a >= s.order() || b >= s.order()) {
    throw Error(ErrorCode::UsageError, "element index out of range");
  }
  UnionFind uf(s.order());
  std::vector<std::pair<element, element>> work;
  if (uf.unite(a, b)) {
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (element x = 0; x < s.order(); ++x) {
      for (auto [p, q] : {std::pair{s.product(x, u), s.product(x, v)},
                          std::pair{s.product(u, x), s.product(v, x)}}) {
        if (uf.unite(p, q)) {
          work.emplace_back(p, q);
        }
      }
    }
  }
  return to_congruence(uf);
}

Congruence join(const Congruence& c1, const Congruence& c2) {
  element n = static_cast<element>(c1.block_of.size());
  UnionFind uf(n);
  std::vector<element> first1(c1.num_blocks(), static_cast<element>(-1));
  std::vector<element> first2(c2.num_blocks(), static_cast<element>(-1));
  for (element a = 0; a < n; ++a) {
    for (auto [ids, firsts] : {std::pair{&c1.block_of, &first1}, {&c2.block_of, &first2}}) {
      element blk = (*ids)[a];
      if ((*firsts)[blk] == static_cast<element>(-1)) {
        (*firsts)[blk] = a;
      } else {
        uf.unite(a, (*firsts)[blk]);
      }
    }
  }
  return to_congruence(uf);
}

std::vector<Congruence> all_congruences(const FiniteSemigroup& s, element order_cap) {
  if (s.order() > order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(s.order()) + " exceeds the congruence cap " +
                    std::to_string(order_cap));
  }
  std::set<std::vector<element>> seen;
  std::vector<Congruence> out;
  auto push = [&](Congruence c) {
    if (seen.insert(c.block_of).second) {
      out.push_back(std::move(c));
    }
  };
  push(identity_congruence(s));
  for (element a = 0; a < s.order(); ++a) {
    for (element b = a + 1; b < s.order(); ++b) {
      push(principal_congruence(s, a, b));
    }
  }
  // join closure to fixpoint
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      push(join(out[i], out[j]));
    }
  }
  return out;
}

namespace {

using MemberFn = std::function<bool(const FiniteSemigroup&)>;

// Membership through the oracle or the basis; basis evaluation may throw
// BudgetExceeded which the suites record.
MemberFn membership(const ClassEntry& entry, const ClosureOptions& opts) {
  if (opts.mode == MembershipMode::Oracle) {
    return entry.oracle;
  }
  EquationSystem basis = entry.basis;
  EvalOptions eval = opts.eval;
  return [basis, eval](const FiniteSemigroup& s) {
    return evaluate(s, basis, eval).verdict;
  };
}

}  // namespace

ClosureResult closed_under_H(const std::string& class_id, const Corpus& corpus,
                             const ClosureOptions& opts) {
  const ClassEntry& entry = catalogue_entry(class_id);
  MemberFn in_class = membership(entry, opts);
  ClosureResult result;
  for (const auto& member : corpus.entries()) {
    if (opts.member_order_cap && member.sg.order() > opts.member_order_cap) {
      continue;
    }
    try {
      if (!in_class(member.sg)) {
        continue;
      }
      for (const auto& c : all_congruences(member.sg, opts.congruence_cap)) {
        FiniteSemigroup q = quotient(member.sg, c);
        if (!in_class(q)) {
          result.violations.push_back(
              {class_id + ": quotient of " + member.name + " by a congruence with " +
               std::to_string(c.num_blocks()) + " blocks left the class"});
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::OrderCapExceeded) {
        throw;
      }
      result.skipped.push_back(member.name + ": " + e.what());
    }
  }
  return result;
}

ClosureResult closed_under_P(const std::string& class_id, const Corpus& corpus,
                             const ClosureOptions& opts) {
  const ClassEntry& entry = catalogue_entry(class_id);
  MemberFn in_class = membership(entry, opts);
  ClosureResult result;
  // membership of the factors, computed once
  std::vector<const CorpusEntry*> members;
  for (const auto& member : corpus.entries()) {
    if (opts.member_order_cap && member.sg.order() > opts.member_order_cap) {
      continue;
    }
    try {
      if (in_class(member.sg)) {
        members.push_back(&member);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) {
        throw;
      }
      result.skipped.push_back(member.name + ": " + e.what());
    }
  }
  for (const auto* s : members) {
    for (const auto* t : members) {
      try {
        FiniteSemigroup p = direct_product(s->sg, t->sg);
        if (!in_class(p)) {
          result.violations.push_back(
              {class_id + ": " + s->name + " x " + t->name + " left the class"});
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) {
          throw;
        }
        result.skipped.push_back(s->name + " x " + t->name + ": " + e.what());
      }
    }
  }
  return result;
}

ClosureResult maxj_bare_condition_p_study(const Corpus& corpus, element member_order_cap) {
  ClosureResult result;
  std::vector<const CorpusEntry*> members;
  for (const auto& member : corpus.entries()) {
    if (member_order_cap && member.sg.order() > member_order_cap) {
      continue;
    }
    if (has_maximum_j_class(member.sg)) {
      members.push_back(&member);
    }
  }
  for (const auto* s : members) {
    for (const auto* t : members) {
      if (!has_maximum_j_class(direct_product(s->sg, t->sg))) {
        result.violations.push_back(
            {"maximum-ideal-class condition: " + s->name + " x " + t->name +
             " has no maximum class"});
      }
    }
  }
  return result;
}

}  // namespace semieq
