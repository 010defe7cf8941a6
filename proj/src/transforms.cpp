#include "semieq/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semieq {

namespace {

std::string fresh_op_name(const std::set<std::string>& taken, std::size_t counter) {
  static const char* pool[] = {"f", "g", "h", "k", "m", "q"};
  if (counter < std::size(pool) && !taken.count(pool[counter])) {
    return pool[counter];
  }
  for (std::size_t i = 1;; ++i) {
    std::string name = "f" + std::to_string(i);
    if (!taken.count(name)) {
      return name;
    }
  }
}

}  // namespace

IdentitySystem skolemize(const EquationSystem& sys_in) {
  EquationSystem sys = desugar(sys_in);
  sys.check_valid();
  if (sys.matrix.size() != 1) {
    throw Error(ErrorCode::DisjunctiveMatrix,
                "only conjunctive matrices can be turned into identities");
  }
  for (const auto& atom : sys.matrix[0]) {
    if (atom.kind != Atom::Kind::WordEq) {
      throw Error(ErrorCode::UnsupportedAtom,
                  "subgroup-membership and Green atoms have no equational form");
    }
  }

  IdentitySystem out;
  std::set<std::string> taken;
  for (const auto& sym : sys.bound_symbols()) {
    taken.insert(sym);
  }
  // words as term words; symbol -> op replacement happens in place
  std::vector<std::pair<TermWord, TermWord>> identities;
  for (const auto& atom : sys.matrix[0]) {
    auto lift = [](const Word& w) {
      TermWord tw;
      for (const auto& sym : w.syms) {
        tw.factors.push_back({sym, -1});
      }
      return tw;
    };
    identities.emplace_back(lift(atom.lhs), lift(atom.rhs));
  }

  auto prefix = sys.prefix;
  while (true) {
    std::size_t bi = 0;
    while (bi < prefix.size() && prefix[bi].universal) {
      ++bi;
    }
    if (bi == prefix.size()) {
      break;
    }
    std::string victim = prefix[bi].symbols.front();
    std::vector<std::string> scope;
    for (std::size_t i = 0; i < bi; ++i) {
      scope.insert(scope.end(), prefix[i].symbols.begin(), prefix[i].symbols.end());
    }
    std::string name = fresh_op_name(taken, out.ops.size());
    taken.insert(name);
    int op_index = static_cast<int>(out.ops.size());
    out.ops.push_back({name, scope});
    for (auto& [lhs, rhs] : identities) {
      for (TermWord* side : {&lhs, &rhs}) {
        for (auto& factor : side->factors) {
          if (!factor.is_op() && factor.symbol == victim) {
            factor = {name, op_index};
          }
        }
      }
    }
    auto& symbols = prefix[bi].symbols;
    symbols.erase(symbols.begin());
    if (symbols.empty()) {
      prefix.erase(prefix.begin() + bi);
      if (bi > 0 && bi < prefix.size()) {
        // the neighbours are both universal now; merge them
        auto& last = prefix[bi - 1].symbols;
        last.insert(last.end(), prefix[bi].symbols.begin(), prefix[bi].symbols.end());
        prefix.erase(prefix.begin() + bi);
      }
    }
  }
  for (const auto& block : prefix) {
    out.universals.insert(out.universals.end(), block.symbols.begin(),
                          block.symbols.end());
  }
  out.identities = std::move(identities);
  return out;
}

namespace {

std::string render(const TermFactor& f, const IdentitySystem& ids) {
  if (!f.is_op()) {
    return f.symbol;
  }
  const SkolemOp& op = ids.ops[f.op_index];
  if (op.args.empty()) {
    return op.name;
  }
  std::string out = op.name + "(";
  for (std::size_t i = 0; i < op.args.size(); ++i) {
    out += (i ? "," : "") + op.args[i];
  }
  return out + ")";
}

std::string render(const TermWord& w, const IdentitySystem& ids) {
  std::string out;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    out += (i ? "*" : "") + render(w.factors[i], ids);
  }
  return out;
}

}  // namespace

std::string render(const IdentitySystem& ids) {
  std::string out = "skolem:";
  for (const auto& op : ids.ops) {
    out += " " + op.name + "/" + std::to_string(op.args.size());
  }
  out += "\n";
  if (!ids.universals.empty()) {
    out += "forall";
    for (const auto& sym : ids.universals) {
      out += " " + sym;
    }
    out += ". ";
  }
  for (std::size_t i = 0; i < ids.identities.size(); ++i) {
    if (i) {
      out += " & ";
    }
    out += render(ids.identities[i].first, ids) + " = " +
           render(ids.identities[i].second, ids);
  }
  return out;
}

namespace {

// Interpretation search.  Each operation table cell is a variable over the
// elements; identities instantiated at every universal assignment become
// word constraints over cells, solved by unit propagation with
// backtracking on the first undecided cell.
struct InterpSearch {
  const FiniteSemigroup& s;
  std::vector<std::size_t> op_cell_base;  // op -> first cell id
  std::size_t num_cells = 0;

  // one side of one instantiated identity: >= 0 known element, < 0 ~cell
  using Side = std::vector<long long>;
  std::vector<std::pair<Side, Side>> constraints;

  std::vector<element> cell_value;  // assigned value or kUnset
  static constexpr element kUnset = static_cast<element>(-1);
  std::uint64_t work = 0;
  std::uint64_t work_limit;

  bool fold(const Side& side, element& out) const {
    bool have = false;
    element v = 0;
    for (long long f : side) {
      element x;
      if (f >= 0) {
        x = static_cast<element>(f);
      } else {
        x = cell_value[~f];
        if (x == kUnset) {
          return false;
        }
      }
      v = have ? s.product(v, x) : x;
      have = true;
    }
    out = v;
    return true;
  }

  long long sole_undecided(const std::pair<Side, Side>& c) const {
    long long cell = -1;
    for (const Side* side : {&c.first, &c.second}) {
      for (long long f : *side) {
        if (f < 0 && cell_value[~f] == kUnset) {
          if (cell >= 0 && cell != ~f) {
            return -2;  // two distinct undecided cells
          }
          cell = ~f;
        }
      }
    }
    return cell;  // -1 = fully decided
  }

  void bump() {
    if (++work > work_limit) {
      throw Error(ErrorCode::BudgetExceeded,
                  "interpretation search exceeded its budget", work_limit);
    }
  }

  bool search() {
    // propagation pass
    std::vector<std::pair<std::size_t, element>> trail;
    bool progress = true;
    bool ok = true;
    while (progress && ok) {
      progress = false;
      for (const auto& c : constraints) {
        bump();
        long long cell = sole_undecided(c);
        if (cell == -2) {
          continue;
        }
        if (cell == -1) {
          element l = kUnset, r = kUnset;
          if (!fold(c.first, l) || !fold(c.second, r) || l != r) {
            ok = false;
            break;
          }
          continue;
        }
        element chosen = kUnset;
        int count = 0;
        for (element v = 0; v < s.order(); ++v) {
          cell_value[cell] = v;
          element l, r;
          if (fold(c.first, l) && fold(c.second, r) && l == r) {
            ++count;
            chosen = v;
          }
        }
        cell_value[cell] = kUnset;
        if (count == 0) {
          ok = false;
          break;
        }
        if (count == 1) {
          cell_value[cell] = chosen;
          trail.emplace_back(cell, chosen);
          progress = true;
        }
      }
    }
    if (ok) {
      auto next = std::find(cell_value.begin(), cell_value.end(), kUnset);
      if (next == cell_value.end()) {
        return true;
      }
      std::size_t cell = static_cast<std::size_t>(next - cell_value.begin());
      for (element v = 0; v < s.order(); ++v) {
        cell_value[cell] = v;
        if (search()) {
          return true;
        }
      }
      cell_value[cell] = kUnset;
    }
    for (auto [cell, value] : trail) {
      cell_value[cell] = kUnset;
    }
    return false;
  }
};

}  // namespace

bool verify_skolem(const FiniteSemigroup& s, const EquationSystem& sys,
                   const IdentitySystem& ids, const EvalOptions& opts) {
  bool expected = evaluate(s, sys, opts).verdict;

  InterpSearch search{s, {}, 0, {}, {}, 0, opts.budget};
  element n = s.order();
  for (const auto& op : ids.ops) {
    search.op_cell_base.push_back(search.num_cells);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < op.args.size(); ++i) {
      cells *= n;
    }
    search.num_cells += cells;
  }
  search.cell_value.assign(search.num_cells, InterpSearch::kUnset);

  // argument positions of each op within the universal assignment
  std::map<std::string, std::size_t> universal_slot;
  for (const auto& sym : ids.universals) {
    universal_slot.emplace(sym, universal_slot.size());
  }
  std::vector<std::vector<std::size_t>> op_arg_slots;
  for (const auto& op : ids.ops) {
    std::vector<std::size_t> slots;
    for (const auto& arg : op.args) {
      slots.push_back(universal_slot.at(arg));
    }
    op_arg_slots.push_back(std::move(slots));
  }

  std::vector<element> sigma(ids.universals.size(), 0);
  while (true) {
    for (const auto& [lhs, rhs] : ids.identities) {
      auto instantiate = [&](const TermWord& w) {
        InterpSearch::Side side;
        for (const auto& f : w.factors) {
          if (!f.is_op()) {
            side.push_back(sigma[universal_slot.at(f.symbol)]);
          } else {
            std::size_t offset = 0;
            for (std::size_t slot : op_arg_slots[f.op_index]) {
              offset = offset * n + sigma[slot];
            }
            std::size_t cell = search.op_cell_base[f.op_index] + offset;
            side.push_back(~static_cast<long long>(cell));
          }
        }
        return side;
      };
      search.constraints.emplace_back(instantiate(lhs), instantiate(rhs));
    }
    std::size_t pos = sigma.size();
    bool done = sigma.empty();
    while (pos > 0) {
      --pos;
      if (++sigma[pos] < n) {
        break;
      }
      sigma[pos] = 0;
      if (pos == 0) {
        done = true;
      }
    }
    if (done) {
      break;
    }
  }

  bool found = search.search();
  if (found != expected) {
    throw Error(ErrorCode::InternalCheckFailed,
                "interpretation search disagrees with direct evaluation");
  }
  return found;
}

EquationSystem localise(const EquationSystem& sys_in) {
  EquationSystem sys = sys_in;
  sys.check_valid();
  std::set<std::string> bound;
  for (const auto& sym : sys.bound_symbols()) {
    bound.insert(sym);
  }
  std::string A = "A", X = "X";
  for (int i = 0; bound.count(A) || bound.count(X); ++i) {
    A = "A" + std::to_string(i);
    X = "X" + std::to_string(i);
  }

  EquationSystem out;
  out.prefix.push_back({true, {A}});
  out.prefix.push_back({false, {X}});
  for (const auto& block : sys.prefix) {
    if (block.universal == out.prefix.back().universal) {
      auto& tail = out.prefix.back().symbols;
      tail.insert(tail.end(), block.symbols.begin(), block.symbols.end());
    } else {
      out.prefix.push_back(block);
    }
  }

  auto wrap = [&](const Word& w) {
    Word r;
    for (const auto& sym : w.syms) {
      for (const std::string* part :
           std::initializer_list<const std::string*>{&A, &X, &sym, &A, &X}) {
        r.syms.push_back(*part);
      }
    }
    return r;
  };
  Atom inverse_pair{Atom::Kind::InV, Word{{X}}, Word{{A}}};
  for (const auto& disjunct : sys.matrix) {
    std::vector<Atom> rewritten{inverse_pair};
    for (const auto& atom : disjunct) {
      Atom t = atom;
      t.lhs = wrap(atom.lhs);
      if (!atom.rhs.syms.empty()) {
        t.rhs = wrap(atom.rhs);
      }
      rewritten.push_back(std::move(t));
    }
    out.matrix.push_back(std::move(rewritten));
  }
  out.check_valid();
  return out;
}

bool verify_localise(const FiniteSemigroup& s, const EquationSystem& sys,
                     const EvalOptions& opts) {
  if (!is_regular(s)) {
    throw Error(ErrorCode::NotRegular, "localisation equivalence needs a regular input");
  }
  bool via_transform = evaluate(s, localise(sys), opts).verdict;
  bool via_locals = true;
  for (element e = 0; e < s.order(); ++e) {
    if (s.product(e, e) != e) {
      continue;
    }
    if (!evaluate(local_subsemigroup(s, e).sub, sys, opts).verdict) {
      via_locals = false;
      break;
    }
  }
  if (via_transform != via_locals) {
    throw Error(ErrorCode::InternalCheckFailed,
                "localised system and local subsemigroups disagree");
  }
  return via_transform;
}

}  // namespace semieq
