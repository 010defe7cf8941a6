#include "semieq/eval.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace semieq {

namespace {

// Matrix compiled against slot indices so the search loop never touches
// strings.  Green data is computed once, and only when an atom needs it.
struct CompiledAtom {
  Atom::Kind kind;
  GreenRel rel;
  std::vector<element> lhs, rhs;  // symbol slots
};

struct Compiled {
  const FiniteSemigroup* s;
  std::vector<std::vector<CompiledAtom>> matrix;
  std::optional<GreenData> green;

  bool matrix_true(std::span<const element> a) const {
    for (const auto& disjunct : matrix) {
      bool all = true;
      for (const auto& atom : disjunct) {
        if (!atom_true(atom, a)) {
          all = false;
          break;
        }
      }
      if (all) {
        return true;
      }
    }
    return false;
  }

  element value(const std::vector<element>& word, std::span<const element> a) const {
    element v = a[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) {
      v = s->product(v, a[word[i]]);
    }
    return v;
  }

  bool atom_true(const CompiledAtom& atom, std::span<const element> a) const {
    switch (atom.kind) {
      case Atom::Kind::WordEq:
        return value(atom.lhs, a) == value(atom.rhs, a);
      case Atom::Kind::InG:
        return green->group_h[value(atom.lhs, a)];
      case Atom::Kind::Green: {
        element u = value(atom.lhs, a), v = value(atom.rhs, a);
        switch (atom.rel) {
          case GreenRel::R: return green->r_class[u] == green->r_class[v];
          case GreenRel::L: return green->l_class[u] == green->l_class[v];
          case GreenRel::H: return green->h_class[u] == green->h_class[v];
          case GreenRel::D: return green->d_class[u] == green->d_class[v];
          case GreenRel::J: return green->j_class[u] == green->j_class[v];
        }
        return false;
      }
      default:
        // InV / InE are desugared before compilation
        throw Error(ErrorCode::InternalCheckFailed, "sugared atom reached evaluation");
    }
  }
};

Compiled compile(const FiniteSemigroup& s, const EquationSystem& sys_in) {
  sys_in.check_valid();
  EquationSystem sys = desugar(sys_in);
  std::map<std::string, element> slot;
  for (const auto& sym : sys.bound_symbols()) {
    slot.emplace(sym, static_cast<element>(slot.size()));
  }
  Compiled c{&s, {}, std::nullopt};
  bool needs_green = false;
  for (const auto& disjunct : sys.matrix) {
    std::vector<CompiledAtom> out;
    for (const auto& atom : disjunct) {
      CompiledAtom ca{atom.kind, atom.rel, {}, {}};
      for (const auto& sym : atom.lhs.syms) {
        ca.lhs.push_back(slot.at(sym));
      }
      for (const auto& sym : atom.rhs.syms) {
        ca.rhs.push_back(slot.at(sym));
      }
      needs_green |= atom.kind == Atom::Kind::InG || atom.kind == Atom::Kind::Green;
      out.push_back(std::move(ca));
    }
    c.matrix.push_back(std::move(out));
  }
  if (needs_green) {
    c.green = green_data(s);
  }
  return c;
}

struct Searcher {
  const Compiled& c;
  const std::vector<QuantifierBlock>* prefix;
  std::vector<element> asg;
  std::vector<std::size_t> block_offset;  // slot offset of each block
  std::uint64_t evals = 0;
  std::uint64_t budget;
  bool enforce_budget = true;

  // Iterates the tuple of one block like an odometer; callback returns
  // true to keep going (semantics differ per quantifier).
  template <typename F>
  bool decide_block(std::size_t bi, F&& sub) {
    element n = c.s->order();
    const auto& block = (*prefix)[bi];
    std::size_t off = block_offset[bi];
    std::size_t width = block.symbols.size();
    std::fill(asg.begin() + off, asg.begin() + off + width, 0u);
    bool universal = block.universal;
    while (true) {
      bool below = sub();
      if (below != universal) {
        // exists succeeded or forall failed: short-circuit
        return below;
      }
      std::size_t pos = width;
      while (pos > 0) {
        --pos;
        if (++asg[off + pos] < n) {
          break;
        }
        asg[off + pos] = 0;
        if (pos == 0) {
          return universal;
        }
      }
      if (width == 0) {
        return universal;
      }
    }
  }

  bool decide(std::size_t bi) {
    if (bi == prefix->size()) {
      if (enforce_budget && evals >= budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "matrix evaluation budget of " + std::to_string(budget) +
                        " exhausted",
                    budget);
      }
      ++evals;
      return c.matrix_true(asg);
    }
    return decide_block(bi, [&] { return decide(bi + 1); });
  }
};

// Collects sampled trace rows after the verdict is known.  At quantifier
// blocks matching the verdict's "winning" player we re-run the decision to
// fix the winning choice; at the other player's blocks we enumerate.
struct TraceCollector {
  Searcher& search;
  bool verdict;
  std::uint32_t limit;
  std::vector<std::vector<element>> rows;

  void collect(std::size_t bi) {
    if (rows.size() >= limit) {
      return;
    }
    const auto& prefix = *search.prefix;
    if (bi == prefix.size()) {
      rows.push_back(search.asg);
      return;
    }
    bool enumerate = prefix[bi].universal == verdict;
    if (enumerate) {
      // enumerate this block's tuples; every one is winnable for the verdict
      search.decide_block(bi, [&] {
        collect(bi + 1);
        // keep enumerating until the odometer wraps or the sample cap hits
        return rows.size() >= limit ? !verdict : verdict;
      });
    } else {
      // fix the first choice that achieves the verdict below
      element n = search.c.s->order();
      std::size_t off = search.block_offset[bi];
      std::size_t width = prefix[bi].symbols.size();
      std::vector<element> tuple(width, 0);
      while (true) {
        std::copy(tuple.begin(), tuple.end(), search.asg.begin() + off);
        if (search.decide(bi + 1) == verdict) {
          std::copy(tuple.begin(), tuple.end(), search.asg.begin() + off);
          collect(bi + 1);
          return;
        }
        std::size_t pos = width;
        while (pos > 0) {
          --pos;
          if (++tuple[pos] < n) {
            break;
          }
          tuple[pos] = 0;
          if (pos == 0) {
            return;  // cannot happen: verdict guarantees a choice exists
          }
        }
      }
    }
  }
};

}  // namespace

std::uint64_t estimated_cost(const FiniteSemigroup& s, const EquationSystem& sys) {
  std::uint64_t cost = 1;
  for (std::size_t i = 0; i < sys.arity(); ++i) {
    if (__builtin_mul_overflow(cost, static_cast<std::uint64_t>(s.order()), &cost)) {
      return UINT64_MAX;
    }
  }
  return cost;
}

EvalReport evaluate(const FiniteSemigroup& s, const EquationSystem& sys,
                    const EvalOptions& opts) {
  Compiled c = compile(s, sys);
  EvalReport report;
  report.symbols = sys.bound_symbols();
  report.estimated_cost = estimated_cost(s, sys);
  if (report.estimated_cost > opts.budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "worst-case cost " + std::to_string(report.estimated_cost) +
                    " exceeds budget " + std::to_string(opts.budget),
                report.estimated_cost);
  }

  Searcher search{c, &sys.prefix, {}, {}, 0, opts.budget};
  search.asg.assign(report.symbols.size(), 0);
  std::size_t off = 0;
  for (const auto& block : sys.prefix) {
    search.block_offset.push_back(off);
    off += block.symbols.size();
  }
  report.verdict = search.decide(0);
  report.matrix_evals = search.evals;

  if (opts.trace_samples > 0) {
    search.enforce_budget = false;
    TraceCollector collector{search, report.verdict, opts.trace_samples, {}};
    collector.collect(0);
    report.trace = std::move(collector.rows);
  }
  return report;
}

bool evaluate_matrix(const FiniteSemigroup& s, const EquationSystem& sys,
                     std::span<const element> assignment) {
  if (assignment.size() != sys.arity()) {
    throw Error(ErrorCode::UsageError, "assignment must cover every bound symbol");
  }
  for (element v : assignment) {
    if (v >= s.order()) {
      throw Error(ErrorCode::UsageError, "assignment value out of range");
    }
  }
  return compile(s, sys).matrix_true(assignment);
}

}  // namespace semieq
