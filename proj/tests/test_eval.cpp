#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semieq/corpus.hpp"
#include "semieq/eval.hpp"
#include "semieq/families.hpp"

using namespace semieq;

namespace {

const EquationSystem& groups_system() {
  static const EquationSystem sys =
      parse_system("forall a b. exists x y. a*x = b & y*a = b");
  return sys;
}

const EquationSystem& max_class_system() {
  static const EquationSystem sys =
      parse_system("exists y. forall a. exists x z. a = x*y*z");
  return sys;
}

}  // namespace

TEST_CASE("a cyclic group satisfies the groups system") {
  EvalReport report = evaluate(cyclic_group(3), groups_system());
  CHECK(report.verdict);
  CHECK(!report.trace.empty());
}

TEST_CASE("the two-chain fails the groups system with a replayable trace") {
  FiniteSemigroup chain = chain_semilattice(2);
  EvalReport report = evaluate(chain, groups_system());
  CHECK(!report.verdict);
  REQUIRE(!report.trace.empty());
  // the refuting universal choice is the first in index order: a=0, b=1
  for (const auto& row : report.trace) {
    CHECK(row[0] == 0);
    CHECK(row[1] == 1);
    CHECK(!evaluate_matrix(chain, groups_system(), row));
  }
}

TEST_CASE("trace rows replay to the verdict, across systems and corpus members") {
  for (const char* text : {"forall a b. exists x y. a*x = b & y*a = b",
                           "exists y. forall a. exists x z. a = x*y*z",
                           "forall a. exists x. a*x*a = a",
                           "exists x. forall a. a*x = a & x*a = a"}) {
    EquationSystem sys = parse_system(text);
    for (const char* desc : {"Zn:4", "chain:3", "null:2", "brandt:2", "lz:2"}) {
      CAPTURE(text);
      CAPTURE(desc);
      FiniteSemigroup s = make_family(desc);
      EvalReport report = evaluate(s, sys);
      CHECK(!report.trace.empty());
      for (const auto& row : report.trace) {
        CHECK(evaluate_matrix(s, sys, row) == report.verdict);
      }
    }
  }
}

TEST_CASE("maximum-class system across the truncated and full Brandt members") {
  CHECK(!evaluate(make_family("btrunc:1"), max_class_system()).verdict);
  CHECK(!evaluate(make_family("btrunc:2"), max_class_system()).verdict);
  CHECK(!evaluate(direct_product(null_semigroup(2), null_semigroup(2)),
                  max_class_system())
             .verdict);
  EvalReport b2 = evaluate(make_family("brandt:2"), max_class_system());
  CHECK(b2.verdict);
  // the witness for the leading existential is a nonzero idempotent
  REQUIRE(!b2.trace.empty());
  FiniteSemigroup s = make_family("brandt:2");
  element y = b2.trace.front()[0];
  CHECK(y != 4);
  CHECK(s.product(y, y) == y);
}

TEST_CASE("matrix evaluation semantics") {
  FiniteSemigroup t2 = make_family("T:2");
  EquationSystem sys = parse_system("exists e. e^3 = e");
  element id = *t2.identity_element();
  CHECK(evaluate_matrix(t2, sys, std::vector<element>{id}));

  FiniteSemigroup b2 = make_family("brandt:2");
  EquationSystem in_g = parse_system("forall a. a in G");
  CHECK(evaluate_matrix(b2, in_g, std::vector<element>{4}));  // the zero
  CHECK(!evaluate_matrix(b2, in_g, std::vector<element>{1}));

  EquationSystem h_rel = parse_system("forall a b. a H b");
  CHECK(!evaluate_matrix(b2, h_rel, std::vector<element>{0, 1}));
  EquationSystem r_rel = parse_system("forall a b. a R b");
  CHECK(evaluate_matrix(b2, r_rel, std::vector<element>{0, 1}));
}

TEST_CASE("subgroup-membership atom agrees with its two-equation expansion") {
  EquationSystem expansion =
      parse_system("forall a. exists x. x in V(a) & a*x = x*a");
  EquationSystem sugar = parse_system("forall a. a in G");
  for (const auto& entry : builtin_corpus().entries()) {
    CAPTURE(entry.name);
    // per-element comparison through the matrix
    for (element a = 0; a < entry.sg.order(); ++a) {
      bool in_g = evaluate_matrix(entry.sg, sugar, std::vector<element>{a});
      bool expanded = false;
      for (element x = 0; x < entry.sg.order() && !expanded; ++x) {
        expanded = evaluate_matrix(entry.sg, expansion, std::vector<element>{a, x});
      }
      CHECK(in_g == expanded);
    }
  }
}

TEST_CASE("budget accounting is exact for a full universal sweep") {
  FiniteSemigroup z3 = cyclic_group(3);
  EquationSystem commutativity = parse_system("forall a b. a*b = b*a");
  EvalReport report = evaluate(z3, commutativity);
  CHECK(report.verdict);
  CHECK(report.matrix_evals == 9);  // |S|^2, no short-circuit on a true forall
  CHECK(report.estimated_cost == 9);
}

TEST_CASE("evaluation never exceeds the worst-case cost") {
  for (const char* desc : {"Zn:4", "brandt:2", "chain:3", "T:2"}) {
    FiniteSemigroup s = make_family(desc);
    for (const char* text :
         {"forall a b. exists x y. a*x = b & y*a = b",
          "exists y. forall a. exists x z. a = x*y*z", "forall a. exists x. a*x*a = a"}) {
      CAPTURE(desc);
      CAPTURE(text);
      EquationSystem sys = parse_system(text);
      EvalReport report = evaluate(s, sys);
      CHECK(report.matrix_evals <= report.estimated_cost);
    }
  }
}

TEST_CASE("over-budget evaluation is refused upfront with the estimate") {
  FiniteSemigroup t3 = make_family("T:3");
  EvalOptions opts;
  opts.budget = 1000;  // 27^4 = 531441 >> 1000
  try {
    evaluate(t3, groups_system(), opts);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(e.detail() == 531441);
  }
}

TEST_CASE("systems preserved under quotients and products, small corpus sample") {
  // spot version of the preservation suite: the acceptance suite runs the
  // full corpus sweep
  EquationSystem regular = parse_system("forall a. exists x. a*x*a = a");
  FiniteSemigroup b2 = make_family("brandt:2");
  FiniteSemigroup z2 = cyclic_group(2);
  CHECK(evaluate(b2, regular).verdict);
  CHECK(evaluate(z2, regular).verdict);
  CHECK(evaluate(direct_product(b2, z2), regular).verdict);
}
