#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "semieq/eqdsl.hpp"

using namespace semieq;

TEST_CASE("parsing the solvability system for groups") {
  EquationSystem sys = parse_system("forall a b. exists x y. a*x = b & y*a = b");
  REQUIRE(sys.prefix.size() == 2);
  CHECK(sys.prefix[0].universal);
  CHECK(sys.prefix[0].symbols == std::vector<std::string>{"a", "b"});
  CHECK(!sys.prefix[1].universal);
  REQUIRE(sys.matrix.size() == 1);
  REQUIRE(sys.matrix[0].size() == 2);
  CHECK(sys.matrix[0][0].kind == Atom::Kind::WordEq);
  CHECK(sys.matrix[0][0].lhs.syms == std::vector<std::string>{"a", "x"});
}

TEST_CASE("powers expand on parse") {
  EquationSystem sys = parse_system("exists x. x = x^2");
  CHECK(sys.matrix[0][0].rhs.syms == std::vector<std::string>{"x", "x"});
  EquationSystem cubes = parse_system("forall a. exists x. a^3*x = a");
  CHECK(cubes.matrix[0][0].lhs.syms == std::vector<std::string>{"a", "a", "a", "x"});
}

TEST_CASE("same-quantifier neighbours merge") {
  EquationSystem sys = parse_system("forall a. forall b. exists x. a*x = b");
  REQUIRE(sys.prefix.size() == 2);
  CHECK(sys.prefix[0].symbols == std::vector<std::string>{"a", "b"});
}

TEST_CASE("sugared atoms") {
  EquationSystem sys =
      parse_system("forall a. exists x y. x in V(a) & x H y & y in E & x in G");
  REQUIRE(sys.matrix[0].size() == 4);
  CHECK(sys.matrix[0][0].kind == Atom::Kind::InV);
  CHECK(sys.matrix[0][1].kind == Atom::Kind::Green);
  CHECK(sys.matrix[0][1].rel == GreenRel::H);
  CHECK(sys.matrix[0][2].kind == Atom::Kind::InE);
  CHECK(sys.matrix[0][3].kind == Atom::Kind::InG);
}

TEST_CASE("disjunction groups conjunctions") {
  EquationSystem sys = parse_system("forall a b. exists x y. a = x*b & b = y*a | a = b*x");
  REQUIRE(sys.matrix.size() == 2);
  CHECK(sys.matrix[0].size() == 2);
  CHECK(sys.matrix[1].size() == 1);
}

TEST_CASE("parse errors") {
  SUBCASE("syntax error carries position") {
    try {
      parse_system("forall a. exists x. a*x = ");
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
      CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
  }
  SUBCASE("unbound symbols are rejected") {
    try {
      parse_system("forall a. exists x. a*z = a");
      FAIL("expected UnboundSymbol");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnboundSymbol);
    }
  }
  SUBCASE("duplicate binders are rejected") {
    try {
      parse_system("forall a. exists a. a = a");
      FAIL("expected DuplicateBinder");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DuplicateBinder);
    }
  }
  SUBCASE("reserved identifiers cannot be bound") {
    CHECK_THROWS_AS(parse_system("forall E. exists x. E*x = x"), Error);
  }
  SUBCASE("zero exponent is rejected") {
    CHECK_THROWS_AS(parse_system("exists x. x^0 = x"), Error);
  }
}

TEST_CASE("comments and stanzas") {
  auto systems = parse_systems(
      "# groups\n"
      "forall a b. exists x y. a*x = b & y*a = b\n"
      "---\n"
      "# just idempotents\n"
      "exists x. x = x^2\n"
      "---\n"
      "# trailing empty stanza is ignored\n");
  CHECK(systems.size() == 2);
}

TEST_CASE("desugar rewrites V and E atoms") {
  EquationSystem sys = desugar(parse_system("forall a. exists x. x in V(a)"));
  REQUIRE(sys.matrix[0].size() == 2);
  CHECK(render(sys.matrix[0][0]) == "a = a*x*a");
  CHECK(render(sys.matrix[0][1]) == "x = x*a*x");

  EquationSystem sq = desugar(parse_system("forall a. exists x. a*x in E"));
  CHECK(render(sq.matrix[0][0]) == "a*x = a*x*a*x");

  // no sugar: unchanged
  EquationSystem plain = parse_system("forall a. exists x. a*x*a = a");
  CHECK(desugar(plain) == plain);

  // idempotent, and keeps semantic atoms
  EquationSystem ig = parse_system("forall a. exists x y. x in V(a) & x H y & y in E");
  CHECK(desugar(desugar(ig)) == desugar(ig));
  CHECK(desugar(ig).bound_symbols() == ig.bound_symbols());
}

TEST_CASE("render compresses powers and round-trips") {
  EquationSystem sys = parse_system("exists x. x = x^2");
  CHECK(render(sys) == "exists x. x = x^2");
  CHECK(parse_system(render(sys)) == sys);
}

namespace {

EquationSystem random_system(std::mt19937& rng) {
  static const std::vector<std::string> pool = {"a", "b", "c", "p", "q",
                                                "s", "t", "u", "w", "x",
                                                "y", "z", "a1", "x2"};
  std::uniform_int_distribution<int> coin(0, 1);
  EquationSystem sys;
  std::vector<std::string> symbols = pool;
  std::shuffle(symbols.begin(), symbols.end(), rng);
  int blocks = 1 + static_cast<int>(rng() % 3);
  bool universal = coin(rng) == 1;
  std::size_t used = 0;
  for (int b = 0; b < blocks && used < symbols.size(); ++b) {
    QuantifierBlock block;
    block.universal = universal;
    universal = !universal;
    int width = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < width && used < symbols.size(); ++i) {
      block.symbols.push_back(symbols[used++]);
    }
    sys.prefix.push_back(std::move(block));
  }
  std::vector<std::string> bound = sys.bound_symbols();
  auto random_word = [&] {
    Word w;
    int len = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      const std::string& sym = bound[rng() % bound.size()];
      int power = 1 + static_cast<int>(rng() % 3);
      for (int p = 0; p < power; ++p) {
        w.syms.push_back(sym);
      }
    }
    return w;
  };
  int disjuncts = 1 + static_cast<int>(rng() % 2);
  for (int d = 0; d < disjuncts; ++d) {
    std::vector<Atom> conj;
    int atoms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < atoms; ++i) {
      switch (rng() % 5) {
        case 0:
          conj.push_back({Atom::Kind::InV, random_word(), random_word()});
          break;
        case 1:
          conj.push_back({Atom::Kind::InE, random_word(), {}});
          break;
        case 2:
          conj.push_back({Atom::Kind::InG, random_word(), {}});
          break;
        case 3:
          conj.push_back({Atom::Kind::Green, random_word(), random_word(),
                          static_cast<GreenRel>(rng() % 5)});
          break;
        default:
          conj.push_back({Atom::Kind::WordEq, random_word(), random_word()});
      }
    }
    sys.matrix.push_back(std::move(conj));
  }
  sys.check_valid();
  return sys;
}

}  // namespace

TEST_CASE("parse after render is the identity on randomly generated systems") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1200; ++i) {
    EquationSystem sys = random_system(rng);
    CAPTURE(render(sys));
    EquationSystem back = parse_system(render(sys));
    REQUIRE(back == sys);
  }
}

TEST_CASE("power expansion length equals the sum of exponents") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    int e1 = 1 + static_cast<int>(rng() % 9), e2 = 1 + static_cast<int>(rng() % 9);
    std::string text = "exists x y. x^" + std::to_string(e1) + "*y^" +
                       std::to_string(e2) + " = y";
    EquationSystem sys = parse_system(text);
    CHECK(sys.matrix[0][0].lhs.syms.size() == static_cast<std::size_t>(e1 + e2));
  }
}
