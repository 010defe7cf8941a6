#include "semieq/eqdsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace semieq {

namespace {

constexpr std::size_t kMaxExponent = 10000;

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"forall", "exists", "in", "V",
                                              "E",      "G",      "R",  "L",
                                              "H",      "D",      "J"};
  return words;
}

struct Token {
  enum class Kind { Ident, Int, Dot, Star, Caret, Amp, Bar, Eq, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t value = 0;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at line " + std::to_string(current_.line) +
                                            ", column " + std::to_string(current_.col));
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      current_.text = "<end>";
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      current_.kind = k;
      current_.text = std::string(1, c);
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '.': return single(Token::Kind::Dot);
      case '*': return single(Token::Kind::Star);
      case '^': return single(Token::Kind::Caret);
      case '&': return single(Token::Kind::Amp);
      case '|': return single(Token::Kind::Bar);
      case '=': return single(Token::Kind::Eq);
      case '(': return single(Token::Kind::LParen);
      case ')': return single(Token::Kind::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      current_.kind = Token::Kind::Int;
      current_.text = text_.substr(start, pos_ - start);
      current_.value = std::stoull(current_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      current_.kind = Token::Kind::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    throw Error(ErrorCode::SyntaxError,
                "unexpected character '" + std::string(1, c) + "' at line " +
                    std::to_string(line_) + ", column " + std::to_string(col_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  EquationSystem parse() {
    EquationSystem sys;
    while (lex_.peek().kind == Token::Kind::Ident &&
           (lex_.peek().text == "forall" || lex_.peek().text == "exists")) {
      bool universal = lex_.take().text == "forall";
      std::vector<std::string> symbols;
      while (lex_.peek().kind == Token::Kind::Ident &&
             !reserved_words().count(lex_.peek().text)) {
        symbols.push_back(lex_.take().text);
      }
      if (symbols.empty()) {
        lex_.fail("quantifier block needs at least one symbol");
      }
      expect(Token::Kind::Dot, "'.' after quantifier block");
      // merge same-quantifier neighbours into alternating normal form
      if (!sys.prefix.empty() && sys.prefix.back().universal == universal) {
        auto& tail = sys.prefix.back().symbols;
        tail.insert(tail.end(), symbols.begin(), symbols.end());
      } else {
        sys.prefix.push_back({universal, std::move(symbols)});
      }
    }
    if (sys.prefix.empty()) {
      lex_.fail("expected 'forall' or 'exists'");
    }
    check_binders(sys);
    sys.matrix.push_back(parse_disjunct());
    while (lex_.peek().kind == Token::Kind::Bar) {
      lex_.take();
      sys.matrix.push_back(parse_disjunct());
    }
    if (lex_.peek().kind != Token::Kind::End) {
      lex_.fail("trailing input after matrix");
    }
    check_bound(sys);
    return sys;
  }

 private:
  void expect(Token::Kind k, const char* what) {
    if (lex_.peek().kind != k) {
      lex_.fail(std::string("expected ") + what);
    }
    lex_.take();
  }

  void check_binders(const EquationSystem& sys) {
    std::set<std::string> seen;
    for (const auto& block : sys.prefix) {
      for (const auto& sym : block.symbols) {
        if (!seen.insert(sym).second) {
          throw Error(ErrorCode::DuplicateBinder, "symbol '" + sym + "' bound twice");
        }
        bound_.insert(sym);
      }
    }
  }

  void check_bound(const EquationSystem& sys) {
    for (const auto& disjunct : sys.matrix) {
      for (const auto& atom : disjunct) {
        for (const Word* w : {&atom.lhs, &atom.rhs}) {
          for (const auto& sym : w->syms) {
            if (!bound_.count(sym)) {
              throw Error(ErrorCode::UnboundSymbol,
                          "symbol '" + sym + "' is not bound by the prefix");
            }
          }
        }
      }
    }
  }

  std::vector<Atom> parse_disjunct() {
    std::vector<Atom> atoms;
    atoms.push_back(parse_atom());
    while (lex_.peek().kind == Token::Kind::Amp) {
      lex_.take();
      atoms.push_back(parse_atom());
    }
    return atoms;
  }

  Atom parse_atom() {
    Word lhs = parse_word();
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Eq) {
      lex_.take();
      return {Atom::Kind::WordEq, std::move(lhs), parse_word()};
    }
    if (t.kind == Token::Kind::Ident && t.text == "in") {
      lex_.take();
      const Token& target = lex_.peek();
      if (target.kind != Token::Kind::Ident) {
        lex_.fail("expected V(...), E or G after 'in'");
      }
      if (target.text == "E") {
        lex_.take();
        return {Atom::Kind::InE, std::move(lhs), {}};
      }
      if (target.text == "G") {
        lex_.take();
        return {Atom::Kind::InG, std::move(lhs), {}};
      }
      if (target.text == "V") {
        lex_.take();
        expect(Token::Kind::LParen, "'(' after V");
        Word arg = parse_word();
        expect(Token::Kind::RParen, "')'");
        return {Atom::Kind::InV, std::move(lhs), std::move(arg)};
      }
      lex_.fail("expected V(...), E or G after 'in'");
    }
    if (t.kind == Token::Kind::Ident) {
      GreenRel rel;
      if (t.text == "R") {
        rel = GreenRel::R;
      } else if (t.text == "L") {
        rel = GreenRel::L;
      } else if (t.text == "H") {
        rel = GreenRel::H;
      } else if (t.text == "D") {
        rel = GreenRel::D;
      } else if (t.text == "J") {
        rel = GreenRel::J;
      } else {
        lex_.fail("expected '=', 'in' or a Green relation after word");
      }
      lex_.take();
      Word rhs = parse_word();
      return {Atom::Kind::Green, std::move(lhs), std::move(rhs), rel};
    }
    lex_.fail("expected '=', 'in' or a Green relation after word");
  }

  Word parse_word() {
    Word w;
    parse_factor(w);
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      parse_factor(w);
    }
    return w;
  }

  void parse_factor(Word& w) {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Ident || reserved_words().count(t.text)) {
      lex_.fail("expected a symbol");
    }
    std::string sym = lex_.take().text;
    std::size_t power = 1;
    if (lex_.peek().kind == Token::Kind::Caret) {
      lex_.take();
      if (lex_.peek().kind != Token::Kind::Int) {
        lex_.fail("expected an integer exponent");
      }
      power = lex_.take().value;
      if (power == 0 || power > kMaxExponent) {
        lex_.fail("exponent out of range [1," + std::to_string(kMaxExponent) + "]");
      }
    }
    for (std::size_t i = 0; i < power; ++i) {
      w.syms.push_back(sym);
    }
  }

  Lexer lex_;
  std::set<std::string> bound_;
};

}  // namespace

std::vector<std::string> EquationSystem::bound_symbols() const {
  std::vector<std::string> out;
  for (const auto& block : prefix) {
    out.insert(out.end(), block.symbols.begin(), block.symbols.end());
  }
  return out;
}

std::size_t EquationSystem::arity() const { return bound_symbols().size(); }

void EquationSystem::check_valid() const {
  if (prefix.empty()) {
    throw Error(ErrorCode::UsageError, "system has an empty prefix");
  }
  std::set<std::string> bound;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].symbols.empty()) {
      throw Error(ErrorCode::UsageError, "empty quantifier block");
    }
    if (i > 0 && prefix[i].universal == prefix[i - 1].universal) {
      throw Error(ErrorCode::UsageError, "adjacent blocks with the same quantifier");
    }
    for (const auto& sym : prefix[i].symbols) {
      if (!bound.insert(sym).second) {
        throw Error(ErrorCode::DuplicateBinder, "symbol '" + sym + "' bound twice");
      }
    }
  }
  if (matrix.empty()) {
    throw Error(ErrorCode::UsageError, "empty matrix");
  }
  for (const auto& disjunct : matrix) {
    if (disjunct.empty()) {
      throw Error(ErrorCode::UsageError, "empty disjunct");
    }
    for (const auto& atom : disjunct) {
      bool needs_rhs = atom.kind == Atom::Kind::WordEq || atom.kind == Atom::Kind::InV ||
                       atom.kind == Atom::Kind::Green;
      if (atom.lhs.syms.empty() || (needs_rhs && atom.rhs.syms.empty())) {
        throw Error(ErrorCode::UsageError, "empty word in atom");
      }
      for (const Word* w : {&atom.lhs, &atom.rhs}) {
        for (const auto& sym : w->syms) {
          if (!bound.count(sym)) {
            throw Error(ErrorCode::UnboundSymbol,
                        "symbol '" + sym + "' is not bound by the prefix");
          }
        }
      }
    }
  }
}

EquationSystem parse_system(const std::string& text) {
  return Parser(text).parse();
}

std::vector<EquationSystem> parse_systems(const std::string& text) {
  std::vector<EquationSystem> out;
  std::string stanza;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    if (stanza.find_first_not_of(" \t\r\n") != std::string::npos) {
      // skip stanzas that are only comments
      bool content = false;
      std::istringstream check(stanza);
      std::string l;
      while (std::getline(check, l)) {
        auto hash = l.find('#');
        if (hash != std::string::npos) {
          l = l.substr(0, hash);
        }
        if (l.find_first_not_of(" \t\r") != std::string::npos) {
          content = true;
        }
      }
      if (content) {
        out.push_back(parse_system(stanza));
      }
    }
    stanza.clear();
  };
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    auto end = trimmed.find_last_not_of(" \t\r");
    trimmed = end == std::string::npos ? "" : trimmed.substr(0, end + 1);
    if (trimmed == "---") {
      flush();
    } else {
      stanza += line;
      stanza += '\n';
    }
  }
  flush();
  return out;
}

EquationSystem desugar(EquationSystem sys) {
  auto concat = [](std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) {
      out.syms.insert(out.syms.end(), p->syms.begin(), p->syms.end());
    }
    return out;
  };
  for (auto& disjunct : sys.matrix) {
    std::vector<Atom> rewritten;
    for (auto& atom : disjunct) {
      switch (atom.kind) {
        case Atom::Kind::InV: {
          // x in V(a)  ->  a = a x a  &  x = x a x
          const Word& x = atom.lhs;
          const Word& a = atom.rhs;
          rewritten.push_back({Atom::Kind::WordEq, a, concat({&a, &x, &a})});
          rewritten.push_back({Atom::Kind::WordEq, x, concat({&x, &a, &x})});
          break;
        }
        case Atom::Kind::InE:
          rewritten.push_back(
              {Atom::Kind::WordEq, atom.lhs, concat({&atom.lhs, &atom.lhs})});
          break;
        default:
          rewritten.push_back(std::move(atom));
      }
    }
    disjunct = std::move(rewritten);
  }
  return sys;
}

std::string render(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.syms.size();) {
    std::size_t run = 1;
    while (i + run < w.syms.size() && w.syms[i + run] == w.syms[i]) {
      ++run;
    }
    if (!out.empty()) {
      out += "*";
    }
    out += w.syms[i];
    if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i += run;
  }
  return out;
}

std::string render(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::WordEq:
      return render(a.lhs) + " = " + render(a.rhs);
    case Atom::Kind::InV:
      return render(a.lhs) + " in V(" + render(a.rhs) + ")";
    case Atom::Kind::InE:
      return render(a.lhs) + " in E";
    case Atom::Kind::InG:
      return render(a.lhs) + " in G";
    case Atom::Kind::Green: {
      const char* names = "RLHDJ";
      return render(a.lhs) + " " + names[static_cast<int>(a.rel)] + " " + render(a.rhs);
    }
  }
  return {};
}

std::string render(const EquationSystem& sys) {
  std::string out;
  for (const auto& block : sys.prefix) {
    out += block.universal ? "forall" : "exists";
    for (const auto& sym : block.symbols) {
      out += " " + sym;
    }
    out += ". ";
  }
  for (std::size_t d = 0; d < sys.matrix.size(); ++d) {
    if (d > 0) {
      out += " | ";
    }
    for (std::size_t a = 0; a < sys.matrix[d].size(); ++a) {
      if (a > 0) {
        out += " & ";
      }
      out += render(sys.matrix[d][a]);
    }
  }
  return out;
}

}  // namespace semieq
