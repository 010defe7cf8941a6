#include "semieq/corpus.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "semieq/families.hpp"

namespace semieq {

void Corpus::add(std::string name, std::string provenance, FiniteSemigroup sg) {
  if (find(name) != nullptr) {
    throw Error(ErrorCode::UsageError, "duplicate corpus name: " + name);
  }
  entries_.push_back({std::move(name), std::move(provenance), std::move(sg)});
}

const CorpusEntry* Corpus::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) {
      return &e;
    }
  }
  return nullptr;
}

const Corpus& builtin_corpus() {
  static const Corpus corpus = [] {
    Corpus c;
    auto fam = [&c](const std::string& descriptor) {
      c.add(descriptor, descriptor, make_family(descriptor));
    };
    for (int n = 1; n <= 6; ++n) {
      fam("Zn:" + std::to_string(n));
    }
    for (int k = 2; k <= 4; ++k) {
      fam("chain:" + std::to_string(k));
    }
    fam("null:2");
    fam("null:3");
    for (int k = 2; k <= 3; ++k) {
      fam("lz:" + std::to_string(k));
      fam("rz:" + std::to_string(k));
    }
    c.add("rect:2x2", "lz:2 x rz:2", direct_product(left_zero(2), right_zero(2)));
    for (int i = 1; i <= 3; ++i) {
      for (int p = 1; p <= 3; ++p) {
        fam("mono:" + std::to_string(i) + "," + std::to_string(p));
      }
    }
    fam("brandt:2");
    fam("brandt:3");
    for (int i = 1; i <= 3; ++i) {
      fam("btrunc:" + std::to_string(i));
    }
    fam("zrb:4x4:1100,1110,0001,1010");
    fam("T:2");
    fam("T:3");
    fam("U3");
    c.add("null:2 x null:2", "null:2 x null:2",
          direct_product(null_semigroup(2), null_semigroup(2)));
    c.add("Zn:2 x Zn:2", "Zn:2 x Zn:2",
          direct_product(cyclic_group(2), cyclic_group(2)));
    c.add("Zn:2 x Zn:3", "Zn:2 x Zn:3",
          direct_product(cyclic_group(2), cyclic_group(3)));
    c.add("chain:2 x Zn:2", "chain:2 x Zn:2",
          direct_product(chain_semilattice(2), cyclic_group(2)));
    c.add("brandt:2 x Zn:2", "brandt:2 x Zn:2",
          direct_product(brandt(2), cyclic_group(2)));
    return c;
  }();
  return corpus;
}

namespace {

[[noreturn]] void parse_fail(const std::string& origin, const std::string& msg) {
  throw Error(ErrorCode::ParseError, origin + ": " + msg);
}

}  // namespace

FiniteSemigroup read_table(std::istream& in, const std::string& origin) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) {
      raw = raw.substr(0, hash);
    }
    if (raw.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    lines.push_back(raw);
  }
  if (lines.empty()) {
    parse_fail(origin, "empty file");
  }
  long long n = 0;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    if (!(head >> n) || n <= 0 || (head >> extra)) {
      parse_fail(origin, "first line must be the order");
    }
  }
  if (lines.size() < static_cast<std::size_t>(n) + 1) {
    parse_fail(origin, "expected " + std::to_string(n) + " table rows");
  }
  std::vector<element> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (long long i = 0; i < n; ++i) {
    std::istringstream row(lines[1 + i]);
    for (long long j = 0; j < n; ++j) {
      long long v;
      if (!(row >> v)) {
        parse_fail(origin, "row " + std::to_string(i) + " is too short");
      }
      if (v < 0 || v >= n) {
        parse_fail(origin, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + std::to_string(v) + " out of range");
      }
      flat.push_back(static_cast<element>(v));
    }
    std::string extra;
    if (row >> extra) {
      parse_fail(origin, "row " + std::to_string(i) + " is too long");
    }
  }
  std::vector<std::string> labels;
  if (lines.size() > static_cast<std::size_t>(n) + 1) {
    if (lines.size() != static_cast<std::size_t>(n) + 2) {
      parse_fail(origin, "unexpected trailing lines");
    }
    std::istringstream tail(lines.back());
    std::string key;
    tail >> key;
    if (key != "labels:") {
      parse_fail(origin, "expected 'labels:' line");
    }
    std::string l;
    while (tail >> l) {
      labels.push_back(l);
    }
    if (labels.size() != static_cast<std::size_t>(n)) {
      parse_fail(origin, "label count does not match order");
    }
  }
  return FiniteSemigroup::validated(static_cast<element>(n), std::move(flat),
                                    std::move(labels));
}

FiniteSemigroup load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  return read_table(in, path);
}

void write_table(std::ostream& out, const FiniteSemigroup& s) {
  out << s.order() << "\n";
  for (element i = 0; i < s.order(); ++i) {
    for (element j = 0; j < s.order(); ++j) {
      out << (j ? " " : "") << s.product(i, j);
    }
    out << "\n";
  }
  if (s.has_labels()) {
    out << "labels:";
    for (const auto& l : s.labels()) {
      out << " " << l;
    }
    out << "\n";
  }
}

Corpus load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  Corpus c;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) {
      raw = raw.substr(0, hash);
    }
    if (raw.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    auto eq = raw.find('=');
    if (eq == std::string::npos) {
      parse_fail(path, "line " + std::to_string(lineno) + ": expected name = descriptor");
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      auto end = s.find_last_not_of(" \t\r");
      return end == std::string::npos ? std::string{} : s.substr(0, end + 1);
    };
    std::string name = trim(raw.substr(0, eq));
    std::string what = trim(raw.substr(eq + 1));
    if (name.empty() || what.empty()) {
      parse_fail(path, "line " + std::to_string(lineno) + ": empty name or descriptor");
    }
    if (what.rfind("file:", 0) == 0) {
      c.add(name, what, load_table(what.substr(5)));
    } else {
      c.add(name, what, make_family(what));
    }
  }
  return c;
}

}  // namespace semieq
