#ifndef SEMIEQ_CORPUS_HPP_
#define SEMIEQ_CORPUS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "semieq/semigroup.hpp"

namespace semieq {

struct CorpusEntry {
  std::string name;        // unique
  std::string provenance;  // family descriptor or file path
  FiniteSemigroup sg;
};

class Corpus {
 public:
  void add(std::string name, std::string provenance, FiniteSemigroup sg);
  const std::vector<CorpusEntry>& entries() const noexcept { return entries_; }
  const CorpusEntry* find(const std::string& name) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<CorpusEntry> entries_;
};

/// The curated test corpus: cyclic groups to Z6, chain semilattices,
/// null/left-zero/right-zero families, monogenic semigroups with index and
/// period up to 3, Brandt and truncated Brandt members, the order-17
/// counterexample band, T2, T3, U3, and a few direct products.
/// Deterministic across runs.
const Corpus& builtin_corpus();

// Cayley table file format:
//   line 1: n
//   lines 2..n+1: n whitespace-separated integers in [0,n)
//   optional final line: labels: a b c ...
// '#' starts a comment line.
FiniteSemigroup load_table(const std::string& path);
FiniteSemigroup read_table(std::istream& in, const std::string& origin);
void write_table(std::ostream& out, const FiniteSemigroup& s);

/// Corpus manifest: one `name = descriptor` or `name = file:<path>` per
/// line, '#' comments.
Corpus load_manifest(const std::string& path);

}  // namespace semieq

#endif  // SEMIEQ_CORPUS_HPP_
