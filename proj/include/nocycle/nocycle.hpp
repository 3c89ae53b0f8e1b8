#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "fdrep/module.hpp"

namespace nocycle {

// Arrows a_i : i -> i+1 and b_i : i+1 -> i, indices mod k.
// A basis path is a vertex idempotent or a run of one arrow kind of length < k.
enum class Kind : uint8_t { e, a, b };

struct Path {
  Kind kind = Kind::e;
  uint32_t start = 0;
  uint32_t length = 0;
};

struct NoCycleAlg {
  uint32_t k = 1;
  uint32_t q = 2;
  std::vector<Path> basis;
  std::vector<std::string> names;
  std::vector<int64_t> degree;  // a: -1, b: +1 per letter
  std::vector<int> table;       // table[x * dim + y] = index of x*y (y applied first), -1 for zero

  size_t dim() const { return basis.size(); }
  int product(size_t x, size_t y) const { return table[x * dim() + y]; }
  size_t index_of(Kind kind, uint32_t start, uint32_t length) const;  // throws if absent
  uint32_t end(size_t x) const;

  fdrep::Vec multiply(const fdrep::Vec& x, const fdrep::Vec& y) const;
  fdrep::Vec unit() const;
  fdrep::Vec element(size_t basis_index) const;
};

NoCycleAlg build_nocycle(uint32_t k, uint32_t q);
bool check_associativity(const NoCycleAlg& alg);

// Generator names of every module: e0.., a0.., b0..
std::vector<std::string> generator_names(uint32_t k);

// Letter codes in the canonical order a_0<..<a_{k-1}<b_0<..<b_{k-1}<a_0*<..<b_{k-1}*.
struct Letter {
  Kind kind = Kind::a;
  uint32_t index = 0;
  bool inverse = false;
};
uint32_t encode(const Letter& l, uint32_t k);
Letter decode(uint32_t code, uint32_t k);

struct StringWord {
  uint32_t k = 1;
  std::vector<uint32_t> letters;

  size_t length() const { return letters.size(); }
  bool operator==(const StringWord& o) const { return k == o.k && letters == o.letters; }
  bool operator<(const StringWord& o) const { return letters < o.letters; }
};

struct BandWord {
  StringWord word;
  uint32_t lambda = 1;
};

std::string to_string(const StringWord& w);  // "a0 b2* a1"
StringWord parse_word(const std::string& s, uint32_t k);

// Travel endpoints of a formal letter: the module rules send the basis vector at source to target.
uint32_t letter_source(const Letter& l, uint32_t k);
uint32_t letter_target(const Letter& l, uint32_t k);

std::vector<uint32_t> successors(uint32_t code, uint32_t k);
bool in_S(const StringWord& w);  // successor rules, plus the pure-word exclusion at t = k
StringWord inverse(const StringWord& w);
StringWord canonical(const StringWord& w);

// One canonical representative per class, sorted.
std::vector<StringWord> enumerate_strings(uint32_t k, uint32_t t);

fdrep::FDModule simple_module(const NoCycleAlg& alg, uint32_t vertex);
fdrep::FDModule string_module(const NoCycleAlg& alg, const StringWord& c);  // graded
fdrep::FDModule band_module(const NoCycleAlg& alg, const BandWord& b);

// Vertex of each basis vector, read off the idempotent matrices.
std::vector<uint32_t> vertex_support(const fdrep::FDModule& m, uint32_t k);

// Every string, simple and band module of dimension <= max_dim, with a label.
struct CatalogEntry {
  std::string label;
  fdrep::FDModule module;
};
std::vector<CatalogEntry> catalog(const NoCycleAlg& alg, size_t max_dim);

// Brute force over all representations of the quiver with relations up to max_dim.
struct SweepReport {
  size_t representations = 0;
  size_t indecomposable = 0;
  size_t unmatched = 0;      // indecomposables with no catalog match
  size_t ambiguous = 0;      // indecomposables matching two or more entries
  size_t catalog_size = 0;
  size_t catalog_missed = 0; // catalog entries never produced
  bool ok() const { return unmatched == 0 && ambiguous == 0 && catalog_missed == 0; }
};
SweepReport toy_sweep(const NoCycleAlg& alg, size_t max_dim);

}  // namespace nocycle
