#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "scalars/laurent.hpp"

namespace ktheory {

using scalars::LaurentBi;

// Coordinates in O_1..O_n (index k-1 holds O_k).
struct KElt {
  std::vector<LaurentBi> coords;

  size_t n() const { return coords.size(); }
  bool operator==(const KElt& o) const { return coords == o.coords; }
  bool operator!=(const KElt& o) const { return !(*this == o); }
  KElt operator+(const KElt& o) const;
  KElt operator-(const KElt& o) const;
  KElt operator-() const;
  bool is_zero() const;
};
KElt operator*(const LaurentBi& c, const KElt& x);

KElt zero(uint32_t n);
KElt basis(uint32_t n, uint32_t k);  // O_k, 1 <= k <= n
KElt p01(uint32_t n);                // O_n + sum_{k<n} v^{n-k} O_k
KElt pn1n(uint32_t n);               // O_n + sum_{k<n} v'^n v^k O_k

// "[1 + v^-2]O1 - O3", "0".
std::string to_string(const KElt& x);
KElt parse_kelt(const std::string& text, uint32_t n);

enum class Convention { lusztig, categorified };

struct Token {
  enum Kind { T, sigma, scalar } kind = T;
  uint32_t index = 0;  // T: generator index mod n, stored in [0, n)
  int power = 1;       // +1 or -1 for T and sigma
  LaurentBi c;         // scalar tokens
};

// A product of tokens in written order; the rightmost token acts first.
struct HeckeWord {
  Convention conv = Convention::categorified;
  std::vector<Token> tokens;
};
// Tokens separated by spaces: "T1", "T0^-1", "s", "s^-1", "[v^-1 + v'^2]".  Tn is T0.
HeckeWord parse_word(const std::string& text, uint32_t n, Convention conv);
std::string to_string(const HeckeWord& w, uint32_t n);

// Throws std::invalid_argument for generators outside the convention.
KElt hecke_apply(const HeckeWord& w, const KElt& x);
KElt apply_T(Convention conv, uint32_t i, int power, const KElt& x);
KElt apply_sigma(int power, const KElt& x);  // categorified only

// theta_{varpi_{n-1}} from the line-bundle description (Lusztig side).
KElt theta_lusztig(const KElt& x);
HeckeWord theta_word_left(uint32_t n);   // s T_{n-2} .. T_1 T_n
HeckeWord theta_word_right(uint32_t n);  // T_{n-1} .. T_1 s

struct RelationResult {
  std::string name;
  bool ok = true;
  size_t checked = 0;
  std::string witness;  // first failing instance
};

struct RelationReport {
  uint32_t n = 0;
  std::vector<RelationResult> relations;
  int theta_discrepancy = 0;  // d with theta_cat = d * theta_lusztig, 0 if no scalar works
  int expected_discrepancy = 0;
  bool ok() const;
};
RelationReport verify_algebra_relations(uint32_t n);

KElt bar_dual(const KElt& x);

// Bigraded dimensions of Ext^m(S_i, S_j), keyed by (v'-degree, v-degree).
struct ExtTable {
  uint32_t n = 0;
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::map<std::pair<int64_t, int64_t>, uint32_t>> entries;

  // Empty map when the group vanishes.
  std::map<std::pair<int64_t, int64_t>, uint32_t> at(uint32_t i, uint32_t j, uint32_t m) const;
};
ExtTable ext_table(uint32_t n);

// (O_i | O_j), 1-based, from the Euler form of the Ext table.
std::vector<std::vector<LaurentBi>> gram(uint32_t n);
// The printed table for i >= j, reflected by dagger; the first matching case wins.
std::vector<std::vector<LaurentBi>> printed_gram(uint32_t n);

LaurentBi pairing(const KElt& x, const KElt& y);
bool signed_basis_check(const KElt& x);

enum class Direction { to_S, from_S };
// to_S: O-coordinates to [S_i]-coordinates, from_S the inverse.
KElt sbasis_change(const KElt& x, Direction d);

}  // namespace ktheory
