#pragma once
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace freealg {

// Ring letters are stored by precedence rank: letter 0 is the smallest.
using Letter = uint8_t;
using Word = std::vector<Letter>;

struct Alphabet {
  uint32_t q = 2;  // coefficient field F_q
  std::vector<std::string> names;
  std::vector<uint32_t> weights;
  std::vector<std::string> module_names;

  Alphabet() = default;
  // Letters listed from lowest to highest precedence, as (name, weight).
  Alphabet(uint32_t field, const std::vector<std::pair<std::string, uint32_t>>& letters,
           std::vector<std::string> modules = {});

  size_t size() const { return names.size(); }
  Letter letter(const std::string& name) const;
  int module(const std::string& name) const;
  uint32_t weight(const Word& w) const;
};

struct Monomial {
  uint32_t weight = 0;
  Word word;
  int tail = -1;  // module generator index, or -1 for ring monomials

  bool is_module() const { return tail >= 0; }
  // Weighted deg-lex: weight, then leftmost differing letter, then tail.
  bool operator<(const Monomial& o) const {
    if (weight != o.weight) return weight < o.weight;
    if (word != o.word) return word < o.word;
    return tail < o.tail;
  }
  bool operator==(const Monomial& o) const { return weight == o.weight && word == o.word && tail == o.tail; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator>(const Monomial& o) const { return o < *this; }
};

Monomial make_monomial(const Alphabet& al, Word w, int tail = -1);
// Concatenation; the left factor must not carry a tail.
Monomial concat(const Monomial& a, const Monomial& b);
std::string to_string(const Alphabet& al, const Monomial& m);

class FreeElt {
 public:
  using Table = std::map<Monomial, uint32_t>;

  FreeElt() = default;
  explicit FreeElt(uint32_t q) : q_(q) {}
  static FreeElt constant(uint32_t q, int64_t c);
  static FreeElt term(uint32_t q, const Monomial& m, int64_t c = 1);

  uint32_t q() const { return q_; }
  const Table& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_module() const;
  uint32_t coeff(const Monomial& m) const;

  void add_term(const Monomial& m, uint32_t c);  // c already reduced mod q
  FreeElt operator+(const FreeElt& o) const;
  FreeElt operator-(const FreeElt& o) const;
  FreeElt operator-() const;
  FreeElt& operator+=(const FreeElt& o);
  FreeElt& operator-=(const FreeElt& o);
  FreeElt scaled(uint32_t c) const;
  bool operator==(const FreeElt& o) const { return q_ == o.q_ && terms_ == o.terms_; }
  bool operator!=(const FreeElt& o) const { return !(*this == o); }

  // Leading coefficient made 1.
  FreeElt monic() const;

 private:
  uint32_t q_ = 2;
  Table terms_;
};

struct UndefinedProduct : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bilinear extension of concatenation; throws UndefinedProduct if f has module terms.
FreeElt multiply(const FreeElt& f, const FreeElt& g);
// u * f * v for monomials u (no tail) and v (tail allowed only if f is a ring element).
FreeElt sandwich(const Monomial& u, const FreeElt& f, const Monomial& v);

std::pair<Monomial, uint32_t> leading_term(const FreeElt& f);  // throws on zero

// Terms from highest to lowest, coefficients in (-q/2, q/2]: "h a - a h - a".
std::string to_string(const Alphabet& al, const FreeElt& f);
// Inverse of to_string; letters may be space- or '*'-separated or juxtaposed when unambiguous.
FreeElt parse(const Alphabet& al, const std::string& text);

}  // namespace freealg
