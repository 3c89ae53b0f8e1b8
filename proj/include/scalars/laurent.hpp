#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace scalars {

// Sparse element of Z[v'^{+-1}, v^{+-1}].  Key (s, t) is the monomial v'^s v^t.
class LaurentBi {
 public:
  using Exp = std::pair<int64_t, int64_t>;
  using Table = std::map<Exp, mpz_class>;

  LaurentBi() = default;
  LaurentBi(long c);  // NOLINT: integers embed as constants
  static LaurentBi monomial(const mpz_class& c, int64_t s, int64_t t);
  static LaurentBi vp(int64_t s = 1) { return monomial(1, s, 0); }  // v'^s
  static LaurentBi v(int64_t t = 1) { return monomial(1, 0, t); }   // v^t

  const Table& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int64_t s, int64_t t) const;

  LaurentBi operator+(const LaurentBi& o) const;
  LaurentBi operator-(const LaurentBi& o) const;
  LaurentBi operator*(const LaurentBi& o) const;
  LaurentBi operator-() const;
  LaurentBi& operator+=(const LaurentBi& o);
  LaurentBi& operator-=(const LaurentBi& o);
  bool operator==(const LaurentBi& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentBi& o) const { return !(*this == o); }

  LaurentBi dagger() const;  // v' -> v'^{-1}
  LaurentBi bar() const;     // v -> v^{-1}
  LaurentBi pow(unsigned e) const;

  // Largest / smallest v-exponent present; undefined on zero.
  int64_t max_t() const;
  int64_t min_t() const;

  // "1 + v^-2", "-v'^3*v^-1", "0".  Terms in increasing (s, t).
  std::string to_string() const;
  static LaurentBi parse(const std::string& text);

  struct Record {
    int64_t s, t;
    std::string c;
  };
  std::vector<Record> records() const;

 private:
  void add_term(const Exp& e, const mpz_class& c);
  Table terms_;
};

LaurentBi laurent_mul(const LaurentBi& f, const LaurentBi& g);
enum class Involution { dagger, bar };
LaurentBi laurent_involution(const LaurentBi& f, Involution kind);

}  // namespace scalars
