#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace scalars {

bool is_prime(uint64_t n);

inline uint32_t mod_reduce(int64_t x, uint32_t p) {
  int64_t r = x % static_cast<int64_t>(p);
  return static_cast<uint32_t>(r < 0 ? r + p : r);
}
inline uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}
inline uint32_t mod_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);
uint32_t mod_inv(uint32_t a, uint32_t p);  // throws std::domain_error for a == 0

// Element of the prime field F_p.  Mixing moduli throws.
class FpElem {
 public:
  FpElem(int64_t value, uint32_t p);
  static FpElem unchecked(uint32_t value, uint32_t p) { return FpElem(value, p, 0); }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  FpElem operator+(const FpElem& o) const;
  FpElem operator-(const FpElem& o) const;
  FpElem operator*(const FpElem& o) const;
  FpElem operator/(const FpElem& o) const;
  FpElem operator-() const { return unchecked(mod_neg(v_, p_), p_); }
  FpElem inv() const { return unchecked(mod_inv(v_, p_), p_); }
  FpElem pow(uint64_t e) const { return unchecked(mod_pow(v_, e, p_), p_); }
  bool operator==(const FpElem& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool is_zero() const { return v_ == 0; }

 private:
  FpElem(uint32_t v, uint32_t p, int) : v_(v), p_(p) {}
  void same_field(const FpElem& o) const;
  uint32_t v_;
  uint32_t p_;
};

uint32_t multiplicative_order(uint32_t a, uint32_t p);

// Smallest element of F_q of multiplicative order exactly n.
FpElem root_of_unity(uint32_t q, uint32_t n);

// Smallest prime q with q = 1 mod n.
uint32_t smallest_prime_1_mod(uint32_t n);

}  // namespace scalars
