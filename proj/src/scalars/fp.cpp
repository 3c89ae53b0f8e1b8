#include "scalars/fp.hpp"

namespace scalars {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
  // extended Euclid; p need not be tiny
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
  return mod_reduce(t, p);
}

FpElem::FpElem(int64_t value, uint32_t p) : v_(0), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  v_ = mod_reduce(value, p);
}

void FpElem::same_field(const FpElem& o) const {
  if (p_ != o.p_) throw std::invalid_argument("F_p elements from different fields");
}

FpElem FpElem::operator+(const FpElem& o) const {
  same_field(o);
  return unchecked(mod_add(v_, o.v_, p_), p_);
}
FpElem FpElem::operator-(const FpElem& o) const {
  same_field(o);
  return unchecked(mod_sub(v_, o.v_, p_), p_);
}
FpElem FpElem::operator*(const FpElem& o) const {
  same_field(o);
  return unchecked(mod_mul(v_, o.v_, p_), p_);
}
FpElem FpElem::operator/(const FpElem& o) const {
  same_field(o);
  return unchecked(mod_mul(v_, mod_inv(o.v_, p_), p_), p_);
}

uint32_t multiplicative_order(uint32_t a, uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  uint32_t k = 1;
  uint64_t x = a;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

FpElem root_of_unity(uint32_t q, uint32_t n) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  if (!is_prime(q)) throw std::invalid_argument("root_of_unity: q=" + std::to_string(q) + " is not prime");
  if ((q - 1) % n != 0)
    throw std::invalid_argument("root_of_unity: q=" + std::to_string(q) + " is not 1 mod n=" + std::to_string(n) +
                                ", F_q has no element of order n");
  for (uint32_t a = 1; a < q; ++a)
    if (multiplicative_order(a, q) == n) return FpElem(a, q);
  throw std::logic_error("root_of_unity: no element found");  // unreachable: F_q^* is cyclic
}

uint32_t smallest_prime_1_mod(uint32_t n) {
  for (uint32_t q = n + 1;; q += n)
    if (is_prime(q)) return q;
}

}  // namespace scalars
