#include "nocycle/coinvariant.hpp"

#include <stdexcept>

#include "scalars/fp.hpp"

namespace nocycle {

using fdrep::Vec;
using scalars::mod_add;
using scalars::mod_mul;
using scalars::mod_pow;

size_t SkewCoinvariant::index_of(int mono, uint32_t power) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].mono == mono && basis[i].power == power % n) return i;
  throw std::out_of_range("no such basis element");
}

Vec SkewCoinvariant::element(size_t i) const {
  Vec v(dim(), 0);
  v.at(i) = 1;
  return v;
}

Vec SkewCoinvariant::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim(), 0);
  const int N = static_cast<int>(n);
  for (size_t i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (!y[j]) continue;
      const int m = basis[i].mono, m2 = basis[j].mono;
      int prod;
      if (m == 0)
        prod = m2;
      else if (m2 == 0)
        prod = m;
      else if ((m > 0) != (m2 > 0))
        continue;  // XY = YX = 0
      else
        prod = m + m2;
      if (prod >= N || prod <= -N) continue;
      // g^a m' = zeta^(a * weight(m')) m' g^a
      int64_t e = static_cast<int64_t>(basis[i].power) * m2;
      uint32_t twist = mod_pow(zeta, static_cast<uint64_t>(((e % N) + N) % N), q);
      uint32_t c = mod_mul(mod_mul(x[i], y[j], q), twist, q);
      size_t r = index_of(prod, basis[i].power + basis[j].power);
      out[r] = mod_add(out[r], c, q);
    }
  }
  return out;
}

SkewCoinvariant build_coinvariant(uint32_t n, uint32_t q) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  if (!scalars::is_prime(q) || (q - 1) % n != 0) throw std::invalid_argument("need a prime q = 1 mod n");
  SkewCoinvariant c;
  c.n = n;
  c.q = q;
  c.zeta = scalars::root_of_unity(q, n).value();
  std::vector<int> monos{0};
  for (int s = 1; s < static_cast<int>(n); ++s) monos.push_back(s);
  for (int s = 1; s < static_cast<int>(n); ++s) monos.push_back(-s);
  for (int m : monos)
    for (uint32_t a = 0; a < n; ++a) {
      c.basis.push_back({m, a});
      std::string name = m == 0 ? "" : (m > 0 ? "X^" + std::to_string(m) : "Y^" + std::to_string(-m));
      if (a > 0) name += (name.empty() ? "" : " ") + std::string("g^") + std::to_string(a);
      c.names.push_back(name.empty() ? "1" : name);
      c.bidegree.push_back({m, m < 0 ? -m : m});
    }
  return c;
}

UpsilonReport coinvariant_upsilon(uint32_t n, uint32_t q) {
  SkewCoinvariant c = build_coinvariant(n, q);
  NoCycleAlg alg = build_nocycle(n, q);
  UpsilonReport rep;
  rep.n = n;
  rep.q = q;
  rep.zeta = c.zeta;
  rep.dim_c = c.dim();
  rep.dim_n = alg.dim();

  Vec X(alg.dim(), 0), Y(alg.dim(), 0), G(alg.dim(), 0), one = alg.unit();
  for (uint32_t i = 0; i < n; ++i) {
    if (n > 1) {
      X[alg.index_of(Kind::b, scalars::mod_reduce(static_cast<int64_t>(i) + 1, n), 1)] = 1;
      Y[alg.index_of(Kind::a, i, 1)] = 1;
    }
    G[alg.index_of(Kind::e, i, 0)] = mod_pow(c.zeta, (n - i) % n, q);
  }
  auto power = [&](const Vec& v, uint32_t e) {
    Vec r = one;
    for (uint32_t i = 0; i < e; ++i) r = alg.multiply(r, v);
    return r;
  };
  auto scale = [&](Vec v, uint32_t s) {
    for (auto& x : v) x = mod_mul(x, s, q);
    return v;
  };
  const Vec zero(alg.dim(), 0);
  rep.relations_ok = power(X, n) == zero && power(Y, n) == zero && alg.multiply(X, Y) == zero &&
                     alg.multiply(Y, X) == zero && power(G, n) == one &&
                     alg.multiply(G, X) == scale(alg.multiply(X, G), c.zeta) &&
                     scale(alg.multiply(G, Y), c.zeta) == alg.multiply(Y, G);

  for (const auto& b : c.basis) {
    Vec m = b.mono >= 0 ? power(X, static_cast<uint32_t>(b.mono)) : power(Y, static_cast<uint32_t>(-b.mono));
    rep.images.push_back(alg.multiply(m, power(G, b.power)));
  }
  auto image = [&](const Vec& coords) {
    Vec r = zero;
    for (size_t i = 0; i < coords.size(); ++i)
      for (size_t j = 0; j < r.size(); ++j) r[j] = mod_add(r[j], mod_mul(coords[i], rep.images[i][j], q), q);
    return r;
  };
  rep.multiplicative = true;
  for (size_t i = 0; i < c.dim() && rep.multiplicative; ++i)
    for (size_t j = 0; j < c.dim(); ++j)
      if (image(c.multiply(c.element(i), c.element(j))) != alg.multiply(rep.images[i], rep.images[j])) {
        rep.multiplicative = false;
        break;
      }
  rep.unital = rep.images[c.index_of(0, 0)] == one;
  rep.rank = fdrep::rank(fdrep::Mat::from_rows(rep.images, alg.dim(), q));
  rep.bijective = rep.rank == c.dim() && c.dim() == alg.dim();
  rep.grading_ok = true;
  for (size_t i = 0; i < c.dim(); ++i)
    for (size_t j = 0; j < alg.dim(); ++j)
      if (rep.images[i][j] && alg.degree[j] != c.bidegree[i].first) rep.grading_ok = false;
  return rep;
}

}  // namespace nocycle
