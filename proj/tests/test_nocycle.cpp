#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nocycle/coinvariant.hpp"
#include "nocycle/nocycle.hpp"

using namespace nocycle;
using fdrep::FDModule;

namespace {

// Basis index of a single arrow in the algebra.
size_t arrow_index(const NoCycleAlg& alg, const Letter& l) {
  uint32_t start = l.kind == Kind::a ? l.index : (l.index + 1) % alg.k;
  return alg.index_of(l.kind, start, 1);
}

// Formal paths of length t built only from the algebra: adjacent letters must meet at a vertex,
// direct pairs must be nonzero paths, inverse pairs likewise, and a letter is never followed by its own inverse.
std::set<std::vector<uint32_t>> brute_S(const NoCycleAlg& alg, uint32_t t) {
  const uint32_t k = alg.k;
  std::set<std::vector<uint32_t>> out;
  std::vector<uint32_t> w(t, 0);
  while (true) {
    bool ok = true;
    for (size_t j = 0; j + 1 < t && ok; ++j) {
      Letter x = decode(w[j], k), y = decode(w[j + 1], k);
      size_t ax = arrow_index(alg, x), ay = arrow_index(alg, y);
      if (letter_source(x, k) != letter_target(y, k)) ok = false;
      else if (!x.inverse && !y.inverse) ok = alg.product(ax, ay) >= 0;   // x after y
      else if (x.inverse && y.inverse) ok = alg.product(ay, ax) >= 0;
      else ok = ax != ay;
    }
    // A run of k direct (or inverse) letters closes a cycle.
    if (ok && t == k) {
      bool all_direct = std::all_of(w.begin(), w.end(), [&](uint32_t c) { return !decode(c, k).inverse; });
      bool all_inverse = std::all_of(w.begin(), w.end(), [&](uint32_t c) { return decode(c, k).inverse; });
      if (all_direct || all_inverse) ok = false;
    }
    if (ok) out.insert(w);
    size_t s = 0;
    while (s < t && ++w[s] == 4 * k) w[s++] = 0;
    if (s == t) break;
  }
  return out;
}

size_t brute_class_count(const NoCycleAlg& alg, uint32_t t) {
  auto S = brute_S(alg, t);
  std::set<std::vector<uint32_t>> seen;
  size_t classes = 0;
  for (const auto& w : S) {
    if (seen.count(w)) continue;
    ++classes;
    std::vector<std::vector<uint32_t>> orbit{w};
    if (t == alg.k)
      for (size_t r = 1; r < t; ++r) {
        auto x = w;
        std::rotate(x.begin(), x.begin() + r, x.end());
        orbit.push_back(x);
      }
    size_t n = orbit.size();
    for (size_t i = 0; i < n; ++i) orbit.push_back(inverse(StringWord{alg.k, orbit[i]}).letters);
    for (auto& x : orbit) seen.insert(x);
  }
  return classes;
}

}  // namespace

TEST_CASE("dimension k(2k-1) and associativity") {
  for (uint32_t k : {1u, 2u, 3u, 4u, 5u}) {
    auto alg = build_nocycle(k, 5);
    CHECK(alg.dim() == k * (2 * k - 1));
    if (k <= 3) CHECK(check_associativity(alg));
  }
  CHECK(build_nocycle(1, 3).names == std::vector<std::string>{"e0"});
  CHECK_THROWS(build_nocycle(0, 3));
  CHECK_THROWS(build_nocycle(2, 4));
}

TEST_CASE("algebra structure") {
  auto alg = build_nocycle(3, 5);
  // e_i N e_i is spanned by e_i: no path of positive length starts and ends at one vertex.
  for (size_t x = 0; x < alg.dim(); ++x)
    if (alg.basis[x].kind != Kind::e) CHECK(alg.basis[x].start != alg.end(x));
  size_t a0 = alg.index_of(Kind::a, 0, 1), a1 = alg.index_of(Kind::a, 1, 1), a2 = alg.index_of(Kind::a, 2, 1);
  size_t b0 = alg.index_of(Kind::b, 1, 1);
  CHECK(alg.names[a0] == "a0");
  CHECK(alg.names[b0] == "b0");
  int a1a0 = alg.product(a1, a0);
  REQUIRE(a1a0 >= 0);
  CHECK(alg.names[a1a0] == "a1a0");
  CHECK(alg.product(a2, a1a0) < 0);  // full cycle
  CHECK(alg.product(a0, a1) < 0);    // not composable
  CHECK(alg.product(b0, a0) < 0);    // 0 -> 1 -> 0
  CHECK(alg.degree[a1a0] == -2);
  CHECK(alg.degree[b0] == 1);
  // The unit is the sum of idempotents.
  auto u = alg.unit();
  for (size_t x = 0; x < alg.dim(); ++x) CHECK(alg.multiply(u, alg.element(x)) == alg.element(x));
}

TEST_CASE("every product of basis paths is a basis path or zero, and degrees add") {
  for (uint32_t k : {2u, 3u, 4u}) {
    auto alg = build_nocycle(k, 3);
    for (size_t x = 0; x < alg.dim(); ++x)
      for (size_t y = 0; y < alg.dim(); ++y) {
        int r = alg.product(x, y);
        if (r >= 0) CHECK(alg.degree[r] == alg.degree[x] + alg.degree[y]);
      }
  }
}

TEST_CASE("letter codes and words") {
  const uint32_t k = 3;
  for (uint32_t c = 0; c < 4 * k; ++c) CHECK(encode(decode(c, k), k) == c);
  auto w = parse_word("a0 b2* a1", k);
  CHECK(to_string(w) == "a0 b2* a1");
  CHECK(in_S(w));
  CHECK(to_string(inverse(w)) == "a1* b2 a0*");
  CHECK(inverse(inverse(w)) == w);
  CHECK_THROWS(parse_word("c0", k));
  CHECK_THROWS(parse_word("a5", k));
  CHECK(!in_S(parse_word("a0 a1", k)));
  CHECK(in_S(parse_word("a1 a0", k)));
  CHECK(!in_S(parse_word("a2 a1 a0", k)));  // pure word at t = k
  CHECK(!in_S(parse_word("a0* a1* a2*", k)));
}

TEST_CASE("W_t counts against brute enumeration and rho-classes") {
  for (uint32_t k : {1u, 2u, 3u, 4u}) {
    auto alg = build_nocycle(k, 3);
    for (uint32_t t = 1; t <= k; ++t) {
      INFO("k=", k, " t=", t);
      auto W = enumerate_strings(k, t);
      CHECK(W.size() == brute_class_count(alg, t));
      if (t < k) CHECK(W.size() == k * (1u << t));
      else CHECK(W.size() == (1u << k) - 2);
      for (const auto& w : W) {
        CHECK(in_S(w));
        CHECK(canonical(w) == w);
      }
    }
  }
}

TEST_CASE("single arrows and pure words") {
  auto W = enumerate_strings(2, 1);
  std::vector<std::string> got;
  for (const auto& w : W) got.push_back(to_string(w));
  CHECK(got == std::vector<std::string>{"a0", "a1", "b0", "b1"});
  auto W3 = enumerate_strings(3, 3);
  for (const auto& w : W3) {
    auto s = to_string(w);
    CHECK(s != "a2 a1 a0");
    CHECK(s != "a0 a2 a1");
  }
}

TEST_CASE("string modules") {
  auto alg = build_nocycle(2, 3);
  auto st = string_module(alg, parse_word("a0", 2));
  CHECK(st.dim == 2);
  CHECK(st.gen("a0").at(0, 1) == 1);  // a0 z1 = z0
  CHECK(st.gen("a0").nnz() == 1);
  CHECK(st.gen("a1").is_zero());
  CHECK(st.gen("b0").is_zero());
  CHECK(st.gen("b1").is_zero());
  CHECK(st.gen("e1").at(0, 0) == 1);  // z0 at the head of a0
  CHECK(st.gen("e0").at(1, 1) == 1);
  st.validate();
  CHECK_THROWS(string_module(alg, parse_word("a1 b1*", 2)));
  for (uint32_t k : {2u, 3u, 4u}) {
    auto A = build_nocycle(k, 3);
    for (uint32_t t = 1; t < k; ++t) {
      auto W = enumerate_strings(k, t);
      std::vector<FDModule> mods;
      for (const auto& w : W) {
        auto m = string_module(A, w);
        INFO(to_string(w));
        CHECK(m.dim == t + 1);
        CHECK(fdrep::hom_dim(m, m) == 1);
        CHECK(fdrep::is_indecomposable(m));
        // Graded: one basis vector in each of t+1 consecutive degrees.
        auto g = *m.grading;
        std::sort(g.begin(), g.end());
        for (size_t j = 1; j < g.size(); ++j) CHECK(g[j] == g[j - 1] + 1);
        CHECK(fdrep::hom(m, m, 0).size() == 1);
        mods.push_back(m);
      }
      for (size_t i = 0; i < mods.size(); ++i)
        for (size_t j = i + 1; j < mods.size(); ++j) CHECK_FALSE(fdrep::is_isomorphic(mods[i], mods[j]));
    }
  }
}

TEST_CASE("a word and its inverse give isomorphic string modules") {
  auto alg = build_nocycle(4, 3);
  for (const auto& w : enumerate_strings(4, 3)) CHECK(fdrep::is_isomorphic(string_module(alg, w), string_module(alg, inverse(w))));
}

TEST_CASE("band modules") {
  auto alg = build_nocycle(3, 5);
  auto W = enumerate_strings(3, 3);
  REQUIRE(W.size() == 6);
  auto mixed = parse_word("a0 b2* a1", 3);
  REQUIRE(in_S(mixed));
  auto bd = band_module(alg, {mixed, 1});
  CHECK(bd.dim == 3);
  CHECK(fdrep::is_indecomposable(bd));
  CHECK_THROWS(band_module(alg, {mixed, 0}));
  CHECK_THROWS(band_module(alg, {parse_word("a0 b0*", 3), 1}));
  for (const auto& w : W) {
    std::vector<FDModule> by_lambda;
    for (uint32_t lam = 1; lam < 5; ++lam) {
      auto m = band_module(alg, {w, lam});
      CHECK(m.dim == 3);
      CHECK(fdrep::is_indecomposable(m));
      by_lambda.push_back(m);
    }
    for (size_t i = 0; i < by_lambda.size(); ++i)
      for (size_t j = i + 1; j < by_lambda.size(); ++j) CHECK_FALSE(fdrep::is_isomorphic(by_lambda[i], by_lambda[j]));
    // Rotation and inversion of the word give the same family.
    auto r = w;
    std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
    bool found = false;
    for (uint32_t lam = 1; lam < 5; ++lam) found |= fdrep::is_isomorphic(band_module(alg, {r, lam}), by_lambda[1]);
    CHECK(found);
  }
}

TEST_CASE("toy classification sweep") {
  auto alg = build_nocycle(2, 3);
  auto rep = toy_sweep(alg, 2);
  CHECK(rep.ok());
  CHECK(rep.catalog_size == 2 + 4 + 2 * 2);
  CHECK(rep.indecomposable > 0);
  auto rep3 = toy_sweep(build_nocycle(3, 3), 3);
  CHECK(rep3.ok());
  CHECK(rep3.catalog_size == 3 + 6 + 12 + 6 * 2);
  auto rep4 = toy_sweep(build_nocycle(4, 3), 4);
  CHECK(rep4.ok());
  CHECK(rep4.catalog_size == 4 + 8 + 16 + 32 + 14 * 2);
  auto rep1 = toy_sweep(build_nocycle(1, 3), 1);
  CHECK(rep1.ok());
  CHECK(rep1.catalog_size == 1);
}

TEST_CASE("skew coinvariant algebra and upsilon") {
  auto c = build_coinvariant(3, 7);
  CHECK(c.zeta == 2);
  CHECK(c.dim() == 15);
  CHECK_THROWS(build_coinvariant(3, 5));
  // associativity of C(n)
  for (size_t i = 0; i < c.dim(); ++i)
    for (size_t j = 0; j < c.dim(); ++j)
      for (size_t k = 0; k < c.dim(); ++k) {
        auto x = c.element(i), y = c.element(j), z = c.element(k);
        CHECK(c.multiply(c.multiply(x, y), z) == c.multiply(x, c.multiply(y, z)));
      }
  for (auto [n, q] : std::vector<std::pair<uint32_t, uint32_t>>{{1, 2}, {2, 3}, {3, 7}, {4, 5}, {5, 11}}) {
    auto rep = coinvariant_upsilon(n, q);
    INFO("n=", n, " q=", q);
    CHECK(rep.dim_c == n * (2 * n - 1));
    CHECK(rep.dim_n == rep.dim_c);
    CHECK(rep.relations_ok);
    CHECK(rep.multiplicative);
    CHECK(rep.unital);
    CHECK(rep.bijective);
    CHECK(rep.grading_ok);
  }
}
