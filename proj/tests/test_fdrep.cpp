#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdrep/module.hpp"

using namespace fdrep;

namespace {

Mat random_mat(std::mt19937& rng, size_t r, size_t c, uint32_t p, int density = 100) {
  Mat m(r, c, p);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (int(rng() % 100) < density) m.at(i, j) = rng() % p;
  return m;
}

// Hom by solving X A_x = B_x X as one linear system in dimN*dimM unknowns.
size_t brute_hom_dim(const FDModule& m, const FDModule& n) {
  const size_t vars = n.dim * m.dim;
  Mat sys(0, vars, m.q);
  for (size_t x = 0; x < m.gens.size(); ++x) {
    const Mat& a = m.gens[x];
    const Mat& b = n.gen(m.names[x]);
    for (size_t i = 0; i < n.dim; ++i)
      for (size_t j = 0; j < m.dim; ++j) {
        Vec row(vars, 0);
        // (X A)_{ij} - (B X)_{ij}
        for (size_t k = 0; k < m.dim; ++k) row[i * m.dim + k] = (row[i * m.dim + k] + a.at(k, j)) % m.q;
        for (size_t k = 0; k < n.dim; ++k)
          row[k * m.dim + j] = (row[k * m.dim + j] + m.q - b.at(i, k)) % m.q;
        sys.append_row(row);
      }
  }
  return vars - rank(sys);
}

// Truncated polynomial ring k[x]/x^n, graded by powers of x.
FDModule truncated(size_t n, uint32_t q) {
  FDModule m(q, n, {"x"});
  for (size_t i = 0; i + 1 < n; ++i) m.gens[0].at(i + 1, i) = 1;
  std::vector<int64_t> g;
  for (size_t i = 0; i < n; ++i) g.push_back(static_cast<int64_t>(i));
  m.grading = g;
  return m;
}

FDModule random_module(std::mt19937& rng, size_t dim, uint32_t q, int density) {
  FDModule m(q, dim, {"a", "b"});
  for (auto& g : m.gens) g = random_mat(rng, dim, dim, q, density);
  return m;
}

// Idempotent search over all of End(M).
bool brute_indecomposable(const FDModule& m) {
  auto end = hom(m, m);
  const size_t e = end.size();
  std::vector<uint32_t> c(e, 0);
  Mat zero(m.dim, m.dim, m.q), id = Mat::identity(m.dim, m.q);
  for (;;) {
    Mat f(m.dim, m.dim, m.q);
    for (size_t i = 0; i < e; ++i) f = f + end[i].scaled(c[i]);
    if (f * f == f && f != zero && f != id) return false;
    size_t i = 0;
    while (i < e && ++c[i] == m.q) c[i++] = 0;
    if (i == e) break;
  }
  return m.dim > 0;
}

}  // namespace

TEST_CASE("linear algebra basics") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    uint32_t p = trial % 2 ? 5 : 7;
    Mat a = random_mat(rng, 6, 9, p, 60);
    Mat k = kernel(a);
    CHECK(k.rows() + rank(a) == 9);
    for (size_t i = 0; i < k.rows(); ++i) {
      Vec v = a * k.row_vec(i);
      CHECK(std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; }));
    }
    Mat s = random_mat(rng, 7, 7, p);
    auto inv = inverse(s);
    if (rank(s) == 7) {
      REQUIRE(inv);
      CHECK(s * *inv == Mat::identity(7, p));
    } else {
      CHECK(!inv);
    }
  }
  Echelon e(3, 5);
  CHECK(e.insert({1, 2, 3}));
  CHECK(!e.insert({2, 4, 1}));
  CHECK(e.insert({0, 1, 0}));
  CHECK(e.contains({1, 0, 3}));
  CHECK(!e.contains({0, 0, 1}));
}

TEST_CASE("spin hom agrees with the direct linear system") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t q = trial % 3 ? 3 : 2;
    int density = 15 + trial % 4 * 15;
    auto m = random_module(rng, 2 + rng() % 5, q, density);
    auto n = random_module(rng, 2 + rng() % 5, q, density);
    if (trial % 5 == 0) n = m;
    CHECK(hom_dim(m, n) == brute_hom_dim(m, n));
    CHECK(hom_dim(direct_sum(m, n), n) == hom_dim(m, n) + hom_dim(n, n));
    CHECK(hom_dim(m, direct_sum(m, n)) == hom_dim(m, m) + hom_dim(m, n));
  }
}

TEST_CASE("hom is additive in both arguments") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_module(rng, 3, 3, 40), b = random_module(rng, 2, 3, 40), c = random_module(rng, 3, 3, 40);
    CHECK(hom_dim(direct_sum(a, b), c) == hom_dim(a, c) + hom_dim(b, c));
    CHECK(hom_dim(c, direct_sum(a, b)) == hom_dim(c, a) + hom_dim(c, b));
  }
}

TEST_CASE("graded hom of truncated polynomial modules") {
  auto m3 = truncated(3, 5), m2 = truncated(2, 5);
  CHECK(hom_dim(m3, m3) == 3);
  CHECK(hom_dim(m3, m3, 0) == 1);
  CHECK(hom_dim(m3, m3, -1) == 1);  // multiplication by x raises degree by one
  CHECK(hom_dim(m3, m3, 3) == 0);
  CHECK(hom_dim(m3, m2) == 2);
  CHECK(hom_dim(m2, m3) == 2);
  CHECK(is_isomorphic(m3, shifted(m3, 4), -4));
  CHECK(!is_isomorphic(m3, shifted(m3, 4), 4));
}

TEST_CASE("indecomposability agrees with idempotent search") {
  std::mt19937 rng(31);
  size_t checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    uint32_t q = trial % 2 ? 2 : 3;
    FDModule m = trial % 3 == 0   ? direct_sum(random_module(rng, 2, q, 40), random_module(rng, 3, q, 40))
                 : trial % 3 == 1 ? random_module(rng, 2 + rng() % 6, q, 25)
                                  : direct_sum(truncated(2 + rng() % 3, q), truncated(1 + rng() % 3, q));
    if (m.dim > 12 || hom_dim(m, m) > 9) continue;
    CHECK(is_indecomposable(m) == brute_indecomposable(m));
    ++checked;
  }
  CHECK(checked > 30);
  CHECK(is_indecomposable(truncated(5, 7)));
  CHECK(!is_indecomposable(direct_sum(truncated(2, 7), truncated(2, 7))));
}

TEST_CASE("submodules, quotients and series of a uniserial module") {
  auto m = truncated(4, 3);
  std::vector<FDModule> simples{truncated(1, 3)};
  Mat rad = radical(m, simples);
  CHECK(rad.rows() == 3);
  Mat soc = socle(m, simples);
  CHECK(soc.rows() == 1);
  auto sub = submodule(m, rad);
  CHECK(sub.dim == 3);
  CHECK(is_isomorphic(sub, truncated(3, 3), 1));
  auto quo = quotient(m, soc);
  CHECK(quo.module.dim == 3);
  CHECK(is_isomorphic(quo.module, truncated(3, 3), 0));
  CHECK(composition_multiplicities(m, simples) == std::vector<size_t>{4});

  auto top = loewy_series(m, simples, Series::radical);
  auto bottom = loewy_series(m, simples, Series::socle);
  REQUIRE(top.size() == 4);
  REQUIRE(bottom.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(top[i].parts.size() == 1);
    CHECK(*top[i].parts[0].shift == static_cast<int64_t>(i));
    CHECK(*bottom[3 - i].parts[0].shift == static_cast<int64_t>(i));
  }
  CHECK_THROWS_AS(submodule(m, Mat::from_rows({{1, 0, 0, 0}}, 4, 3)), std::invalid_argument);
}

TEST_CASE("composition factors of a two-simple module") {
  // Path algebra of 1 -> 2: simples S1, S2 and the projective P1 with top S1.
  auto simple = [](int which) {
    FDModule s(5, 1, {"e1", "e2", "x"});
    s.gens[which].at(0, 0) = 1;
    return s;
  };
  FDModule p1(5, 2, {"e1", "e2", "x"});
  p1.gens[0].at(0, 0) = 1;
  p1.gens[1].at(1, 1) = 1;
  p1.gens[2].at(1, 0) = 1;
  std::vector<FDModule> simples{simple(0), simple(1)};
  CHECK(composition_multiplicities(p1, simples) == std::vector<size_t>{1, 1});
  auto series = loewy_series(p1, simples);
  REQUIRE(series.size() == 2);
  CHECK(series[0].parts[0].simple == 0);
  CHECK(series[1].parts[0].simple == 1);
  CHECK(is_indecomposable(p1));
  CHECK_THROWS_AS(composition_multiplicities(p1, {simple(0)}), UnknownFactor);
}
