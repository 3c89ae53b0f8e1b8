#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modlie/modlie.hpp"
#include "scalars/fp.hpp"

using namespace modlie;
using fdrep::FDModule;
using fdrep::Mat;

namespace {

// Smallest submodule containing the first basis vector.
size_t cyclic_span(const FDModule& m) {
  Mat span(0, m.dim, m.q);
  fdrep::Vec v(m.dim, 0);
  v[0] = 1;
  std::vector<fdrep::Vec> todo{v};
  span.append_row(v);
  size_t rank = 1;
  while (!todo.empty()) {
    auto w = todo.back();
    todo.pop_back();
    for (const auto& g : m.gens) {
      auto x = g * w;
      Mat t = span;
      t.append_row(x);
      size_t r = fdrep::rank(t);
      if (r > rank) {
        span = t;
        rank = r;
        todo.push_back(x);
      }
    }
  }
  return rank;
}

const std::vector<std::pair<uint32_t, uint32_t>> kSamples{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 3}};

}  // namespace

TEST_CASE("subregular character") {
  auto chi = make_chi(4, 5);
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) CHECK(chi.table.at(i, j) == ((i == j + 1 && j + 1 <= 2) ? 1u : 0u));
  CHECK_THROWS(make_chi(3, 3));
  CHECK_THROWS(make_chi(3, 2));
  CHECK_THROWS(make_chi(3, 9));
  CHECK(make_chi(2, 3).table.is_zero());
}

TEST_CASE("flags and Borels") {
  auto chi = make_chi(3, 5);
  CHECK(flag_borel(chi, 0, 0).g == Mat::identity(3, 5));
  auto b = flag_borel(chi, 2, 0);
  REQUIRE(b.perm);
  CHECK(*b.perm == std::vector<uint32_t>{0, 2, 1});
  CHECK(!flag_borel(chi, 2, 3).perm);
  CHECK_THROWS(flag_borel(chi, 3, 0));
  CHECK_THROWS(flag_borel(chi, 0, 1));
  for (auto [k, a] : kSamples) {
    auto fb = flag_borel(chi, k, a);
    CHECK((fb.g * fb.ginv) == Mat::identity(3, 5));
    // The conjugated Borel stabilises the flag and chi vanishes on it.
    auto st = stabiliser(fb.g);
    for (size_t r = 0; r < st.rows(); ++r) {
      Mat x(3, 3, 5);
      for (size_t e = 0; e < 9; ++e) x.at(e / 3, e % 3) = st.at(r, e);
      CHECK(chi(x) == 0);
      Mat flag = flag_basis(3, 5, 3 - k, a);
      for (size_t j = 1; j <= 3; ++j) {
        Mat span(0, 3, 5), both(0, 3, 5);
        for (size_t c = 0; c < j; ++c) {
          span.append_row(flag.col_vec(c));
          both.append_row(flag.col_vec(c));
          both.append_row((x * flag).col_vec(c));
        }
        CHECK(fdrep::rank(both) == fdrep::rank(span));
      }
    }
  }
}

TEST_CASE("intersection points lie on neighbouring components") {
  // F_{n-k,0} closes off Pi_{k-1} and lies on Pi_k.
  for (uint32_t n : {3u, 4u}) {
    auto chi = make_chi(n, 5);
    for (uint32_t k = 2; k < n; ++k) {
      Mat on_k = stabiliser(flag_borel(chi, k, 0).g);
      Mat extra = stabiliser(flag_basis(n, 5, n - (k - 1) - 1, 0));
      CHECK(fdrep::rank(on_k) == fdrep::rank(fdrep::vstack(on_k, extra)));
    }
  }
}

TEST_CASE("the torus moves flags along components") {
  for (uint32_t n : {2u, 3u, 4u})
    for (uint32_t p : {5u, 7u})
      for (uint32_t j = 1; j < n; ++j)
        for (uint32_t a = 0; a < p; ++a) CHECK(torus_moves_flags(n, p, j, a));
}

TEST_CASE("weights") {
  auto w = make_weight(3, 5, {1, 2});
  CHECK(w.r0() == 2);
  CHECK(w.regular());
  CHECK(w.mu() == std::vector<int64_t>{1, 1, 0});
  CHECK(!make_weight(3, 5, {0, 2}).regular());
  CHECK(!make_weight(3, 5, {2, 3}).regular());
  CHECK_THROWS(make_weight(3, 5, {3, 3}));
  CHECK_THROWS(make_weight(3, 5, {1}));
  CHECK(dot_orbit(w).size() == 6);
}

TEST_CASE("restricted sl_2 Verma against the classical formulas") {
  for (auto [p, r] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 2}, {7, 4}}) {
    auto chi = make_chi(2, p);
    auto w = make_weight(2, p, {r});
    auto z = baby_verma_lie(chi, w, flag_borel(chi, 0, 0));
    REQUIRE(z.dim == p);
    const int64_t lam = static_cast<int64_t>(r) - 1;
    for (uint32_t m = 0; m < p; ++m) {
      CHECK(z.gen("H1").at(m, m) == scalars::mod_reduce(lam - 2 * m, p));
      if (m + 1 < p) CHECK(z.gen("E21").at(m + 1, m) == 1);
      if (m > 0) CHECK(z.gen("E12").at(m - 1, m) == scalars::mod_reduce(m * (lam - m + 1), p));
    }
    CHECK(z.gen("E21").nnz() == p - 1);
    CHECK(check_relations(z, chi).ok());
  }
  auto z3 = baby_verma_lie(make_chi(2, 3), make_weight(2, 3, {1}), flag_borel(make_chi(2, 3), 0, 0));
  CHECK(z3.gen("H1").at(0, 0) == 0);
  CHECK(z3.gen("H1").at(1, 1) == 1);  // -2
  CHECK(z3.gen("H1").at(2, 2) == 2);  // -4
}

TEST_CASE("sl_3 baby Vermas: dimension, relations, cyclic highest weight vector") {
  auto chi = make_chi(3, 5);
  auto w = make_weight(3, 5, {1, 2});
  std::mt19937 rng(7);
  for (auto [k, a] : kSamples) {
    auto bor = flag_borel(chi, k, a);
    auto z = baby_verma_lie(chi, w, bor);
    CHECK(z.dim == 125);
    auto rc = check_relations(z, chi);
    CHECK(rc.brackets);
    CHECK(rc.p_powers);
    CHECK(cyclic_span(z) == 125);
    // Random elements satisfy X^p - X^[p] = chi(X)^p as well.
    for (int t = 0; t < 3; ++t) {
      Mat x(3, 3, 5);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) x.at(i, j) = rng() % 5;
      x.at(2, 2) = scalars::mod_sub(0, scalars::mod_add(x.at(0, 0), x.at(1, 1), 5), 5);
      Mat lhs = act(z, x).pow(5);
      Mat rhs = act(z, x.pow(5)) + Mat::identity(125, 5).scaled(chi(x));
      CHECK(lhs == rhs);
    }
  }
  auto plus = baby_verma_lie(chi, w, flag_borel(chi, 0, 0));
  for (const char* e : {"E12", "E13", "E23"}) CHECK(plus.gen(e).col_vec(0) == fdrep::Vec(125, 0));
  CHECK(plus.gen("H1").at(0, 0) == 0);  // r_1 - 1
  CHECK(plus.gen("H2").at(0, 0) == 1);  // r_2 - 1
}

TEST_CASE("T_0 grading for alpha = 0") {
  auto chi = make_chi(3, 5);
  auto w = make_weight(3, 5, {1, 2});
  const std::vector<int64_t> tw{1, 1, -2};
  for (uint32_t k : {0u, 1u, 2u}) {
    auto z = baby_verma_lie(chi, w, flag_borel(chi, k, 0));
    REQUIRE(z.graded());
    const auto& deg = *z.grading;
    const auto names = generator_names(3);
    for (size_t x = 0; x < names.size(); ++x) {
      int64_t d = 0;
      if (names[x][0] == 'E') d = tw[names[x][1] - '1'] - tw[names[x][2] - '1'];
      for (size_t r = 0; r < z.dim; ++r)
        for (size_t c = 0; c < z.dim; ++c)
          if (z.gens[x].at(r, c)) CHECK(deg[r] - deg[c] == d);
    }
    Mat nu(3, 3, 5);
    nu.at(0, 0) = 1;
    nu.at(1, 1) = 1;
    nu.at(2, 2) = 3;
    Mat a = act(z, nu);
    for (size_t r = 0; r < z.dim; ++r) CHECK(a.at(r, r) == scalars::mod_reduce(deg[r], 5));
  }
  CHECK(!baby_verma_lie(chi, w, flag_borel(chi, 1, 1)).graded());
}

TEST_CASE("End dimension from the eigenspace agrees with the full hom computation") {
  auto chi = make_chi(3, 5);
  auto w = make_weight(3, 5, {1, 2});
  for (auto [k, a] : kSamples) {
    auto bor = flag_borel(chi, k, a);
    auto z = baby_verma_lie(chi, w, bor);
    size_t e = end_dim_at_flag(chi, w, bor);
    CHECK(e == fdrep::hom_dim(z, z));
    if (a != 0) CHECK(e == 1);
  }
  auto chi2 = make_chi(2, 5);
  for (uint32_t r = 1; r <= 4; ++r)
    for (uint32_t a = 0; a < 5; ++a) {
      auto w2 = make_weight(2, 5, {r});
      auto bor = flag_borel(chi2, 1, a);
      CHECK(end_dim_at_flag(chi2, w2, bor) == fdrep::hom_dim(baby_verma_lie(chi2, w2, bor), baby_verma_lie(chi2, w2, bor)));
    }
}

TEST_CASE("chain of simples and Loewy layers at (n=3, p=5, r=(1,2))") {
  auto chi = make_chi(3, 5);
  auto c = chain(chi, make_weight(3, 5, {1, 2}));
  CHECK(c.orbit_classes == 3);
  CHECK(c.dim_L == std::vector<size_t>{50, 25, 50});
  for (size_t i = 0; i < 3; ++i) {
    REQUIRE(c.layers[i].size() == 3);
    for (size_t t = 0; t < 3; ++t) {
      const auto& l = c.layers[i][t];
      CHECK(l.simple == (i + t) % 3);
      CHECK(l.multiplicity == 1);
      CHECK(l.integral);
      CHECK(l.shift == -static_cast<int64_t>(t));
    }
    CHECK(check_relations(c.L[i], chi).ok());
    CHECK(fdrep::hom_dim(c.L[i], c.L[i]) == 1);
  }
  CHECK_THROWS(chain(chi, make_weight(3, 5, {0, 2})));
}

TEST_CASE("multiplicities are one and independent of the flag") {
  auto chi = make_chi(3, 5);
  auto c = chain(chi, make_weight(3, 5, {1, 2}));
  std::vector<size_t> first;
  for (uint32_t k = 1; k <= 2; ++k)
    for (uint32_t a = 0; a < 5; ++a) {
      auto rep = verma_report(c, flag_borel(chi, k, a));
      CHECK(rep.dim == 125);
      CHECK(rep.multiplicities == std::vector<size_t>{1, 1, 1});
      CHECK(rep.relations.ok());
      if (a == 0) CHECK(rep.layers.size() == 3);
    }
  auto plus = verma_report(c, flag_borel(chi, 0, 0));
  REQUIRE(plus.layers.size() == 3);
  size_t total = 0;
  for (const auto& l : plus.layers) total += l.dim;
  CHECK(total == 125);
}

TEST_CASE("sl_2 simples have dimensions r_1 and r_0") {
  auto chi = make_chi(2, 5);
  auto c = chain(chi, make_weight(2, 5, {2}));
  CHECK(c.dim_L == std::vector<size_t>{2, 3});
  for (size_t i = 0; i < 2; ++i) {
    CHECK(c.layers[i][1].simple == (i + 1) % 2);
    CHECK(c.layers[i][1].shift == -1);
  }
}
