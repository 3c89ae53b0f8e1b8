#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodges/hodges.hpp"

using namespace hodges;
using fdrep::FDModule;
using fdrep::Mat;

namespace {

struct Fx {
  uint32_t n, p;
  std::vector<uint32_t> r;
};
const std::vector<Fx> kFixtures{{2, 3, {1}}, {2, 5, {2}}, {3, 5, {1, 2}}, {3, 7, {2, 3}}};

uint32_t sum_sq(const HodgesData& d) {
  uint32_t s = 0;
  for (uint32_t i = 0; i < d.n; ++i) s += d.r_at(i) * d.r_at(i);
  return s;
}

// dim Ext^1(top, sub) from block upper-triangular extensions satisfying the t(v) relations.
size_t ext1_by_extensions(const FDModule& top, const FDModule& sub, const HodgesData& d) {
  const uint32_t q = d.p;
  const size_t di = top.dim, dj = sub.dim, D = di + dj;
  const std::vector<std::string> names{"a", "b", "h"};
  auto block = [&](const std::vector<Mat>& delta) {
    FDModule e(q, D, names);
    for (size_t x = 0; x < 3; ++x) {
      const Mat &sj = sub.gen(names[x]), &si = top.gen(names[x]);
      for (size_t r = 0; r < dj; ++r)
        for (size_t c = 0; c < dj; ++c) e.gens[x].at(r, c) = sj.at(r, c);
      for (size_t r = 0; r < di; ++r)
        for (size_t c = 0; c < di; ++c) e.gens[x].at(dj + r, dj + c) = si.at(r, c);
      for (size_t r = 0; r < dj; ++r)
        for (size_t c = 0; c < di; ++c) e.gens[x].at(r, dj + c) = delta[x].at(r, c);
    }
    return e;
  };
  auto rels = relations(d, Level::t);
  std::vector<Mat> zero(3, Mat(dj, di, q));
  std::vector<Mat> base;
  for (const auto& f : rels) base.push_back(evaluate(f, block(zero)));
  const size_t unknowns = 3 * dj * di;
  Mat sys(rels.size() * dj * di, unknowns, q);
  for (size_t u = 0; u < unknowns; ++u) {
    auto delta = zero;
    delta[u / (dj * di)].at((u % (dj * di)) / di, u % di) = 1;
    auto e = block(delta);
    for (size_t k = 0; k < rels.size(); ++k) {
      Mat v = evaluate(rels[k], e) - base[k];
      for (size_t r = 0; r < dj; ++r)
        for (size_t c = 0; c < di; ++c) sys.at(k * dj * di + r * di + c, u) = v.at(r, dj + c);
    }
  }
  size_t cocycles = unknowns - fdrep::rank(sys);
  Mat inner(0, unknowns, q);
  for (size_t u = 0; u < dj * di; ++u) {
    Mat x(dj, di, q);
    x.at(u / di, u % di) = 1;
    fdrep::Vec row;
    for (const auto& nm : names) {
      Mat dx = sub.gen(nm) * x - x * top.gen(nm);
      row.insert(row.end(), dx.data().begin(), dx.data().end());
    }
    inner.append_row(row);
  }
  return cocycles - fdrep::rank(inner);
}

}  // namespace

TEST_CASE("data validation and v") {
  CHECK_THROWS(HodgesData::make(2, 4, {1}));
  CHECK_THROWS(HodgesData::make(3, 3, {1, 1}));
  CHECK_THROWS(HodgesData::make(2, 3, {4}));
  CHECK_THROWS(HodgesData::make(3, 5, {1}));
  auto d = HodgesData::make(3, 5, {1, 2});
  CHECK(d.r0() == 2);
  CHECK(d.roots() == std::vector<uint32_t>{0, 1, 3});
  CHECK(d.v().size() == 4);
  CHECK(d.is_root(0));
  CHECK(d.is_root(8));
  CHECK(!d.is_root(2));
}

TEST_CASE("shifted products") {
  auto d = HodgesData::make(2, 3, {1});
  CHECK(shifted_product(d, 1) == d.v());
  CHECK(shifted_product(d, 2) == Poly{0, 0, 2, 0, 1});  // z^2 (z^2 - 1) over F_3
  CHECK(shifted_product(d, -2) == poly_mul(d.v(), poly_shift(d.v(), -1, 3), 3));
  CHECK_THROWS(shifted_product(d, 0));
  CHECK_THROWS(shifted_product(d, 4));
  for (const auto& fx : kFixtures) {
    auto e = HodgesData::make(fx.n, fx.p, fx.r);
    Poly zp_z(fx.p + 1, 0);
    zp_z[fx.p] = 1;
    zp_z[1] = fx.p - 1;
    Poly want{1};
    for (uint32_t k = 0; k < fx.n; ++k) want = poly_mul(want, zp_z, fx.p);
    CHECK(shifted_product(e, static_cast<int>(fx.p)) == want);
    CHECK(shifted_product(e, -static_cast<int>(fx.p)) == want);
  }
  CHECK(poly_to_string(Poly{0, 0, 2, 0, 1}, 3) == "z^4 - z^2");
}

TEST_CASE("relation levels") {
  auto d = HodgesData::make(2, 3, {1});
  CHECK(relations(d, Level::T).size() == 4);
  CHECK(relations(d, Level::frakT).size() == 6);
  CHECK(relations(d, Level::t).size() == 7);
  CHECK(parse_level("frakT") == Level::frakT);
  CHECK_THROWS(parse_level("x"));
}

TEST_CASE("Groebner-Shirshov basis reproduction and dimensions") {
  for (const auto& fx : kFixtures) {
    auto d = HodgesData::make(fx.n, fx.p, fx.r);
    auto rep = verify_shirshov(d);
    INFO(d.label());
    CHECK(rep.match);
    CHECK(rep.expected_is_gs);
    CHECK(!rep.difference);
    CHECK(rep.basis_size == fx.n * fx.p * fx.p);
    CHECK(rep.basis_size_t == 2 * fx.p * fx.p - sum_sq(d));
  }
  CHECK(quotient_dim(HodgesData::make(2, 5, {2}), Level::t) == 37);
  CHECK(quotient_dim(HodgesData::make(3, 7, {2, 3}), Level::t) == 81);
}

TEST_CASE("standard monomials are a^j h^s or b^j h^s with the decomposition bounds") {
  for (const auto& fx : kFixtures) {
    auto d = HodgesData::make(fx.n, fx.p, fx.r);
    auto al = alphabet(d);
    auto pair = gs::complete(relation_pair(d, Level::frakT), default_weight_cap(d));
    auto a = al.letter("a"), b = al.letter("b"), h = al.letter("h");
    for (const auto& m : gs::standard_monomials(pair, gs::Scope::of_ring())) {
      size_t j = 0;
      while (j < m.word.size() && m.word[j] == m.word[0] && m.word[0] != h) ++j;
      size_t s = m.word.size() - j;
      bool tail_h = std::all_of(m.word.begin() + j, m.word.end(), [&](auto x) { return x == h; });
      CHECK(tail_h);
      CHECK(j < fx.p);
      CHECK(s < fx.n * (fx.p - j));
      if (j > 0) CHECK((m.word[0] == a || m.word[0] == b));
    }
  }
}

TEST_CASE("baby Verma modules") {
  auto d = HodgesData::make(2, 3, {1});
  auto v0 = baby_verma(d, 0, Variant::plain);
  REQUIRE(!v0.zero);
  CHECK(v0.module.dim == 3);
  // a . b|0> = v(-1) |0> = 2 |0>
  CHECK(v0.module.gen("a").at(0, 1) == 2);
  CHECK(*v0.module.grading == std::vector<int64_t>{0, -2, -4});
  CHECK(baby_verma(d, 2, Variant::plain).zero);
  CHECK(baby_verma(d, 1, Variant::primed).zero == false);
  CHECK(baby_verma(d, 0, Variant::primed).zero == true);  // -1 is not a root
  for (const auto& fx : kFixtures) {
    auto e = HodgesData::make(fx.n, fx.p, fx.r);
    for (int64_t lam = -2; lam < static_cast<int64_t>(fx.p); ++lam)
      for (auto var : {Variant::plain, Variant::primed}) {
        auto vm = baby_verma(e, lam, var);
        CHECK(vm.zero == !e.is_root(var == Variant::plain ? lam : lam - 1));
        if (vm.zero) continue;
        CHECK(vm.module.dim == fx.p);
        CHECK(satisfies_relations(vm.module, e, Level::t));
      }
  }
}

TEST_CASE("structure report at (p=5, n=3, r=(1,2))") {
  auto d = HodgesData::make(3, 5, {1, 2});
  auto s = structure_report(d);
  CHECK(s.dim_L == std::vector<size_t>{2, 1, 2});
  CHECK(s.dim_T == std::vector<size_t>{8, 9, 8});
  CHECK(s.weighted_sum == 41);
  CHECK(s.dim_t == 41);
  CHECK(s.lambda == std::vector<int64_t>{3, 1, 0, -2});
  for (size_t i : s.present) {
    REQUIRE(s.v_layers[i].size() == 3);
    REQUIRE(s.vp_layers[i].size() == 3);
    for (size_t t = 0; t < 3; ++t) {
      REQUIRE(s.v_layers[i][t].size() == 1);
      CHECK(s.v_layers[i][t][0].simple == (i + t) % 3);
      CHECK(s.v_layers[i][t][0].shift == -static_cast<int64_t>(t));
      CHECK(s.v_layers[i][t][0].multiplicity == 1);
      CHECK(s.vp_layers[i][t][0].simple == (i + 3 - t) % 3);
      CHECK(s.vp_layers[i][t][0].shift == static_cast<int64_t>(t));
    }
    CHECK(satisfies_relations(s.V[i], d, Level::t));
    CHECK(satisfies_relations(s.Vp[i], d, Level::t));
    CHECK(satisfies_relations(s.T[i], d, Level::t));
    CHECK(satisfies_relations(s.L[i], d, Level::t));
    CHECK(fdrep::hom_dim(s.L[i], s.L[i]) == 1);
  }
}

TEST_CASE("baby Vermas are uniserial: socle series reverses the radical series") {
  for (const auto& fx : kFixtures) {
    auto d = HodgesData::make(fx.n, fx.p, fx.r);
    auto s = structure_report(d);
    std::vector<FDModule> simples;
    for (size_t i : s.present) simples.push_back(s.L[i]);
    for (size_t i : s.present) {
      auto top = fdrep::loewy_series(s.V[i], simples, fdrep::Series::radical);
      auto bottom = fdrep::loewy_series(s.V[i], simples, fdrep::Series::socle);
      REQUIRE(top.size() == bottom.size());
      CHECK(top.size() == s.present.size());
      for (size_t t = 0; t < top.size(); ++t) {
        REQUIRE(top[t].parts.size() == 1);
        CHECK(top[t].parts[0].multiplicity == 1);
        CHECK(top[t].parts[0].simple == bottom[top.size() - 1 - t].parts[0].simple);
        CHECK(top[t].parts[0].shift == bottom[top.size() - 1 - t].parts[0].shift);
      }
      CHECK(fdrep::is_indecomposable(s.V[i]));
    }
  }
}

TEST_CASE("every nonzero V(lambda) is V_i[j] for exactly one (i, j)") {
  for (const auto& fx : kFixtures) {
    auto d = HodgesData::make(fx.n, fx.p, fx.r);
    auto s = structure_report(d);
    for (int64_t lam = -static_cast<int64_t>(fx.p); lam < 2 * static_cast<int64_t>(fx.p); ++lam) {
      if (!d.is_root(lam)) continue;
      INFO(d.label(), " lambda ", lam);
      CHECK(verma_matches(s, lam, 6).size() == 1);
    }
  }
}

TEST_CASE("dimension identity with zero r_i") {
  for (const auto& fx : std::vector<Fx>{{3, 5, {0, 2}}, {2, 3, {0}}, {2, 3, {3}}, {4, 7, {1, 0, 2}}}) {
    auto d = HodgesData::make(fx.n, fx.p, fx.r);
    auto s = structure_report(d);
    INFO(d.label());
    CHECK(s.weighted_sum == s.dim_t);
    CHECK(s.dim_t == 2 * fx.p * fx.p - sum_sq(d));
    size_t nonzero = 0;
    for (uint32_t i = 0; i < fx.n; ++i) nonzero += d.r_at(i) != 0;
    CHECK(s.present.size() == nonzero);
  }
}

TEST_CASE("Ext quiver") {
  auto q3 = ext1_quiver(HodgesData::make(3, 5, {1, 2}));
  CHECK(q3 == std::vector<std::vector<size_t>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto q2 = ext1_quiver(HodgesData::make(2, 3, {1}));
  CHECK(q2 == std::vector<std::vector<size_t>>{{0, 2}, {2, 0}});
  auto q1 = ext1_quiver(HodgesData::make(2, 3, {0}));
  CHECK(q1 == std::vector<std::vector<size_t>>{{0}});
}

TEST_CASE("Ext quiver agrees with extensions computed from the relations") {
  for (const auto& fx : std::vector<Fx>{{2, 3, {1}}, {3, 5, {1, 2}}, {3, 5, {0, 2}}}) {
    auto d = HodgesData::make(fx.n, fx.p, fx.r);
    auto s = structure_report(d);
    auto q = ext1_quiver(s);
    for (size_t a = 0; a < s.present.size(); ++a)
      for (size_t b = 0; b < s.present.size(); ++b)
        CHECK(q[a][b] == ext1_by_extensions(s.L[s.present[a]], s.L[s.present[b]], d));
  }
}
