#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scalars/fp.hpp"
#include "scalars/laurent.hpp"

using scalars::FpElem;
using scalars::LaurentBi;

TEST_CASE("roots of unity pick the smallest element of exact order") {
  CHECK(scalars::root_of_unity(7, 3).value() == 2);
  CHECK(scalars::root_of_unity(5, 4).value() == 2);
  CHECK(scalars::root_of_unity(3, 2).value() == 2);
  CHECK_THROWS_AS(scalars::root_of_unity(7, 4), std::invalid_argument);
  CHECK_THROWS_AS(scalars::root_of_unity(9, 2), std::invalid_argument);
  // brute force
  for (uint32_t q : {7u, 11u, 13u, 31u})
    for (uint32_t n = 1; n < q; ++n) {
      if ((q - 1) % n) continue;
      uint32_t want = 0;
      for (uint32_t a = 1; a < q && !want; ++a) {
        uint32_t x = 1, ord = 0;
        do {
          x = x * a % q;
          ++ord;
        } while (x != 1);
        if (ord == n) want = a;
      }
      CHECK(scalars::root_of_unity(q, n).value() == want);
    }
}

TEST_CASE("prime field axioms on the full field") {
  for (uint32_t p : {3u, 5u, 7u, 11u}) {
    for (uint32_t a = 0; a < p; ++a) {
      FpElem x(a, p);
      CHECK(x + FpElem(0, p) == x);
      CHECK(x * FpElem(1, p) == x);
      CHECK(x + (-x) == FpElem(0, p));
      if (a) CHECK(x * x.inv() == FpElem(1, p));
      if (a) CHECK(x.pow(p - 1) == FpElem(1, p));
      for (uint32_t b = 0; b < p; ++b)
        for (uint32_t c = 0; c < p; ++c) {
          FpElem y(b, p), z(c, p);
          CHECK(x + y == y + x);
          CHECK(x * y == y * x);
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
    }
  }
  CHECK_THROWS(FpElem(1, 3) + FpElem(1, 5));
  CHECK_THROWS_AS(FpElem(0, 5).inv(), std::domain_error);
  CHECK_THROWS(FpElem(1, 4));
}

TEST_CASE("negative representatives reduce") {
  CHECK(FpElem(-1, 7).value() == 6);
  CHECK(FpElem(-15, 7).value() == 6);
}

namespace {

LaurentBi random_laurent(std::mt19937& rng) {
  LaurentBi f;
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), n(0, 4);
  for (int k = n(rng); k > 0; --k) f += LaurentBi::monomial(c(rng), e(rng), e(rng));
  return f;
}

}  // namespace

TEST_CASE("Laurent ring axioms on random samples") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_laurent(rng), g = random_laurent(rng), h = random_laurent(rng);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + (-f) == LaurentBi());
    CHECK(f * LaurentBi(1) == f);
    CHECK(scalars::laurent_mul(f, g) == f * g);
  }
}

TEST_CASE("involutions commute, are self-inverse and multiplicative") {
  std::mt19937 rng(5);
  using scalars::Involution;
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_laurent(rng), g = random_laurent(rng);
    CHECK(f.dagger().dagger() == f);
    CHECK(f.bar().bar() == f);
    CHECK(f.dagger().bar() == f.bar().dagger());
    CHECK((f * g).bar() == f.bar() * g.bar());
    CHECK((f * g).dagger() == f.dagger() * g.dagger());
    CHECK(scalars::laurent_involution(f, Involution::bar) == f.bar());
    CHECK(scalars::laurent_involution(f, Involution::dagger) == f.dagger());
  }
  CHECK(LaurentBi::vp(2).dagger() == LaurentBi::vp(-2));
  CHECK(LaurentBi::v(3).bar() == LaurentBi::v(-3));
}

TEST_CASE("Laurent printing and parsing") {
  LaurentBi x = LaurentBi(1) + LaurentBi::v(-2);
  CHECK(x.to_string() == "v^-2 + 1");
  CHECK(LaurentBi::monomial(-1, 3, -1).to_string() == "-v'^3*v^-1");
  CHECK(LaurentBi().to_string() == "0");
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_laurent(rng);
    CHECK(LaurentBi::parse(f.to_string()) == f);
  }
  CHECK(LaurentBi::parse("2 + 2*v^-2 + v^-1") == LaurentBi(2) + LaurentBi::monomial(2, 0, -2) + LaurentBi::v(-1));
  auto rec = x.records();
  REQUIRE(rec.size() == 2);
  CHECK(rec[0].t == -2);
  CHECK(rec[1].c == "1");
}

TEST_CASE("big coefficients do not overflow") {
  LaurentBi f = LaurentBi(1) + LaurentBi::v(1);
  LaurentBi g = f.pow(80);
  CHECK(g.coeff(0, 40).get_str() == "107507208733336176461620");
}
