#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "scalars/kernels.hpp"

namespace k = scalars::kernels;

namespace {

std::vector<uint32_t> random_row(std::mt19937& rng, uint32_t p, size_t n) {
  std::vector<uint32_t> v(n);
  for (auto& x : v) x = rng() % p;
  return v;
}

}  // namespace

TEST_CASE("scalar kernel matches the textbook formula") {
  std::mt19937 rng(1);
  for (uint32_t p : {2u, 3u, 5u, 7u, 32749u, 2147483647u}) {
    auto a = random_row(rng, p, 37), b = random_row(rng, p, 37);
    uint32_t c = rng() % p;
    auto d = a;
    k::axpy_scalar(d.data(), b.data(), c, p, d.size());
    for (size_t i = 0; i < d.size(); ++i) CHECK(d[i] == (a[i] + uint64_t(c) * b[i]) % p);
    d = a;
    k::scale_scalar(d.data(), c, p, d.size());
    for (size_t i = 0; i < d.size(); ++i) CHECK(d[i] == uint64_t(c) * a[i] % p);
  }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("AVX2 kernels agree with the scalar reference") {
  if (!k::isa_available(k::Isa::avx2)) {
    MESSAGE("AVX2 not available; skipped");
    return;
  }
  std::mt19937 rng(2);
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 251u, 32749u}) {
    for (size_t n : {0u, 1u, 7u, 8u, 9u, 33u, 1000u}) {
      for (int trial = 0; trial < 5; ++trial) {
        auto a = random_row(rng, p, n), b = random_row(rng, p, n);
        uint32_t c = trial == 0 ? p - 1 : rng() % p;
        if (trial == 1) std::fill(a.begin(), a.end(), p - 1), std::fill(b.begin(), b.end(), p - 1);
        auto s = a, v = a;
        k::axpy_scalar(s.data(), b.data(), c, p, n);
        k::axpy_avx2(v.data(), b.data(), c, p, n);
        CHECK(s == v);
        s = a, v = a;
        k::scale_scalar(s.data(), c, p, n);
        k::scale_avx2(v.data(), c, p, n);
        CHECK(s == v);
      }
    }
  }
}
#endif

TEST_CASE("dispatch honours forced selection and large moduli") {
  std::mt19937 rng(3);
  const uint32_t big = 2147483647u;
  auto a = random_row(rng, big, 64), b = random_row(rng, big, 64);
  for (k::Isa isa : {k::Isa::scalar, k::Isa::avx2, k::Isa::neon}) {
    if (!k::isa_available(isa)) {
      CHECK_THROWS(k::force_isa(isa));
      continue;
    }
    k::force_isa(isa);
    CHECK(k::active_isa() == isa);
    auto s = a, d = a;
    k::axpy_scalar(s.data(), b.data(), 12345, big, 64);
    k::axpy(d.data(), b.data(), 12345, big, 64);
    CHECK(s == d);
  }
  k::reset_isa();
  CHECK(k::isa_available(k::active_isa()));
  CHECK(k::isa_name(k::Isa::scalar) == "scalar");
}
