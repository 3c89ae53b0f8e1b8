#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include "scalars/kernels.hpp"

namespace scalars::kernels {

namespace {

// x < 2^31 in every lane; m = floor(2^32/p).  Quotient estimate is low by at most one.
__attribute__((target("avx2"))) inline __m256i barrett(__m256i x, __m256i vm, __m256i vp, __m256i vpm1) {
  __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
  __m256i qo = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vm);
  __m256i q = _mm256_blend_epi32(qe, qo, 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  __m256i over = _mm256_cmpgt_epi32(r, vpm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(over, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n) {
  const uint32_t m = static_cast<uint32_t>((uint64_t{1} << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(x, vm, vp, vpm1));
  }
  if (i < n) axpy_scalar(dst + i, src + i, c, p, n - i);
}

__attribute__((target("avx2"))) void scale_avx2(uint32_t* dst, uint32_t c, uint32_t p, size_t n) {
  const uint32_t m = static_cast<uint32_t>((uint64_t{1} << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(_mm256_mullo_epi32(d, vc), vm, vp, vpm1));
  }
  if (i < n) scale_scalar(dst + i, c, p, n - i);
}

}  // namespace scalars::kernels
#endif
