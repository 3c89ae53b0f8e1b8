#include "scalars/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace scalars::kernels {

void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n) {
  if (c == 0) return;
  for (size_t i = 0; i < n; ++i) dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
}

void scale_scalar(uint32_t* dst, uint32_t c, uint32_t p, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * dst[i] % p);
}

std::string isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() {
  const char* env = std::getenv("ARTIFACT_KERNEL");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::atomic<int> g_isa{-1};

Isa current() {
  int v = g_isa.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(detect());
    g_isa.store(v, std::memory_order_relaxed);
  }
  return static_cast<Isa>(v);
}

}  // namespace

Isa active_isa() { return current(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("kernel " + isa_name(isa) + " not available on this CPU");
  g_isa.store(static_cast<int>(isa));
}

void reset_isa() { g_isa.store(-1); }

void axpy(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n) {
  if (c == 0 || n == 0) return;
  if (p < kSimdModulusLimit) {
    switch (current()) {
#if defined(__x86_64__) || defined(__i386__)
      case Isa::avx2: axpy_avx2(dst, src, c, p, n); return;
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
      case Isa::neon: axpy_neon(dst, src, c, p, n); return;
#endif
      default: break;
    }
  }
  axpy_scalar(dst, src, c, p, n);
}

void scale(uint32_t* dst, uint32_t c, uint32_t p, size_t n) {
  if (p < kSimdModulusLimit) {
    switch (current()) {
#if defined(__x86_64__) || defined(__i386__)
      case Isa::avx2: scale_avx2(dst, c, p, n); return;
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
      case Isa::neon: scale_neon(dst, c, p, n); return;
#endif
      default: break;
    }
  }
  scale_scalar(dst, c, p, n);
}

}  // namespace scalars::kernels
