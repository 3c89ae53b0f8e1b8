#pragma once
#include <cstddef>
#include <cstdint>
#include <string>

// Row kernels for dense F_p linear algebra.  All entries are residues in [0, p).
namespace scalars::kernels {

enum class Isa { scalar, avx2, neon };

std::string isa_name(Isa isa);
bool isa_available(Isa isa);

// Kernel used by axpy()/scale(); picked from the CPU at first use.
// ARTIFACT_KERNEL=scalar in the environment pins the reference path.
Isa active_isa();
void force_isa(Isa isa);  // throws if unavailable on this CPU
void reset_isa();

// dst[i] = dst[i] + c*src[i] mod p
void axpy(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n);
// dst[i] = c*dst[i] mod p
void scale(uint32_t* dst, uint32_t c, uint32_t p, size_t n);

// Direct entry points, used by the equivalence tests.
void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n);
void scale_scalar(uint32_t* dst, uint32_t c, uint32_t p, size_t n);
#if defined(__x86_64__) || defined(__i386__)
void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n);
void scale_avx2(uint32_t* dst, uint32_t c, uint32_t p, size_t n);
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
void axpy_neon(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n);
void scale_neon(uint32_t* dst, uint32_t c, uint32_t p, size_t n);
#endif

// Vector paths use 32-bit Barrett reduction and need c*src + dst < 2^32.
constexpr uint32_t kSimdModulusLimit = 1u << 15;

}  // namespace scalars::kernels
