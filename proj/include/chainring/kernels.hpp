#pragma once

// Vector kernels over the prime field F_p.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The dispatching entry points pick the AVX2 path when the CPU
// supports it and the modulus is small enough for its reduction scheme;
// otherwise they fall back to the scalar path. Both paths produce identical
// results for every valid input.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace chainring::kernels {

using Fp = std::uint32_t;

enum class Backend { Scalar, Avx2 };

// The AVX2 reduction computes floor(x / p) in single precision, which is exact
// while p + p^2 < 2^24.
inline constexpr Fp kAvx2MaxModulus = 2048;

bool backend_available(Backend b);
Backend active_backend();
std::string_view backend_name(Backend b);

// Forces a backend for the remainder of the process. Throws
// std::invalid_argument when the backend is not available on this CPU.
void set_backend(Backend b);

// dst[k] = (dst[k] + c * src[k]) mod p. Entries of dst and src lie in [0, p)
// and c lies in [0, p).
void axpy_mod(std::span<Fp> dst, std::span<const Fp> src, Fp c, Fp p);

// dst[k] = (c * dst[k]) mod p.
void scale_mod(std::span<Fp> dst, Fp c, Fp p);

// Number of blocks of `block` consecutive entries that contain a nonzero
// entry. v.size() must be a multiple of block.
std::size_t nonzero_blocks(std::span<const Fp> v, std::size_t block);

namespace scalar {
void axpy_mod(std::span<Fp> dst, std::span<const Fp> src, Fp c, Fp p);
void scale_mod(std::span<Fp> dst, Fp c, Fp p);
std::size_t nonzero_blocks(std::span<const Fp> v, std::size_t block);
}  // namespace scalar

namespace avx2 {
// Require backend_available(Backend::Avx2) and p < kAvx2MaxModulus.
void axpy_mod(std::span<Fp> dst, std::span<const Fp> src, Fp c, Fp p);
void scale_mod(std::span<Fp> dst, Fp c, Fp p);
std::size_t nonzero_blocks(std::span<const Fp> v, std::size_t block);
}  // namespace avx2

}  // namespace chainring::kernels
