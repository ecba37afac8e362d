#include "chainring/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace chainring::kernels {

namespace scalar {

void axpy_mod(std::span<Fp> dst, std::span<const Fp> src, Fp c, Fp p) {
    if (c == 0) return;
    const std::uint64_t cc = c;
    for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] = static_cast<Fp>((dst[k] + cc * src[k]) % p);
    }
}

void scale_mod(std::span<Fp> dst, Fp c, Fp p) {
    const std::uint64_t cc = c;
    for (auto& d : dst) d = static_cast<Fp>((cc * d) % p);
}

std::size_t nonzero_blocks(std::span<const Fp> v, std::size_t block) {
    std::size_t count = 0;
    for (std::size_t start = 0; start < v.size(); start += block) {
        for (std::size_t k = start; k < start + block; ++k) {
            if (v[k] != 0) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace scalar

#ifndef CHAINRING_HAVE_AVX2
namespace avx2 {
void axpy_mod(std::span<Fp>, std::span<const Fp>, Fp, Fp) {
    throw std::logic_error("AVX2 kernels not compiled in");
}
void scale_mod(std::span<Fp>, Fp, Fp) { throw std::logic_error("AVX2 kernels not compiled in"); }
std::size_t nonzero_blocks(std::span<const Fp>, std::size_t) {
    throw std::logic_error("AVX2 kernels not compiled in");
}
}  // namespace avx2
#endif

namespace {

bool detect_avx2() {
#if defined(CHAINRING_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect_avx2() ? Backend::Avx2 : Backend::Scalar};
    return b;
}

bool use_avx2(Fp p) { return current().load(std::memory_order_relaxed) == Backend::Avx2 && p < kAvx2MaxModulus; }

}  // namespace

bool backend_available(Backend b) { return b == Backend::Scalar || detect_avx2(); }

Backend active_backend() { return current().load(); }

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void set_backend(Backend b) {
    if (!backend_available(b)) throw std::invalid_argument("kernel backend not available on this CPU");
    current().store(b);
}

void axpy_mod(std::span<Fp> dst, std::span<const Fp> src, Fp c, Fp p) {
    if (use_avx2(p)) {
        avx2::axpy_mod(dst, src, c, p);
    } else {
        scalar::axpy_mod(dst, src, c, p);
    }
}

void scale_mod(std::span<Fp> dst, Fp c, Fp p) {
    if (use_avx2(p)) {
        avx2::scale_mod(dst, c, p);
    } else {
        scalar::scale_mod(dst, c, p);
    }
}

std::size_t nonzero_blocks(std::span<const Fp> v, std::size_t block) {
    if (current().load(std::memory_order_relaxed) == Backend::Avx2) return avx2::nonzero_blocks(v, block);
    return scalar::nonzero_blocks(v, block);
}

}  // namespace chainring::kernels
