#include <immintrin.h>

#include "chainring/kernels.hpp"

namespace chainring::kernels::avx2 {

namespace {

// x in [0, 2^24): returns x mod p using a float estimate of the quotient
// followed by a one-step correction in each direction.
inline __m256i reduce(__m256i x, __m256 inv_p, __m256i vp) {
    const __m256 xf = _mm256_cvtepi32_ps(x);
    const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(xf, inv_p));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
    const __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
    return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

}  // namespace

void axpy_mod(std::span<Fp> dst, std::span<const Fp> src, Fp c, Fp p) {
    if (c == 0) return;
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    std::size_t k = 0;
    for (; k + 8 <= dst.size(); k += 8) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + k));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + k));
        const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + k), reduce(x, inv_p, vp));
    }
    scalar::axpy_mod(dst.subspan(k), src.subspan(k), c, p);
}

void scale_mod(std::span<Fp> dst, Fp c, Fp p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    std::size_t k = 0;
    for (; k + 8 <= dst.size(); k += 8) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + k), reduce(_mm256_mullo_epi32(d, vc), inv_p, vp));
    }
    scalar::scale_mod(dst.subspan(k), c, p);
}

std::size_t nonzero_blocks(std::span<const Fp> v, std::size_t block) {
    // Only the common block widths get a vector path; anything else is
    // handled by the reference loop.
    if (block != 2 && block != 4 && block != 8) return scalar::nonzero_blocks(v, block);
    std::size_t count = 0;
    std::size_t k = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; k + 8 <= v.size(); k += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + k));
        const unsigned nz = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)))) & 0xffu;
        for (std::size_t b = 0; b < 8; b += block) {
            const unsigned mask = ((1u << block) - 1u) << b;
            if (nz & mask) ++count;
        }
    }
    return count + scalar::nonzero_blocks(v.subspan(k), block);
}

}  // namespace chainring::kernels::avx2
