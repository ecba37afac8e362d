#pragma once

#include <random>

#include "chainring/codes.hpp"

namespace chainring::test {

inline FieldPtr f3() { return FieldCtx::builtin(3, 1); }
inline FieldPtr f5() { return FieldCtx::builtin(5, 1); }
// w^2 = -1.
inline FieldPtr f9() { return FieldCtx::builtin(3, 2); }
// w^2 = -3 = 2.
inline FieldPtr f25() { return FieldCtx::builtin(5, 2); }

inline FieldElement el(const FieldPtr& f, std::initializer_list<std::uint32_t> c) { return field_make(f, c); }

inline RingElement ring(const FieldElement& a, const FieldElement& b) { return {a, b}; }
inline RingElement ring(const FieldPtr& f, std::int64_t a, std::int64_t b) { return {f->from_int(a), f->from_int(b)}; }

inline FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng) {
    return f->from_index(std::uniform_int_distribution<std::uint64_t>(0, f->order() - 1)(rng));
}

inline RingElement random_ring(const FieldPtr& f, std::mt19937_64& rng) {
    return {random_element(f, rng), random_element(f, rng)};
}

inline QuotientPoly random_poly(const FieldPtr& f, const RingElement& lambda, std::size_t n, std::mt19937_64& rng) {
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(random_ring(f, rng));
    return {w, lambda, n};
}

}  // namespace chainring::test
