#pragma once

// Brute-force verification by linear algebra over F_p. Nothing here uses the
// closed-form dual formulas.

#include <optional>
#include <stdexcept>

#include "chainring/codes.hpp"

namespace chainring {

inline constexpr std::size_t kOracleMaxDim = 2048;

class OracleLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {y : <c, y>_sigma = 0 for all c in C}, living over sigma^{-1}(lambda^{-1}).
SpanBasis brute_dual(const SpanBasis& code, const RingAut& sigma);

/// <r_i, r_j>_sigma = 0 for every ordered pair of basis rows.
bool brute_self_orthogonal(const SpanBasis& code, const RingAut& sigma);

/// {g : f g = 0 in R[x]/<x^n - lambda> for all f in C}.
SpanBasis brute_annihilator(const SpanBasis& code);

/// The ideal of R[x]/<x^n - lambda^{-1}> generated by the reciprocals f* of
/// the basis rows of `ideal`.
SpanBasis reciprocal_ideal(const SpanBasis& ideal);

std::size_t hamming_weight(std::span<const Fp> flat, unsigned m);

/// Minimum weight over nonzero codewords; nothing for the zero code. Throws
/// CapExceeded when the code is too large to enumerate.
std::optional<std::size_t> min_distance(const SpanBasis& code, std::uint64_t cap = kDefaultEnumerationCap);

/// tau_lambda maps every basis row back into the span.
bool ideal_check(const SpanBasis& code, const RingElement& lambda);

}  // namespace chainring
