#pragma once

// Constacyclic codes of length p^s over R: the classification records, their
// generators and sizes, and the F_p-linear span machinery behind them.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainring/linalg.hpp"
#include "chainring/polyquot.hpp"

namespace chainring {

enum class CodeKind { ChainIdeal, Zero, Whole, Type2, Type3, Type4 };

std::string kind_name(CodeKind k);

/// A classification record. For ChainIdeal the constant is alpha + u beta
/// with beta != 0; for every other kind it is a unit gamma of the field.
/// `h` holds field coefficients in the basis (gamma0 x - 1)^j, and `omega`
/// is only read for Type4.
struct CodeSpec {
    FieldPtr field;
    unsigned s = 1;
    RingElement lambda;
    CodeKind kind = CodeKind::Zero;
    std::size_t i = 0;
    std::size_t t = 0;
    std::size_t omega = 0;
    std::vector<FieldElement> h;

    bool h_zero() const;
    std::string to_string() const;
};

class SpecError : public std::invalid_argument {
public:
    explicit SpecError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// A validated spec in canonical form together with the derived constants.
struct Code {
    CodeSpec spec;
    std::size_t n;
    /// gamma0 (or alpha0 in the chain case), the inverse p^s-th root of the
    /// constant's field part.
    FieldElement root;
    /// min{i, n - i + t} for Type3/Type4 with h != 0, i when h = 0, and 0 for
    /// the other kinds.
    std::size_t T;
};

/// Every violated constraint, by name. Empty means valid.
std::vector<std::string> validate_spec(const CodeSpec& spec);

/// Validates and canonicalizes: Type3 h is truncated below T - t, and t is
/// reset to 0 whenever h = 0. Throws SpecError.
Code make_code(const CodeSpec& spec);

std::size_t pow_size(std::uint32_t p, unsigned s);

std::size_t t_value(std::size_t i, std::size_t t, bool h_zero, std::size_t n);

/// e with |C| = p^e.
std::size_t code_size_exponent(const Code& code);

/// The classification's literal generator polynomials.
std::vector<QuotientPoly> generators(const Code& code);

/// The ideal <y^i + u y^t h(y), u y^omega> of R[x]/<x^n - gamma>, where
/// y = gamma0 x - 1, put into canonical form. i ranges over 0..n and
/// omega = n stands for an absent second generator; h may have any length
/// and need not have a nonzero constant term.
Code normalize_gamma_ideal(const FieldPtr& field, unsigned s, const FieldElement& gamma, std::size_t i, std::size_t t,
                           std::vector<FieldElement> h, std::size_t omega);

/// y^i + u y^t h(y) in R[x]/<x^n - lambda>, with y = root x - 1. Terms of
/// y-degree n or more vanish.
QuotientPoly nil_generator(const FieldElement& root, std::size_t i, std::size_t t, const std::vector<FieldElement>& h,
                           const RingElement& lambda, std::size_t n);
/// u y^w, zero for w >= n.
QuotientPoly u_nil_power(const FieldElement& root, std::size_t w, const RingElement& lambda, std::size_t n);

/// The ambient space R^n = R[x]/<x^n - lambda>, flattened to F_p^{2mn} with
/// index (position * 2m + k) for the a-part coefficient k and
/// (position * 2m + m + k) for the b-part coefficient k.
struct Ambient {
    FieldPtr field;
    unsigned s;
    std::size_t n;
    RingElement lambda;

    std::size_t dim() const { return 2 * field->m() * n; }
    std::uint32_t p() const { return field->p(); }
    unsigned m() const { return field->m(); }
};

Ambient ambient_of(const Code& code);
Ambient make_ambient(const FieldPtr& field, unsigned s, const RingElement& lambda);

FpVector flatten(std::span<const RingElement> w);
Word unflatten(std::span<const Fp> v, const FieldPtr& field);

/// An F_p-subspace of the ambient space (a linear code when closed under R).
struct SpanBasis {
    Ambient ambient;
    RowSpace space;

    std::size_t rank() const { return space.rank(); }
    std::vector<Word> rows() const;
    friend bool operator==(const SpanBasis& a, const SpanBasis& b) { return a.space == b.space; }
};

SpanBasis empty_span(const Ambient& a);

/// The ideal generated by `gens`: the F_p-span of b x^k g and u b x^k g for
/// b over the F_p-basis of F_{p^m}.
SpanBasis span_basis(const Ambient& a, const std::vector<QuotientPoly>& gens);
SpanBasis code_span(const Code& code);

/// The R-submodule spanned by `rows`, without shift closure.
SpanBasis module_span(const Ambient& a, const std::vector<Word>& rows);

/// The smallest lambda-constacyclic code containing the span.
SpanBasis shift_closure(const SpanBasis& b);

/// tau_lambda(w) = (lambda w_{n-1}, w_0, ..., w_{n-2}).
Word twisted_shift(std::span<const RingElement> w, const RingElement& lambda);

bool contains(const SpanBasis& b, std::span<const RingElement> w);

/// Tor(C) and Res(C) as F_p-subspaces of F_{p^m}^n, flattened with m
/// coefficients per position.
struct TorRes {
    RowSpace tor;
    RowSpace res;
};
TorRes torsion_residue(const SpanBasis& b);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls `visit` on every codeword (flattened) exactly once, in
/// lexicographic order of the combination coefficients with the last basis
/// row varying fastest. Throws CapExceeded when p^rank > cap.
void for_each_codeword(const SpanBasis& b, const std::function<void(const FpVector&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Word> enumerate_codewords(const SpanBasis& b, std::uint64_t cap = kDefaultEnumerationCap);

/// Recovers the canonical classification record of an ideal span, or
/// nothing when the span is not an ideal of the ambient ring.
std::optional<Code> classify_span(const SpanBasis& b);

}  // namespace chainring
