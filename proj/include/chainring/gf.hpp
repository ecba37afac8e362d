#pragma once

// Arithmetic in the prime field F_p and its extensions F_{p^m}.
//
// A field is described by a FieldCtx: the odd prime p, the degree m, and a
// monic irreducible modulus polynomial of degree m over F_p. Elements are
// reduced coefficient vectors with respect to the modulus basis
// 1, w, ..., w^{m-1}, where w is the class of x.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainring {

inline constexpr unsigned kMaxExtensionDegree = 8;

class NotAUnit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldElement {
public:
    using Coeffs = std::array<std::uint32_t, kMaxExtensionDegree>;

    FieldElement(FieldPtr ctx, const Coeffs& reduced);

    const FieldCtx& ctx() const { return *ctx_; }
    const FieldPtr& ctx_ptr() const { return ctx_; }
    std::span<const std::uint32_t> coeffs() const;
    std::uint32_t coeff(unsigned k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool in_prime_field() const;

    /// Position of this element in the field's enumeration order: the
    /// coefficient vector read as base-p digits, lowest degree first.
    std::uint64_t index() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    void require_same(const FieldElement& o) const;

    FieldPtr ctx_;
    Coeffs c_{};
};

/// The automorphism a -> a^{p^h} of F_{p^m}.
struct FieldAut {
    unsigned h = 0;
    friend bool operator==(FieldAut, FieldAut) = default;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    /// Validates primality and oddness of p and irreducibility of the
    /// modulus; throws std::invalid_argument when any check fails.
    /// `modulus` lists coefficients lowest degree first and must be monic of
    /// degree m.
    static FieldPtr make(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

    /// Prime fields (modulus x) and the built-in table: x^2+1 over F_3 and
    /// x^2+3 over F_5.
    static FieldPtr builtin(std::uint32_t p, unsigned m);
    static bool has_builtin(std::uint32_t p, unsigned m);

    std::uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x modulo the modulus (the adjoined root).
    FieldElement generator() const;
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_index(std::uint64_t index) const;
    /// All elements in index order.
    std::vector<FieldElement> elements() const;
    std::vector<FieldElement> units() const;

    bool same_field(const FieldCtx& o) const {
        return this == &o || (p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_);
    }

    // Raw coefficient arithmetic used by FieldElement.
    FieldElement::Coeffs mul(const FieldElement::Coeffs& a, const FieldElement::Coeffs& b) const;

    FieldCtx(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

private:
    std::uint32_t p_;
    unsigned m_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint64_t v);

/// Reduces `coeffs` modulo the field modulus. Entries must lie in [0, p);
/// the error message names the first offending index.
FieldElement field_make(const FieldPtr& ctx, std::span<const std::uint32_t> coeffs);
FieldElement field_make(const FieldPtr& ctx, std::initializer_list<std::uint32_t> coeffs);

FieldElement inverse(const FieldElement& a);

/// Repeated-product power. Negative exponents go through the inverse and are
/// reduced modulo the unit-group order.
FieldElement pow(const FieldElement& a, std::int64_t e);

FieldElement frobenius(const FieldElement& a, FieldAut theta);
FieldAut aut_inverse(FieldAut theta, unsigned m);
FieldAut aut_compose(FieldAut outer, FieldAut inner, unsigned m);

/// Whether the unit a is a square, via Euler's criterion.
bool is_square(const FieldElement& a);

/// The unique g with g^{p^s} * gamma = 1. Computed as
/// gamma^{-p^{m - (s mod m)}}; the p^s-th power map is a bijection of
/// F_{p^m}, so the root exists and is unique.
FieldElement inverse_root(const FieldElement& gamma, unsigned s);

/// a^{p^k}.
FieldElement pth_power(const FieldElement& a, unsigned k);

}  // namespace chainring
