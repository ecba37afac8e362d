#pragma once

// Polynomials over R and the quotient rings R[x]/<x^n - lambda>.

#include <span>
#include <vector>

#include "chainring/chain_ring.hpp"

namespace chainring {

/// A vector in R^n, or the coefficient list (lowest degree first) of a plain
/// polynomial over R.
using Word = std::vector<RingElement>;

Word zero_word(const FieldCtx& f, std::size_t n);

/// An element of R[x]/<x^n - lambda>, stored as its representative of degree
/// below n.
class QuotientPoly {
public:
    /// Reduces `coeffs` of any length with x^n = lambda.
    QuotientPoly(Word coeffs, RingElement lambda, std::size_t n);

    static QuotientPoly zero(const RingElement& lambda, std::size_t n);
    static QuotientPoly constant(const RingElement& c, const RingElement& lambda, std::size_t n);
    /// x^k reduced.
    static QuotientPoly monomial(std::size_t k, const RingElement& lambda, std::size_t n);

    std::size_t n() const { return coeffs_.size(); }
    const RingElement& lambda() const { return lambda_; }
    const Word& coeffs() const { return coeffs_; }
    const RingElement& operator[](std::size_t k) const { return coeffs_[k]; }
    const FieldCtx& field() const { return lambda_.ctx(); }

    bool is_zero() const;
    bool same_ring(const QuotientPoly& o) const { return n() == o.n() && lambda_ == o.lambda_; }

    QuotientPoly operator+(const QuotientPoly& o) const;
    QuotientPoly operator-(const QuotientPoly& o) const;
    QuotientPoly operator-() const;
    /// Schoolbook product followed by x^n = lambda.
    QuotientPoly operator*(const QuotientPoly& o) const;
    QuotientPoly operator*(const RingElement& c) const;
    /// x * this, i.e. the lambda-twisted shift of the coefficient vector.
    QuotientPoly shift() const;

    friend bool operator==(const QuotientPoly& a, const QuotientPoly& b) {
        return a.same_ring(b) && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same(const QuotientPoly& o) const;

    Word coeffs_;
    RingElement lambda_;
};

QuotientPoly qmul(const QuotientPoly& f, const QuotientPoly& g);

/// (root * x - 1)^k in R[x]/<x^n - lambda>, for 0 <= k <= 2n.
QuotientPoly nilpotent_power(const FieldElement& root, std::size_t k, const RingElement& lambda, std::size_t n);

/// Coefficients c_j with f = sum_j c_j (base * x - 1)^j.
struct NilExpansion {
    Word coeffs;
    FieldElement base;

    std::size_t size() const { return coeffs.size(); }
};

/// Repeated synthetic division of f's representative by (base * x - 1).
NilExpansion nil_expand(const QuotientPoly& f, const FieldElement& base);
/// The same on a plain polynomial; the expansion has coeffs.size() terms.
NilExpansion nil_expand(const Word& plain, const FieldElement& base);

/// Plain polynomial sum_j c_j (base * x - 1)^j (degree below e.size()).
Word nil_collect_plain(const NilExpansion& e);
/// The class of the collected polynomial in R[x]/<x^n - lambda>; terms with
/// j >= n are reduced like any other power.
QuotientPoly nil_collect(const NilExpansion& e, const RingElement& lambda, std::size_t n);

/// Degree of a plain polynomial; -1 for the zero polynomial.
long degree(const Word& f);

/// a_r + a_{r-1} x + ... + a_0 x^r for f of degree r. Throws
/// std::invalid_argument for f = 0.
Word reciprocal(const Word& f);

/// Coefficientwise sigma; the result lives over the constant sigma(lambda).
QuotientPoly sigma_map(const QuotientPoly& f, const RingAut& sigma);
Word sigma_map(std::span<const RingElement> w, const RingAut& sigma);

/// sum_i x_i sigma(y_i).
RingElement sigma_inner(std::span<const RingElement> x, std::span<const RingElement> y, const RingAut& sigma);
/// sum_i x_i y_i.
RingElement euclidean_inner(std::span<const RingElement> x, std::span<const RingElement> y);

/// f(x) -> f(c x), a ring isomorphism from R[x]/<x^n - mu> onto
/// R[x]/<x^n - c^{-n} mu>. Coefficient k is multiplied by c^k.
QuotientPoly rescale_variable(const QuotientPoly& f, const FieldElement& c);

}  // namespace chainring
