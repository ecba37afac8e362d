#include "chainring/polyquot.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainring {

Word zero_word(const FieldCtx& f, std::size_t n) { return Word(n, RingElement::zero(f)); }

QuotientPoly::QuotientPoly(Word coeffs, RingElement lambda, std::size_t n) : lambda_(std::move(lambda)) {
    if (n == 0) throw std::invalid_argument("quotient ring length must be positive");
    const auto& f = lambda_.ctx();
    coeffs_ = zero_word(f, n);
    // x^{qn + r} = lambda^q x^r.
    RingElement twist = RingElement::one(f);
    for (std::size_t start = 0; start < coeffs.size(); start += n) {
        for (std::size_t r = 0; r < n && start + r < coeffs.size(); ++r) {
            const auto& c = coeffs[start + r];
            if (!c.is_zero()) coeffs_[r] += twist * c;
        }
        twist *= lambda_;
    }
}

QuotientPoly QuotientPoly::zero(const RingElement& lambda, std::size_t n) { return {Word{}, lambda, n}; }

QuotientPoly QuotientPoly::constant(const RingElement& c, const RingElement& lambda, std::size_t n) {
    return {Word{c}, lambda, n};
}

QuotientPoly QuotientPoly::monomial(std::size_t k, const RingElement& lambda, std::size_t n) {
    Word w = zero_word(lambda.ctx(), k + 1);
    w[k] = RingElement::one(lambda.ctx());
    return {std::move(w), lambda, n};
}

bool QuotientPoly::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

void QuotientPoly::require_same(const QuotientPoly& o) const {
    if (!same_ring(o)) throw ContextMismatch("quotient polynomials live in different rings");
}

QuotientPoly QuotientPoly::operator+(const QuotientPoly& o) const {
    require_same(o);
    QuotientPoly r = *this;
    for (std::size_t k = 0; k < n(); ++k) r.coeffs_[k] += o.coeffs_[k];
    return r;
}

QuotientPoly QuotientPoly::operator-(const QuotientPoly& o) const {
    require_same(o);
    QuotientPoly r = *this;
    for (std::size_t k = 0; k < n(); ++k) r.coeffs_[k] -= o.coeffs_[k];
    return r;
}

QuotientPoly QuotientPoly::operator-() const {
    QuotientPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QuotientPoly QuotientPoly::operator*(const QuotientPoly& o) const {
    require_same(o);
    const auto& f = field();
    Word prod = zero_word(f, 2 * n() - 1);
    for (std::size_t i = 0; i < n(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n(); ++j) {
            if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return {std::move(prod), lambda_, n()};
}

QuotientPoly QuotientPoly::operator*(const RingElement& c) const {
    QuotientPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QuotientPoly QuotientPoly::shift() const {
    QuotientPoly r = *this;
    r.coeffs_[0] = lambda_ * coeffs_[n() - 1];
    for (std::size_t k = 1; k < n(); ++k) r.coeffs_[k] = coeffs_[k - 1];
    return r;
}

QuotientPoly qmul(const QuotientPoly& f, const QuotientPoly& g) { return f * g; }

QuotientPoly nilpotent_power(const FieldElement& root, std::size_t k, const RingElement& lambda, std::size_t n) {
    if (k > 2 * n) throw std::out_of_range("nilpotent power exponent must lie in 0..2n");
    const auto& f = root.ctx();
    const QuotientPoly base({RingElement::embed(-f.one()), RingElement::embed(root)}, lambda, n);
    QuotientPoly r = QuotientPoly::constant(RingElement::one(f), lambda, n);
    for (std::size_t j = 0; j < k; ++j) r = r * base;
    return r;
}

NilExpansion nil_expand(const Word& plain, const FieldElement& base) {
    if (base.is_zero()) throw NotAUnit("expansion base must be a unit");
    const auto& f = base.ctx();
    const FieldElement base_inv = inverse(base);
    const std::size_t len = plain.size();
    NilExpansion out{zero_word(f, len), base};
    // Dividing q by (base x - 1): q = quo * (base x - 1) + rem, rem constant.
    Word q = plain;
    for (std::size_t j = 0; j < len; ++j) {
        if (q.empty()) break;
        Word quo = zero_word(f, q.size() > 1 ? q.size() - 1 : 0);
        RingElement carry = RingElement::zero(f);
        for (std::size_t k = q.size(); k-- > 1;) {
            // coefficient of x^k in q minus the contribution -carry.
            const RingElement c = q[k] + carry;
            quo[k - 1] = c * base_inv;
            carry = quo[k - 1];
        }
        out.coeffs[j] = q[0] + carry;
        q = std::move(quo);
    }
    return out;
}

NilExpansion nil_expand(const QuotientPoly& f, const FieldElement& base) { return nil_expand(f.coeffs(), base); }

Word nil_collect_plain(const NilExpansion& e) {
    const auto& f = e.base.ctx();
    const std::size_t len = e.coeffs.size();
    Word acc;
    // Horner in y = base x - 1.
    for (std::size_t j = len; j-- > 0;) {
        Word next = zero_word(f, acc.size() + 1);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k] * e.base;
            next[k] -= acc[k];
        }
        next[0] += e.coeffs[j];
        acc = std::move(next);
    }
    acc.resize(len, RingElement::zero(f));
    return acc;
}

QuotientPoly nil_collect(const NilExpansion& e, const RingElement& lambda, std::size_t n) {
    return {nil_collect_plain(e), lambda, n};
}

long degree(const Word& f) {
    for (std::size_t k = f.size(); k-- > 0;) {
        if (!f[k].is_zero()) return static_cast<long>(k);
    }
    return -1;
}

Word reciprocal(const Word& f) {
    const long r = degree(f);
    if (r < 0) throw std::invalid_argument("reciprocal of the zero polynomial is undefined");
    Word out(f.begin(), f.begin() + r + 1);
    std::reverse(out.begin(), out.end());
    return out;
}

Word sigma_map(std::span<const RingElement> w, const RingAut& sigma) {
    Word out;
    out.reserve(w.size());
    for (const auto& c : w) out.push_back(sigma(c));
    return out;
}

QuotientPoly sigma_map(const QuotientPoly& f, const RingAut& sigma) {
    return {sigma_map(f.coeffs(), sigma), sigma(f.lambda()), f.n()};
}

RingElement euclidean_inner(std::span<const RingElement> x, std::span<const RingElement> y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner product of vectors with different lengths");
    if (x.empty()) throw std::invalid_argument("inner product of empty vectors");
    RingElement acc = RingElement::zero(x[0].ctx());
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
    return acc;
}

RingElement sigma_inner(std::span<const RingElement> x, std::span<const RingElement> y, const RingAut& sigma) {
    if (x.size() != y.size()) throw std::invalid_argument("inner product of vectors with different lengths");
    if (x.empty()) throw std::invalid_argument("inner product of empty vectors");
    RingElement acc = RingElement::zero(x[0].ctx());
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * sigma(y[k]);
    return acc;
}

QuotientPoly rescale_variable(const QuotientPoly& f, const FieldElement& c) {
    if (c.is_zero()) throw NotAUnit("rescaling factor must be a unit");
    const auto n = f.n();
    const RingElement target = f.lambda() * pow(c, -static_cast<std::int64_t>(n));
    Word w = f.coeffs();
    FieldElement ck = c.ctx().one();
    for (auto& x : w) {
        x = x * ck;
        ck *= c;
    }
    return {std::move(w), target, n};
}

}  // namespace chainring
