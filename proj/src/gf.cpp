#include "chainring/gf.hpp"

#include <algorithm>
#include <sstream>

namespace chainring {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo the monic polynomial d, both lowest degree first.
Poly poly_rem(Poly a, const Poly& d, std::uint32_t p) {
    const std::size_t dd = d.size() - 1;
    for (std::size_t k = a.size(); k-- > dd;) {
        const std::uint64_t c = a[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            a[k - dd + j] = static_cast<std::uint32_t>((a[k - dd + j] + (p - c) * d[j]) % p);
        }
    }
    a.resize(std::min(a.size(), dd));
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p, unsigned m) {
    // Every reducible polynomial of degree m has a monic factor of degree at
    // most m/2.
    for (unsigned deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (unsigned k = 0; k < deg; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly d(deg + 1, 0);
            std::uint64_t v = code;
            for (unsigned k = 0; k < deg; ++k) {
                d[k] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            d[deg] = 1;
            const Poly r = poly_rem(f, d, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), order_(1), modulus_(std::move(modulus)) {
    for (unsigned k = 0; k < m_; ++k) order_ *= p_;
}

FieldPtr FieldCtx::make(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (p == 2) throw std::invalid_argument("p must be odd");
    if (m == 0 || m > kMaxExtensionDegree) {
        throw std::invalid_argument("m must lie in 1.." + std::to_string(kMaxExtensionDegree));
    }
    std::uint64_t order = 1;
    for (unsigned k = 0; k < m; ++k) {
        order *= p;
        if (order > (1ull << 31)) throw std::invalid_argument("p^m exceeds 2^31");
    }
    if (p >= (1u << 16)) throw std::invalid_argument("p must be below 2^16");
    if (modulus.size() != m + 1) throw std::invalid_argument("modulus must have m+1 coefficients");
    for (std::size_t k = 0; k < modulus.size(); ++k) {
        if (modulus[k] >= p) throw std::invalid_argument("modulus coefficient " + std::to_string(k) + " out of range");
    }
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic (leading coefficient 1)");
    if (!is_irreducible(modulus, p, m)) throw std::invalid_argument("modulus is reducible over F_p");
    return std::make_shared<const FieldCtx>(p, m, std::move(modulus));
}

bool FieldCtx::has_builtin(std::uint32_t p, unsigned m) { return m == 1 || (m == 2 && (p == 3 || p == 5)); }

FieldPtr FieldCtx::builtin(std::uint32_t p, unsigned m) {
    if (m == 1) return make(p, 1, {0, 1});
    if (m == 2 && p == 3) return make(3, 2, {1, 0, 1});
    if (m == 2 && p == 5) return make(5, 2, {3, 0, 1});
    throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                                "; supply one explicitly");
}

FieldElement::Coeffs FieldCtx::mul(const FieldElement::Coeffs& a, const FieldElement::Coeffs& b) const {
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
    for (unsigned k = 2 * m_ - 1; k-- > m_;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned j = 0; j <= m_; ++j) prod[k - m_ + j] = (prod[k - m_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    FieldElement::Coeffs out{};
    for (unsigned k = 0; k < m_; ++k) out[k] = static_cast<std::uint32_t>(prod[k]);
    return out;
}

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), {}); }

FieldElement FieldCtx::one() const {
    FieldElement::Coeffs c{};
    c[0] = 1;
    return FieldElement(shared_from_this(), c);
}

FieldElement FieldCtx::generator() const {
    if (m_ == 1) {
        // The class of x modulo x - r is r = -modulus[0].
        return from_int(-static_cast<std::int64_t>(modulus_[0]));
    }
    FieldElement::Coeffs c{};
    c[1] = 1;
    return FieldElement(shared_from_this(), c);
}

FieldElement FieldCtx::from_int(std::int64_t v) const {
    FieldElement::Coeffs c{};
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    c[0] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    return FieldElement(shared_from_this(), c);
}

FieldElement FieldCtx::from_index(std::uint64_t index) const {
    if (index >= order_) throw std::out_of_range("field element index out of range");
    FieldElement::Coeffs c{};
    for (unsigned k = 0; k < m_; ++k) {
        c[k] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return FieldElement(shared_from_this(), c);
}

std::vector<FieldElement> FieldCtx::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order_);
    for (std::uint64_t k = 0; k < order_; ++k) out.push_back(from_index(k));
    return out;
}

std::vector<FieldElement> FieldCtx::units() const {
    std::vector<FieldElement> out;
    out.reserve(order_ - 1);
    for (std::uint64_t k = 1; k < order_; ++k) out.push_back(from_index(k));
    return out;
}

FieldElement::FieldElement(FieldPtr ctx, const Coeffs& reduced) : ctx_(std::move(ctx)), c_(reduced) {}

std::span<const std::uint32_t> FieldElement::coeffs() const { return {c_.data(), ctx_->m()}; }

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FieldElement::in_prime_field() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t FieldElement::index() const {
    std::uint64_t v = 0;
    for (unsigned k = ctx_->m(); k-- > 0;) v = v * ctx_->p() + c_[k];
    return v;
}

void FieldElement::require_same(const FieldElement& o) const {
    if (!ctx_->same_field(*o.ctx_)) throw ContextMismatch("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    Coeffs c{};
    const auto p = ctx_->p();
    for (unsigned k = 0; k < ctx_->m(); ++k) c[k] = (c_[k] + o.c_[k]) % p;
    return FieldElement(ctx_, c);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    Coeffs c{};
    const auto p = ctx_->p();
    for (unsigned k = 0; k < ctx_->m(); ++k) c[k] = (c_[k] + p - o.c_[k]) % p;
    return FieldElement(ctx_, c);
}

FieldElement FieldElement::operator-() const {
    Coeffs c{};
    const auto p = ctx_->p();
    for (unsigned k = 0; k < ctx_->m(); ++k) c[k] = (p - c_[k]) % p;
    return FieldElement(ctx_, c);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return FieldElement(ctx_, ctx_->mul(c_, o.c_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_->same_field(*b.ctx_) && a.c_ == b.c_;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (unsigned k = 0; k < ctx_->m(); ++k) os << (k ? "," : "") << c_[k];
    os << ']';
    return os.str();
}

FieldElement field_make(const FieldPtr& ctx, std::span<const std::uint32_t> coeffs) {
    const auto p = ctx->p();
    const unsigned m = ctx->m();
    std::vector<std::uint32_t> a(coeffs.begin(), coeffs.end());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] >= p) {
            throw std::invalid_argument("coefficient at index " + std::to_string(k) + " out of range 0.." +
                                        std::to_string(p - 1));
        }
    }
    if (a.size() > m) a = poly_rem(std::move(a), ctx->modulus(), p);
    FieldElement::Coeffs c{};
    std::copy(a.begin(), a.end(), c.begin());
    return FieldElement(ctx, c);
}

FieldElement field_make(const FieldPtr& ctx, std::initializer_list<std::uint32_t> coeffs) {
    return field_make(ctx, std::span<const std::uint32_t>(coeffs.begin(), coeffs.size()));
}

FieldElement pow(const FieldElement& a, std::int64_t e) {
    const auto& ctx = a.ctx();
    if (e == 0) return ctx.one();
    if (a.is_zero()) {
        if (e < 0) throw NotAUnit("zero raised to a negative power: not a unit");
        return a;
    }
    const auto group = static_cast<std::int64_t>(ctx.order() - 1);
    std::int64_t r = e % group;
    if (r < 0) r += group;
    FieldElement result = ctx.one();
    FieldElement base = a;
    for (auto k = static_cast<std::uint64_t>(r); k > 0; k >>= 1) {
        if (k & 1) result *= base;
        base *= base;
    }
    return result;
}

FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) throw NotAUnit("zero is not a unit");
    return pow(a, static_cast<std::int64_t>(a.ctx().order() - 2));
}

FieldElement pth_power(const FieldElement& a, unsigned k) {
    FieldElement r = a;
    const auto p = static_cast<std::int64_t>(a.ctx().p());
    for (unsigned j = 0; j < k; ++j) r = pow(r, p);
    return r;
}

FieldElement frobenius(const FieldElement& a, FieldAut theta) { return pth_power(a, theta.h % a.ctx().m()); }

FieldAut aut_inverse(FieldAut theta, unsigned m) { return FieldAut{(m - theta.h % m) % m}; }

FieldAut aut_compose(FieldAut outer, FieldAut inner, unsigned m) { return FieldAut{(outer.h + inner.h) % m}; }

bool is_square(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("squareness is only defined here for units");
    return pow(a, static_cast<std::int64_t>((a.ctx().order() - 1) / 2)).is_one();
}

FieldElement inverse_root(const FieldElement& gamma, unsigned s) {
    if (gamma.is_zero()) throw NotAUnit("zero is not a unit");
    const unsigned m = gamma.ctx().m();
    const unsigned e = m - s % m;
    return inverse(pth_power(gamma, e));
}

}  // namespace chainring
