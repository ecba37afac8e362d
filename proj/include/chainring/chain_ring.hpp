#pragma once

// The chain ring R = F_{p^m} + u F_{p^m} with u^2 = 0 and its automorphisms.

#include <string>
#include <vector>

#include "chainring/gf.hpp"

namespace chainring {

/// a + u b.
struct RingElement {
    FieldElement a;
    FieldElement b;

    static RingElement zero(const FieldCtx& f) { return {f.zero(), f.zero()}; }
    static RingElement one(const FieldCtx& f) { return {f.one(), f.zero()}; }
    static RingElement u(const FieldCtx& f) { return {f.zero(), f.one()}; }
    static RingElement embed(const FieldElement& x) { return {x, x.ctx().zero()}; }

    const FieldCtx& ctx() const { return a.ctx(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_unit() const { return !a.is_zero(); }
    bool in_field() const { return b.is_zero(); }

    RingElement operator+(const RingElement& o) const { return {a + o.a, b + o.b}; }
    RingElement operator-(const RingElement& o) const { return {a - o.a, b - o.b}; }
    RingElement operator-() const { return {-a, -b}; }
    RingElement operator*(const RingElement& o) const { return {a * o.a, a * o.b + b * o.a}; }
    RingElement operator*(const FieldElement& c) const { return {a * c, b * c}; }
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    /// u * this.
    RingElement times_u() const { return {a.ctx().zero(), a}; }

    friend bool operator==(const RingElement& x, const RingElement& y) { return x.a == y.a && x.b == y.b; }

    std::string to_string() const;
};

/// (a + u b)^{-1} = a^{-1} - u a^{-2} b. Throws NotAUnit when a = 0.
RingElement ring_inv(const RingElement& x);

/// The automorphism a + u b -> theta(a) + u epsilon theta(b).
struct RingAut {
    FieldAut theta;
    FieldElement epsilon;

    static RingAut identity(const FieldCtx& f) { return {FieldAut{0}, f.one()}; }

    RingElement operator()(const RingElement& x) const;

    friend bool operator==(const RingAut& x, const RingAut& y) {
        return x.theta == y.theta && x.epsilon == y.epsilon;
    }

    std::string to_string() const;
};

/// Throws std::invalid_argument when epsilon is zero.
RingAut make_aut(unsigned h, const FieldElement& epsilon);
RingElement aut_apply(const RingAut& sigma, const RingElement& x);
/// (theta^{-1}, theta^{-1}(epsilon^{-1})).
RingAut aut_invert(const RingAut& sigma);
/// outer after inner.
RingAut aut_compose(const RingAut& outer, const RingAut& inner);
/// Every automorphism of R, ordered by h and then by epsilon's index.
std::vector<RingAut> all_automorphisms(const FieldPtr& f);

/// The constant of the sigma-dual of a lambda-constacyclic code,
/// sigma^{-1}(lambda^{-1}).
RingElement dual_constant(const RingElement& lambda, const RingAut& sigma);

/// All units of R in index order (a-part index major).
std::vector<RingElement> ring_units(const FieldPtr& f);

}  // namespace chainring
