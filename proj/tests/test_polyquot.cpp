#include <gtest/gtest.h>

#include "support.hpp"

using namespace chainring;
using namespace chainring::test;

namespace {

TEST(Qmul, Reduction) {
    const auto f = f9();
    const RingElement lam{f->generator(), f->one()};
    const std::size_t n = 4;
    const auto x = QuotientPoly::monomial(1, lam, n);
    EXPECT_EQ(QuotientPoly::monomial(n - 1, lam, n) * x, QuotientPoly::constant(lam, lam, n));
    std::mt19937_64 rng(1);
    const auto g = random_poly(f, lam, n, rng);
    EXPECT_EQ(qmul(g, QuotientPoly::constant(RingElement::one(*f), lam, n)), g);
    EXPECT_EQ(x.shift(), QuotientPoly::monomial(2, lam, n));
}

TEST(Qmul, ContextMismatch) {
    const auto f = f3();
    const auto a = QuotientPoly::zero(RingElement::one(*f), 3);
    const auto b = QuotientPoly::zero(ring(f, 2, 0), 3);
    EXPECT_THROW(a * b, ContextMismatch);
}

TEST(Qmul, CommutativeAssociative) {
    const auto f = f5();
    const RingElement lam = ring(f, 2, 3);
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_poly(f, lam, 5, rng), b = random_poly(f, lam, 5, rng), c = random_poly(f, lam, 5, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(NilpotentPower, FieldConstant) {
    const auto f = f9();
    const RingElement lam = RingElement::embed(f->generator());
    const auto g0 = inverse_root(lam.a, 2);
    EXPECT_TRUE(nilpotent_power(g0, 9, lam, 9).is_zero());
    EXPECT_FALSE(nilpotent_power(g0, 8, lam, 9).is_zero());
    EXPECT_EQ(nilpotent_power(g0, 0, lam, 9), QuotientPoly::constant(RingElement::one(*f), lam, 9));
}

TEST(NilpotentPower, ChainConstant) {
    const auto f = f3();
    const RingElement lam = ring(f, 2, 1);
    const std::size_t n = 3;
    const auto a0 = inverse_root(lam.a, 1);
    const auto half = nilpotent_power(a0, n, lam, n);
    // Equals a unit multiple of u: every coefficient has zero field part, and
    // the constant of the u-part is nonzero.
    for (const auto& c : half.coeffs()) EXPECT_TRUE(c.a.is_zero());
    EXPECT_FALSE(half.is_zero());
    EXPECT_TRUE(nilpotent_power(a0, 2 * n, lam, n).is_zero());
    EXPECT_FALSE(nilpotent_power(a0, 2 * n - 1, lam, n).is_zero());
    EXPECT_THROW(nilpotent_power(a0, 2 * n + 1, lam, n), std::out_of_range);
}

TEST(NilExpand, Examples) {
    const auto f = f9();
    const RingElement lam = RingElement::embed(f->generator());
    const auto g0 = inverse_root(lam.a, 2);
    const auto sq = nil_expand(nilpotent_power(g0, 2, lam, 9), g0);
    for (std::size_t j = 0; j < sq.size(); ++j) {
        EXPECT_EQ(sq.coeffs[j], j == 2 ? RingElement::one(*f) : RingElement::zero(*f)) << j;
    }
    const auto ex = nil_expand(QuotientPoly::monomial(1, lam, 9), g0);
    EXPECT_EQ(ex.coeffs[0], RingElement::embed(inverse(g0)));
    EXPECT_EQ(ex.coeffs[1], RingElement::embed(inverse(g0)));
    for (std::size_t j = 2; j < ex.size(); ++j) EXPECT_TRUE(ex.coeffs[j].is_zero());
}

TEST(NilExpand, RoundTrip) {
    std::mt19937_64 rng(3);
    for (const auto& f : {f3(), f9(), f25()}) {
        for (int rep = 0; rep < 20; ++rep) {
            const RingElement lam = {f->units()[rng() % (f->order() - 1)], random_element(f, rng)};
            const auto base = f->units()[rng() % (f->order() - 1)];
            const auto g = random_poly(f, lam, 9, rng);
            EXPECT_EQ(nil_collect(nil_expand(g, base), lam, 9), g);
        }
    }
}

TEST(NilCollect, Examples) {
    const auto f = f3();
    const RingElement lam = RingElement::one(*f);
    const auto base = f->from_int(2);
    NilExpansion zero{zero_word(*f, 3), base};
    EXPECT_TRUE(nil_collect(zero, lam, 3).is_zero());
    NilExpansion one{zero_word(*f, 3), base};
    one.coeffs[0] = RingElement::one(*f);
    EXPECT_EQ(nil_collect(one, lam, 3), QuotientPoly::constant(RingElement::one(*f), lam, 3));
    const auto x = QuotientPoly::monomial(1, lam, 3);
    EXPECT_EQ(nil_collect(nil_expand(x, base), lam, 3), x);
}

TEST(Reciprocal, Examples) {
    const auto f = f3();
    EXPECT_EQ(reciprocal(Word{ring(f, 2, 1)}), Word{ring(f, 2, 1)});
    EXPECT_EQ(reciprocal(Word{ring(f, 1, 0), ring(f, 2, 0)}), (Word{ring(f, 2, 0), ring(f, 1, 0)}));
    EXPECT_EQ(reciprocal(Word{ring(f, 1, 0), ring(f, 2, 0), ring(f, 0, 0)}),
              (Word{ring(f, 2, 0), ring(f, 1, 0)}));
    EXPECT_THROW(reciprocal(zero_word(*f, 3)), std::invalid_argument);
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 30; ++rep) {
        Word w;
        for (int k = 0; k < 5; ++k) w.push_back(random_ring(f, rng));
        w[0] = ring(f, 1, 2);
        w[4] = ring(f, 2, 0);
        EXPECT_EQ(reciprocal(reciprocal(w)), w);
    }
}

TEST(SigmaMap, Examples) {
    const auto f = f9();
    const RingElement lam = RingElement::embed(f->generator());
    std::mt19937_64 rng(5);
    const auto g = random_poly(f, lam, 9, rng);
    EXPECT_EQ(sigma_map(g, RingAut::identity(*f)), g);
    const RingAut s = make_aut(1, f->from_int(2));
    const auto ug = g * RingElement::u(*f);
    EXPECT_EQ(sigma_map(ug, s), sigma_map(g, s) * (RingElement{f->zero(), s.epsilon}));
    EXPECT_EQ(sigma_map(g, s).lambda(), s(lam));
}

TEST(SigmaInner, Examples) {
    const auto f = f9();
    const auto s = make_aut(1, f->from_int(2));
    Word e0 = zero_word(*f, 2), e1 = zero_word(*f, 2);
    e0[0] = RingElement::one(*f);
    e1[1] = RingElement::one(*f);
    EXPECT_TRUE(sigma_inner(e0, e1, s).is_zero());
    const Word u{RingElement::u(*f)};
    EXPECT_TRUE(sigma_inner(u, u, s).is_zero());
    const Word x{ring(f, 1, 1)};
    const Word y{RingElement::one(*f)};
    EXPECT_EQ(sigma_inner(x, y, RingAut::identity(*f)), ring(f, 1, 1));
    EXPECT_EQ(euclidean_inner(x, y), ring(f, 1, 1));
    EXPECT_THROW(sigma_inner(e0, x, s), std::invalid_argument);
}

TEST(RescaleVariable, RingIsomorphism) {
    const auto f = f9();
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 20; ++rep) {
        const RingElement mu{f->units()[rng() % 8], random_element(f, rng)};
        const auto c = f->units()[rng() % 8];
        const auto a = random_poly(f, mu, 9, rng), b = random_poly(f, mu, 9, rng);
        const auto ra = rescale_variable(a, c), rb = rescale_variable(b, c);
        EXPECT_EQ(ra.lambda(), mu * pow(c, -9));
        EXPECT_EQ(rescale_variable(a * b, c), ra * rb);
        EXPECT_EQ(rescale_variable(a + b, c), ra + rb);
        EXPECT_EQ(rescale_variable(ra, inverse(c)), a);
    }
}

}  // namespace
