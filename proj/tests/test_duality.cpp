#include <gtest/gtest.h>

#include "chainring/duality.hpp"
#include "chainring/oracle.hpp"
#include "chainring/sweep.hpp"
#include "support.hpp"

using namespace chainring;
using namespace chainring::test;

namespace {

Code example41() {
    return make_code({f9(), 2, RingElement::embed(f9()->generator()), CodeKind::Type4, 7, 0, 5, {}});
}
RingAut frob9() { return make_aut(1, f9()->one()); }

TEST(SigmaDual, ChainAtHalf) {
    const auto f = f9();
    const RingElement lam{f->generator(), f->one()};
    const Code c = make_code({f, 1, lam, CodeKind::ChainIdeal, 3, 0, 0, {}});
    for (const auto& s : all_automorphisms(f)) {
        const DualResult d = sigma_dual(c, s);
        EXPECT_EQ(d.dual_spec.spec.kind, CodeKind::ChainIdeal);
        EXPECT_EQ(d.dual_spec.spec.i, 3u);
        EXPECT_EQ(code_size_exponent(d.dual_spec), 2u * 3u);
        EXPECT_EQ(d.dual_lambda, dual_constant(lam, s));
    }
}

TEST(SigmaDual, ChainExponent) {
    const auto f = f3();
    const RingElement lam = ring(f, 1, 2);
    for (std::size_t i = 0; i <= 6; ++i) {
        const Code c = make_code({f, 1, lam, CodeKind::ChainIdeal, i, 0, 0, {}});
        const DualResult d = sigma_dual(c, RingAut::identity(*f));
        EXPECT_EQ(d.dual_spec.spec.i, 6 - i);
        EXPECT_EQ(code_size_exponent(d.dual_spec), i);
        EXPECT_EQ(d.clause, "chain");
    }
}

TEST(SigmaDual, WholeAndZero) {
    const auto f = f5();
    const auto one = RingElement::one(*f);
    const DualResult w = sigma_dual(make_code({f, 1, one, CodeKind::Whole, 0, 0, 0, {}}), RingAut::identity(*f));
    EXPECT_EQ(w.dual_spec.spec.kind, CodeKind::Zero);
    const DualResult z = sigma_dual(make_code({f, 1, one, CodeKind::Zero, 0, 0, 0, {}}), RingAut::identity(*f));
    EXPECT_EQ(z.dual_spec.spec.kind, CodeKind::Whole);
}

TEST(SigmaDual, Example41MatchesOracle) {
    const Code c = example41();
    const DualResult d = sigma_dual(c, frob9());
    EXPECT_EQ(code_span(d.dual_spec), brute_dual(code_span(c), frob9()));
    EXPECT_EQ(code_size_exponent(c) + code_size_exponent(d.dual_spec), 2u * 2u * 9u);
}

TEST(SigmaDual, MatchesOracleAt311) {
    for (const auto& lam : ring_units(f3())) {
        for (const auto& c : enumerate_codes(f3(), 1, lam, std::nullopt)) {
            for (const auto& s : all_automorphisms(f3())) {
                const DualResult d = sigma_dual(c, s);
                const SpanBasis oracle = brute_dual(code_span(c), s);
                EXPECT_EQ(code_span(d.dual_spec), oracle) << spec_id(c) << ' ' << s.to_string();
                EXPECT_EQ(span_basis(ambient_of(d.dual_spec), d.witness_generators), oracle) << spec_id(c);
            }
        }
    }
}

TEST(HPrime, RootGate) {
    // gamma = omega with sigma = identity: gamma0^2 != 1.
    const Code c = make_code({f9(), 1, RingElement::embed(f9()->generator()), CodeKind::Type3, 1, 0, 0,
                              {f9()->one()}});
    EXPECT_FALSE(root_gate(c, RingAut::identity(*f9())));
    EXPECT_THROW(h_prime(c, RingAut::identity(*f9())), RootGateViolated);
    const Code h0 = make_code({f9(), 1, RingElement::embed(f9()->generator()), CodeKind::Type3, 1, 0, 0, {}});
    EXPECT_THROW(h_prime(h0, frob9()), std::invalid_argument);
}

TEST(HPrime, DivisibilityMatchesOracleUnderIdentity) {
    // Real-coefficient fixtures: lambda = 1 over F_5, h in the prime field.
    const auto f = f5();
    const auto id = RingAut::identity(*f);
    std::size_t checked = 0;
    for (const auto& c : enumerate_codes(f, 1, RingElement::one(*f), std::nullopt)) {
        if ((c.spec.kind != CodeKind::Type3 && c.spec.kind != CodeKind::Type4) || c.spec.h_zero()) continue;
        const bool closed = is_sigma_self_orthogonal(c, id).holds;
        EXPECT_EQ(closed, brute_self_orthogonal(code_span(c), id)) << spec_id(c);
        ++checked;
    }
    EXPECT_GE(checked, 100u);
}

TEST(NilDivides, Examples) {
    const auto f = f3();
    const NilExpansion zero{zero_word(*f, 4), f->one()};
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_TRUE(nil_divides(k, zero));
    NilExpansion e{zero_word(*f, 4), f->one()};
    e.coeffs[0] = RingElement::one(*f);
    EXPECT_TRUE(nil_divides(0, e));
    EXPECT_FALSE(nil_divides(1, e));
    e.coeffs[0] = RingElement::zero(*f);
    e.coeffs[2] = RingElement::one(*f);
    EXPECT_TRUE(nil_divides(2, e));
    EXPECT_FALSE(nil_divides(3, e));
}

TEST(SelfOrthogonal, Examples) {
    const auto f = f3();
    const Code half = make_code({f, 1, ring(f, 1, 1), CodeKind::ChainIdeal, 3, 0, 0, {}});
    for (const auto& s : all_automorphisms(f)) EXPECT_TRUE(is_sigma_self_orthogonal(half, s).holds);

    const Verdict v1 = is_sigma_self_orthogonal(example41(), frob9());
    EXPECT_TRUE(v1.holds);
    EXPECT_EQ(v1.clause, "type4.h0.omega_plus_i");
    const Verdict v2 = is_sigma_self_orthogonal(example41(), RingAut::identity(*f9()));
    EXPECT_FALSE(v2.holds);
    EXPECT_EQ(v2.clause, "root_gate");

    const Code t3 = make_code({f, 1, RingElement::one(*f), CodeKind::Type3, 1, 0, 0, {}});
    EXPECT_FALSE(is_sigma_self_orthogonal(t3, RingAut::identity(*f)).holds);
}

TEST(SelfDual, Examples) {
    const auto f = f3();
    const Code half = make_code({f, 1, ring(f, 2, 1), CodeKind::ChainIdeal, 3, 0, 0, {}});
    for (const auto& s : all_automorphisms(f)) {
        const Verdict v = is_sigma_self_dual(half, s);
        EXPECT_TRUE(v.holds);
        EXPECT_EQ(v.clause, "chain.i_eq_n");
    }
    for (std::size_t i = 1; i < 3; ++i) {
        const Code t3 = make_code({f, 1, RingElement::one(*f), CodeKind::Type3, i, 0, 0, {}});
        for (const auto& s : all_automorphisms(f)) EXPECT_FALSE(is_sigma_self_dual(t3, s).holds);
    }
    // omega + i = n with the root gate satisfied (gamma = 1).
    const Code t4 = make_code({f, 1, RingElement::one(*f), CodeKind::Type4, 2, 0, 1, {}});
    const Verdict v = is_sigma_self_dual(t4, RingAut::identity(*f));
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.clause, "type4.h0.omega_plus_i_eq_n");
    EXPECT_TRUE(brute_dual(code_span(t4), RingAut::identity(*f)) == code_span(t4));
}

TEST(Predicates, MatchOracleAt311) {
    for (const auto& lam : ring_units(f3())) {
        for (const auto& c : enumerate_codes(f3(), 1, lam, std::nullopt)) {
            const SpanBasis b = code_span(c);
            for (const auto& s : all_automorphisms(f3())) {
                EXPECT_EQ(is_sigma_self_orthogonal(c, s).holds, brute_self_orthogonal(b, s)) << spec_id(c);
                EXPECT_EQ(is_sigma_self_dual(c, s).holds, brute_dual(b, s) == b) << spec_id(c);
            }
        }
    }
}

TEST(HPrimeForms, LiteralFormsDisagreeSomewhere) {
    // Under a nontrivial sigma the unscaled forms give wrong verdicts.
    std::size_t disagreements = 0;
    const auto f = f5();
    for (const auto& lam : ring_units(f)) {
        if (!lam.in_field()) continue;
        for (const auto& c : enumerate_codes(f, 1, lam, std::nullopt)) {
            if ((c.spec.kind != CodeKind::Type3 && c.spec.kind != CodeKind::Type4) || c.spec.h_zero()) continue;
            for (const auto& s : all_automorphisms(f)) {
                if (!root_gate(c, s)) continue;
                const bool good = hprime_divides(c, s, HPrimeForm::Rescaled);
                if (good != hprime_divides(c, s, HPrimeForm::GammaPower)) ++disagreements;
            }
        }
    }
    EXPECT_GT(disagreements, 0u);
}

}  // namespace
