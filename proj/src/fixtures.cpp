#include "chainring/fixtures.hpp"

#include "chainring/duality.hpp"
#include "chainring/oracle.hpp"

namespace chainring {

namespace {

// Builds words from (a0, a1, b0, b1) tuples over a degree-2 field.
struct Quad {
    std::uint32_t a0, a1, b0, b1;
};

Word word(const FieldPtr& f, std::initializer_list<Quad> cells) {
    Word w;
    for (const auto& c : cells) w.push_back({field_make(f, {c.a0, c.a1}), field_make(f, {c.b0, c.b1})});
    return w;
}

QuotientPoly linear_power(const FieldElement& a, const FieldElement& b, std::size_t k, const RingElement& lambda,
                          std::size_t n) {
    // (a x + b)^k.
    const QuotientPoly base({RingElement::embed(b), RingElement::embed(a)}, lambda, n);
    QuotientPoly r = QuotientPoly::constant(RingElement::one(a.ctx()), lambda, n);
    for (std::size_t j = 0; j < k; ++j) r = r * base;
    return r;
}

QuotientPoly rebase(const QuotientPoly& f, const RingElement& lambda) { return {f.coeffs(), lambda, f.n()}; }

}  // namespace

ExampleFixture example_fixture(int which) {
    switch (which) {
        case 1:
        case 3: {
            const FieldPtr f = FieldCtx::builtin(3, 2);
            const FieldElement w = f->generator();
            const RingElement lam = RingElement::embed(w);
            const std::size_t n = 9;
            const RingAut frob = make_aut(1, f->one());
            const FieldElement one = f->one();
            if (which == 1) {
                // 1 = 1, w = omega, m = -1, -w = -omega; u-parts in the b slot.
                std::vector<Word> rows = {
                    word(f, {{1, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0},
                             {2, 0, 0, 0}, {0, 0, 0, 0}, {2, 0, 0, 0}}),
                    word(f, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {2, 0, 0, 0},
                             {0, 0, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}}),
                    word(f, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1},
                             {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 2, 0}}),
                    word(f, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}, {0, 0, 2, 0},
                             {0, 0, 0, 2}, {0, 0, 2, 0}, {0, 0, 0, 1}}),
                };
                CodeSpec printed{f, 2, lam, CodeKind::Type4, 7, 0, 5, {}};
                std::vector<QuotientPoly> gens = {linear_power(w, one, 7, lam, n),
                                                  linear_power(w, one, 5, lam, n) * RingElement::u(*f)};
                return {1, f, 2, lam, std::move(rows), frob, std::move(printed), std::move(gens)};
            }
            std::vector<Word> rows = {word(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 0, 0},
                                               {0, 1, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 0, 0}})};
            CodeSpec printed{f, 2, lam, CodeKind::Type3, 8, 0, 0, {}};
            std::vector<QuotientPoly> gens = {linear_power(w, one, 8, lam, n)};
            return {3, f, 2, lam, std::move(rows), frob, std::move(printed), std::move(gens)};
        }
        case 2: {
            const FieldPtr f = FieldCtx::builtin(5, 2);
            const FieldElement c = field_make(f, {2, 2});
            const RingElement lam = RingElement::embed(c);
            const std::size_t n = 5;
            std::vector<Word> rows = {
                word(f, {{1, 0, 0, 0}, {2, 2, 0, 0}, {2, 3, 2, 3}, {1, 0, 3, 0}, {2, 2, 2, 2}}),
                word(f, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 4, 4}, {0, 0, 1, 4}, {0, 0, 4, 0}}),
            };
            CodeSpec printed{f, 1, lam, CodeKind::Type4, 4, 2, 3, {f->one()}};
            const FieldElement one = f->one();
            std::vector<QuotientPoly> gens = {
                linear_power(c, -one, 4, lam, n) + linear_power(c, -one, 2, lam, n) * RingElement::u(*f),
                linear_power(c, one, 3, lam, n) * RingElement::u(*f)};
            return {2, f, 1, lam, std::move(rows), make_aut(1, f->one()), std::move(printed), std::move(gens)};
        }
        default: throw std::invalid_argument("example must be 1, 2 or 3");
    }
}

ExampleReport analyze_example(int which) {
    const ExampleFixture fx = example_fixture(which);
    const FieldPtr& f = fx.field;
    const Ambient amb = make_ambient(f, fx.s, fx.lambda);
    const SpanBasis span = module_span(amb, fx.rows);
    const RingAut id = RingAut::identity(*f);

    ExampleReport r{which, f->p(), span.rank(), brute_self_orthogonal(span, fx.sigma), brute_self_orthogonal(span, id),
                    false, std::nullopt, std::nullopt, {}, {}, validate_spec(fx.printed), std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt, {}};
    r.sigma_self_dual = brute_dual(span, fx.sigma) == span;

    std::vector<std::pair<std::string, RingElement>> readings = {{"text constant", fx.lambda}};
    if (which == 3) readings.push_back({"ambient modulus x^9 - 1", RingElement::one(*f)});
    for (const auto& [label, lam] : readings) {
        const Ambient a = make_ambient(f, fx.s, lam);
        const SpanBasis rows = module_span(a, fx.rows);
        std::vector<QuotientPoly> gens;
        for (const auto& g : fx.printed_generators) gens.push_back(rebase(g, lam));
        r.readings.push_back({label, lam, ideal_check(rows, lam), span_basis(a, gens) == rows});
    }
    for (const auto& lam : ring_units(f)) {
        if (ideal_check(module_span(make_ambient(f, fx.s, lam), fx.rows), lam)) r.consistent_lambdas.push_back(lam);
    }
    for (const auto& lam : r.consistent_lambdas) {
        bool listed = false;
        for (const auto& x : r.readings) listed = listed || x.lambda == lam;
        if (listed) continue;
        const Ambient a = make_ambient(f, fx.s, lam);
        const SpanBasis rows = module_span(a, fx.rows);
        std::vector<QuotientPoly> gens;
        for (const auto& g : fx.printed_generators) gens.push_back(rebase(g, lam));
        r.readings.push_back({"consistent constant", lam, true, span_basis(a, gens) == rows});
    }

    if (ideal_check(span, fx.lambda)) {
        r.classified = classify_span(span);
    } else if (!r.consistent_lambdas.empty()) {
        r.classified = classify_span(module_span(make_ambient(f, fx.s, r.consistent_lambdas.front()), fx.rows));
    }
    if (r.classified) {
        r.spec_sigma_self_orthogonal = is_sigma_self_orthogonal(*r.classified, fx.sigma).holds;
        r.spec_euclidean_self_orthogonal = is_sigma_self_orthogonal(*r.classified, id).holds;
        r.spec_sigma_self_dual = is_sigma_self_dual(*r.classified, fx.sigma).holds;
    }
    if (which == 3) {
        r.min_distance = min_distance(span);
        // |C| = |R|^{n-d+1} with |R| = p^{2m}.
        if (r.min_distance) r.mds = r.size_exponent == 2 * f->m() * (amb.n - *r.min_distance + 1);
    }

    const FieldElement gamma0 = inverse_root(fx.lambda.a, fx.s);
    r.notes.push_back("gamma0 = " + gamma0.to_string());
    if (which == 2) {
        const FieldElement base = field_make(f, {2, 2});
        r.notes.push_back(std::string("printed base 2+2w ") + (base == gamma0 ? "equals" : "differs from") + " gamma0");
    }
    return r;
}

}  // namespace chainring
