#include "chainring/oracle.hpp"

namespace chainring {

namespace {

void check_limit(const Ambient& a) {
    if (a.dim() > kOracleMaxDim) {
        throw OracleLimit("ambient dimension " + std::to_string(a.dim()) + " exceeds the oracle limit of " +
                          std::to_string(kOracleMaxDim));
    }
}

// The ring element carried by flattened basis vector v at its position.
RingElement unit_element(const FieldPtr& f, std::size_t r) {
    const unsigned m = f->m();
    std::vector<std::uint32_t> c(m, 0);
    c[r % m] = 1;
    const FieldElement x = field_make(f, c);
    return r < m ? RingElement{x, f->zero()} : RingElement{f->zero(), x};
}

}  // namespace

SpanBasis brute_dual(const SpanBasis& code, const RingAut& sigma) {
    const Ambient& a = code.ambient;
    check_limit(a);
    const unsigned m = a.m();
    const std::size_t dim = a.dim();
    const auto rows = code.rows();
    std::vector<FpVector> constraints(rows.size() * 2 * m, FpVector(dim, 0));
    for (std::size_t v = 0; v < dim; ++v) {
        const std::size_t pos = v / (2 * m);
        const RingElement img = sigma(unit_element(a.field, v % (2 * m)));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const RingElement val = rows[r][pos] * img;
            for (unsigned k = 0; k < m; ++k) {
                constraints[r * 2 * m + k][v] = val.a.coeff(k);
                constraints[r * 2 * m + m + k][v] = val.b.coeff(k);
            }
        }
    }
    Ambient dual = a;
    dual.lambda = dual_constant(a.lambda, sigma);
    SpanBasis out = empty_span(dual);
    for (const auto& y : nullspace(constraints, dim, a.p())) out.space.insert(y);
    return out;
}

bool brute_self_orthogonal(const SpanBasis& code, const RingAut& sigma) {
    const auto rows = code.rows();
    for (const auto& x : rows) {
        for (const auto& y : rows) {
            if (!sigma_inner(x, y, sigma).is_zero()) return false;
        }
    }
    return true;
}

SpanBasis brute_annihilator(const SpanBasis& code) {
    const Ambient& a = code.ambient;
    check_limit(a);
    const unsigned m = a.m();
    const std::size_t dim = a.dim();
    std::vector<FpVector> constraints;
    for (const auto& w : code.rows()) {
        // Column v holds f * e_v, with e_v = c x^pos.
        std::vector<FpVector> block(dim, FpVector(dim, 0));
        QuotientPoly shifted(w, a.lambda, a.n);
        for (std::size_t pos = 0; pos < a.n; ++pos) {
            for (std::size_t r = 0; r < 2 * m; ++r) {
                const FpVector prod = flatten((shifted * unit_element(a.field, r)).coeffs());
                const std::size_t v = pos * 2 * m + r;
                for (std::size_t k = 0; k < dim; ++k) block[k][v] = prod[k];
            }
            shifted = shifted.shift();
        }
        for (auto& row : block) constraints.push_back(std::move(row));
    }
    SpanBasis out = empty_span(a);
    for (const auto& y : nullspace(constraints, dim, a.p())) out.space.insert(y);
    return out;
}

SpanBasis reciprocal_ideal(const SpanBasis& ideal) {
    const Ambient& a = ideal.ambient;
    Ambient target = a;
    target.lambda = ring_inv(a.lambda);
    std::vector<Word> recs;
    for (const auto& w : ideal.rows()) {
        Word r = reciprocal(w);
        r.resize(a.n, RingElement::zero(*a.field));
        recs.push_back(std::move(r));
    }
    return shift_closure(module_span(target, recs));
}

std::size_t hamming_weight(std::span<const Fp> flat, unsigned m) { return kernels::nonzero_blocks(flat, 2 * m); }

std::optional<std::size_t> min_distance(const SpanBasis& code, std::uint64_t cap) {
    if (code.rank() == 0) return std::nullopt;
    const unsigned m = code.ambient.m();
    std::size_t best = code.ambient.n + 1;
    bool first = true;
    for_each_codeword(
        code,
        [&](const FpVector& v) {
            if (first) {
                first = false;
                return;
            }
            best = std::min(best, hamming_weight(v, m));
        },
        cap);
    return best;
}

bool ideal_check(const SpanBasis& code, const RingElement& lambda) {
    for (const auto& w : code.rows()) {
        if (!contains(code, twisted_shift(w, lambda))) return false;
    }
    return true;
}

}  // namespace chainring
