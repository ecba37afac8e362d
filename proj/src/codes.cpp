#include "chainring/codes.hpp"

#include <algorithm>
#include <sstream>

namespace chainring {

namespace {

constexpr std::size_t kMaxLength = 4096;

bool all_zero(const std::vector<FieldElement>& h) {
    return std::all_of(h.begin(), h.end(), [](const FieldElement& c) { return c.is_zero(); });
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
}

// Flattened index with all a-parts ahead of all b-parts.
FpVector to_a_first(std::span<const Fp> v, std::size_t n, unsigned m) {
    FpVector out(v.size());
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (unsigned k = 0; k < m; ++k) {
            out[pos * m + k] = v[pos * 2 * m + k];
            out[n * m + pos * m + k] = v[pos * 2 * m + m + k];
        }
    }
    return out;
}

FpVector from_a_first(std::span<const Fp> v, std::size_t n, unsigned m) {
    FpVector out(v.size());
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (unsigned k = 0; k < m; ++k) {
            out[pos * 2 * m + k] = v[pos * m + k];
            out[pos * 2 * m + m + k] = v[n * m + pos * m + k];
        }
    }
    return out;
}

RowSpace a_first_space(const SpanBasis& b) {
    RowSpace out(b.ambient.p(), b.ambient.dim());
    for (const auto& r : b.space.rows()) out.insert(to_a_first(r, b.ambient.n, b.ambient.m()));
    return out;
}

std::vector<FieldElement> field_basis(const FieldCtx& f) {
    std::vector<FieldElement> out;
    for (unsigned k = 0; k < f.m(); ++k) {
        std::uint64_t idx = 1;
        for (unsigned j = 0; j < k; ++j) idx *= f.p();
        out.push_back(f.from_index(idx));
    }
    return out;
}

}  // namespace

QuotientPoly nil_generator(const FieldElement& root, std::size_t i, std::size_t t, const std::vector<FieldElement>& h,
                           const RingElement& lambda, std::size_t n) {
    const auto& f = root.ctx();
    NilExpansion e{zero_word(f, n), root};
    if (i < n) e.coeffs[i].a = f.one();
    for (std::size_t j = 0; j < h.size() && t + j < n; ++j) e.coeffs[t + j].b = h[j];
    return nil_collect(e, lambda, n);
}

QuotientPoly u_nil_power(const FieldElement& root, std::size_t w, const RingElement& lambda, std::size_t n) {
    const auto& f = root.ctx();
    NilExpansion e{zero_word(f, n), root};
    if (w < n) e.coeffs[w].b = f.one();
    return nil_collect(e, lambda, n);
}

std::string kind_name(CodeKind k) {
    switch (k) {
        case CodeKind::ChainIdeal: return "chain";
        case CodeKind::Zero: return "type1_zero";
        case CodeKind::Whole: return "type1_whole";
        case CodeKind::Type2: return "type2";
        case CodeKind::Type3: return "type3";
        case CodeKind::Type4: return "type4";
    }
    return "?";
}

bool CodeSpec::h_zero() const { return all_zero(h); }

std::string CodeSpec::to_string() const {
    std::ostringstream os;
    os << kind_name(kind);
    switch (kind) {
        case CodeKind::Zero:
        case CodeKind::Whole: break;
        case CodeKind::ChainIdeal:
        case CodeKind::Type2: os << " i=" << i; break;
        case CodeKind::Type3:
        case CodeKind::Type4: {
            os << " i=" << i << " t=" << t << " h=";
            if (h_zero()) {
                os << '0';
            } else {
                os << '[';
                for (std::size_t j = 0; j < h.size(); ++j) os << (j ? "," : "") << h[j].to_string();
                os << ']';
            }
            if (kind == CodeKind::Type4) os << " omega=" << omega;
            break;
        }
    }
    return os.str();
}

SpecError::SpecError(std::vector<std::string> problems)
    : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}

std::size_t pow_size(std::uint32_t p, unsigned s) {
    std::size_t n = 1;
    for (unsigned k = 0; k < s; ++k) {
        n *= p;
        if (n > kMaxLength) return kMaxLength + 1;
    }
    return n;
}

std::size_t t_value(std::size_t i, std::size_t t, bool h_zero, std::size_t n) {
    return h_zero ? i : std::min(i, n - i + t);
}

std::vector<std::string> validate_spec(const CodeSpec& spec) {
    std::vector<std::string> errs;
    if (!spec.field) return {"field missing"};
    if (spec.s == 0) return {"s must be positive"};
    const std::size_t n = pow_size(spec.field->p(), spec.s);
    if (n > kMaxLength) return {"p^s exceeds " + std::to_string(kMaxLength)};
    if (!spec.lambda.ctx().same_field(*spec.field)) return {"lambda belongs to a different field"};
    if (!spec.lambda.is_unit()) return {"lambda is not a unit"};

    const bool chain_lambda = !spec.lambda.b.is_zero();
    if (spec.kind == CodeKind::ChainIdeal) {
        if (!chain_lambda) errs.push_back("chain ideal requires lambda = alpha + u beta with beta != 0");
        if (spec.i > 2 * n) errs.push_back("i out of range 0..2p^s");
        return errs;
    }
    if (chain_lambda) errs.push_back("lambda must lie in F_{p^m} for " + kind_name(spec.kind));
    for (const auto& c : spec.h) {
        if (!c.ctx().same_field(*spec.field)) {
            errs.push_back("h coefficient belongs to a different field");
            return errs;
        }
    }
    switch (spec.kind) {
        case CodeKind::Zero:
        case CodeKind::Whole: break;
        case CodeKind::Type2:
            if (spec.i >= n) errs.push_back("i out of range 0..p^s-1");
            break;
        case CodeKind::Type3:
        case CodeKind::Type4: {
            if (spec.i == 0 || spec.i >= n) {
                errs.push_back("i out of range 1..p^s-1");
                return errs;
            }
            const bool hz = spec.h_zero();
            if (!hz) {
                if (spec.h.front().is_zero()) errs.push_back("h_0 = 0");
                if (spec.t >= spec.i) errs.push_back("t out of range 0..i-1");
            }
            if (spec.kind == CodeKind::Type4 && errs.empty()) {
                const std::size_t T = t_value(spec.i, spec.t, hz, n);
                if (spec.omega >= T) errs.push_back("omega >= T");
                if (!hz) {
                    std::size_t d = spec.h.size();
                    while (d > 0 && spec.h[d - 1].is_zero()) --d;
                    if (spec.omega <= spec.t || d - 1 > spec.omega - spec.t - 1) {
                        errs.push_back("deg h > omega-t-1");
                    }
                }
            }
            break;
        }
        case CodeKind::ChainIdeal: break;
    }
    return errs;
}

Code make_code(const CodeSpec& spec) {
    auto errs = validate_spec(spec);
    if (!errs.empty()) throw SpecError(std::move(errs));
    const std::size_t n = pow_size(spec.field->p(), spec.s);
    CodeSpec c = spec;
    std::size_t T = 0;
    if (c.kind != CodeKind::Type3 && c.kind != CodeKind::Type4) {
        c.h.clear();
        c.t = 0;
    }
    if (c.kind != CodeKind::Type4) c.omega = 0;
    if (c.kind == CodeKind::Zero || c.kind == CodeKind::Whole) c.i = 0;
    if (c.kind == CodeKind::Type3 || c.kind == CodeKind::Type4) {
        const bool hz = c.h_zero();
        if (hz) {
            c.h.clear();
            c.t = 0;
        }
        T = t_value(c.i, c.t, hz, n);
        if (!hz) {
            c.h.resize(std::min(c.h.size(), T - c.t), c.field->zero());
            while (!c.h.empty() && c.h.back().is_zero()) c.h.pop_back();
        }
    }
    return Code{std::move(c), n, inverse_root(spec.lambda.a, spec.s), T};
}

std::size_t code_size_exponent(const Code& code) {
    const auto& c = code.spec;
    const std::size_t m = c.field->m();
    const std::size_t n = code.n;
    switch (c.kind) {
        case CodeKind::ChainIdeal: return m * (2 * n - c.i);
        case CodeKind::Zero: return 0;
        case CodeKind::Whole: return 2 * m * n;
        case CodeKind::Type2: return m * (n - c.i);
        case CodeKind::Type3:
            if (c.h_zero() || 2 * c.i <= n + c.t) return 2 * m * (n - c.i);
            return m * (n - c.t);
        case CodeKind::Type4: return m * (2 * n - c.i - c.omega);
    }
    return 0;
}

std::vector<QuotientPoly> generators(const Code& code) {
    const auto& c = code.spec;
    const auto& f = *c.field;
    const std::size_t n = code.n;
    switch (c.kind) {
        case CodeKind::ChainIdeal: return {nilpotent_power(code.root, c.i, c.lambda, n)};
        case CodeKind::Zero: return {};
        case CodeKind::Whole: return {QuotientPoly::constant(RingElement::one(f), c.lambda, n)};
        case CodeKind::Type2: return {u_nil_power(code.root, c.i, c.lambda, n)};
        case CodeKind::Type3: return {nil_generator(code.root, c.i, c.t, c.h, c.lambda, n)};
        case CodeKind::Type4:
            return {nil_generator(code.root, c.i, c.t, c.h, c.lambda, n), u_nil_power(code.root, c.omega, c.lambda, n)};
    }
    return {};
}

Code normalize_gamma_ideal(const FieldPtr& field, unsigned s, const FieldElement& gamma, std::size_t i, std::size_t t,
                           std::vector<FieldElement> h, std::size_t omega) {
    const std::size_t n = pow_size(field->p(), s);
    auto build = [&](CodeKind kind, std::size_t ii, std::size_t tt, std::vector<FieldElement> hh, std::size_t w) {
        CodeSpec spec{field, s, RingElement::embed(gamma), kind, ii, tt, w, std::move(hh)};
        return make_code(spec);
    };
    omega = std::min(omega, n);
    // Strip the valuation of h into t.
    std::size_t v = 0;
    while (v < h.size() && h[v].is_zero()) ++v;
    bool hz = v == h.size();
    if (!hz) {
        h.erase(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(v));
        t += v;
        if (t >= n) hz = true;
    }
    if (i >= n) {
        std::size_t w = omega;
        if (!hz) w = std::min(w, t);
        if (w >= n) return build(CodeKind::Zero, 0, 0, {}, 0);
        return build(CodeKind::Type2, w, 0, {}, 0);
    }
    if (i == 0) return build(CodeKind::Whole, 0, 0, {}, 0);
    if (!hz && t >= i) hz = true;
    if (hz) {
        h.clear();
        t = 0;
    }
    const std::size_t T = t_value(i, t, hz, n);
    if (omega >= T) {
        if (!hz) h.resize(std::min(h.size(), T - t), field->zero());
        return build(CodeKind::Type3, i, t, std::move(h), 0);
    }
    if (!hz && omega <= t) {
        hz = true;
        h.clear();
        t = 0;
    }
    if (!hz) h.resize(std::min(h.size(), omega - t), field->zero());
    return build(CodeKind::Type4, i, t, std::move(h), omega);
}

Ambient make_ambient(const FieldPtr& field, unsigned s, const RingElement& lambda) {
    return Ambient{field, s, pow_size(field->p(), s), lambda};
}

Ambient ambient_of(const Code& code) { return Ambient{code.spec.field, code.spec.s, code.n, code.spec.lambda}; }

FpVector flatten(std::span<const RingElement> w) {
    if (w.empty()) return {};
    const unsigned m = w[0].ctx().m();
    FpVector out(w.size() * 2 * m);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (unsigned k = 0; k < m; ++k) {
            out[pos * 2 * m + k] = w[pos].a.coeff(k);
            out[pos * 2 * m + m + k] = w[pos].b.coeff(k);
        }
    }
    return out;
}

Word unflatten(std::span<const Fp> v, const FieldPtr& field) {
    const unsigned m = field->m();
    if (v.size() % (2 * m) != 0) throw std::invalid_argument("flattened length is not a multiple of 2m");
    Word out;
    out.reserve(v.size() / (2 * m));
    for (std::size_t pos = 0; pos < v.size() / (2 * m); ++pos) {
        out.push_back({field_make(field, v.subspan(pos * 2 * m, m)), field_make(field, v.subspan(pos * 2 * m + m, m))});
    }
    return out;
}

std::vector<Word> SpanBasis::rows() const {
    std::vector<Word> out;
    for (const auto& r : space.rows()) out.push_back(unflatten(r, ambient.field));
    return out;
}

SpanBasis empty_span(const Ambient& a) { return SpanBasis{a, RowSpace(a.p(), a.dim())}; }

SpanBasis span_basis(const Ambient& a, const std::vector<QuotientPoly>& gens) {
    SpanBasis out = empty_span(a);
    const auto basis = field_basis(*a.field);
    const RingElement u = RingElement::u(*a.field);
    for (const auto& g : gens) {
        if (g.n() != a.n || !(g.lambda() == a.lambda)) throw ContextMismatch("generator lives in a different ring");
        QuotientPoly cur = g;
        for (std::size_t k = 0; k < a.n; ++k) {
            for (const auto& b : basis) {
                const RingElement rb = RingElement::embed(b);
                out.space.insert(flatten((cur * rb).coeffs()));
                out.space.insert(flatten((cur * (u * rb)).coeffs()));
            }
            if (out.space.rank() == a.dim()) return out;
            cur = cur.shift();
        }
    }
    return out;
}

SpanBasis code_span(const Code& code) { return span_basis(ambient_of(code), generators(code)); }

SpanBasis module_span(const Ambient& a, const std::vector<Word>& rows) {
    SpanBasis out = empty_span(a);
    const auto basis = field_basis(*a.field);
    const RingElement u = RingElement::u(*a.field);
    for (const auto& row : rows) {
        if (row.size() != a.n) throw std::invalid_argument("row length differs from the code length");
        for (const auto& b : basis) {
            for (const RingElement& c : {RingElement::embed(b), u * RingElement::embed(b)}) {
                Word w;
                w.reserve(row.size());
                for (const auto& x : row) w.push_back(x * c);
                out.space.insert(flatten(w));
            }
        }
    }
    return out;
}

Word twisted_shift(std::span<const RingElement> w, const RingElement& lambda) {
    Word out(w.begin(), w.end());
    if (w.empty()) return out;
    out[0] = lambda * w.back();
    for (std::size_t k = 1; k < w.size(); ++k) out[k] = w[k - 1];
    return out;
}

SpanBasis shift_closure(const SpanBasis& b) {
    SpanBasis out = b;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& w : out.rows()) grew |= out.space.insert(flatten(twisted_shift(w, b.ambient.lambda)));
    }
    return out;
}

bool contains(const SpanBasis& b, std::span<const RingElement> w) {
    if (w.size() != b.ambient.n) throw std::invalid_argument("word length differs from the code length");
    return b.space.contains(flatten(w));
}

TorRes torsion_residue(const SpanBasis& b) {
    const std::size_t n = b.ambient.n;
    const unsigned m = b.ambient.m();
    const std::size_t half = n * m;
    TorRes out{RowSpace(b.ambient.p(), half), RowSpace(b.ambient.p(), half)};
    for (const auto& r : b.space.rows()) {
        const FpVector af = to_a_first(r, n, m);
        out.res.insert(std::span<const Fp>(af).first(half));
    }
    // Reduced rows whose pivot sits in the b-block have vanishing a-part.
    const RowSpace sorted = a_first_space(b);
    for (std::size_t k = 0; k < sorted.rank(); ++k) {
        if (sorted.pivots()[k] >= half) out.tor.insert(std::span<const Fp>(sorted.rows()[k]).subspan(half));
    }
    return out;
}

void for_each_codeword(const SpanBasis& b, const std::function<void(const FpVector&)>& visit, std::uint64_t cap) {
    const std::size_t r = b.rank();
    const Fp p = b.ambient.p();
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < r; ++k) {
        if (count > cap / p) throw CapExceeded("code has more than the enumeration cap of " + std::to_string(cap) + " codewords");
        count *= p;
    }
    if (count > cap) throw CapExceeded("code has more than the enumeration cap of " + std::to_string(cap) + " codewords");
    FpVector cur(b.ambient.dim(), 0);
    std::vector<Fp> digits(r, 0);
    const auto& rows = b.space.rows();
    visit(cur);
    for (std::uint64_t step = 1; step < count; ++step) {
        // Adding a row p times returns to the previous word, so a wrapped digit
        // needs no correction.
        std::size_t k = r;
        while (k-- > 0) {
            kernels::axpy_mod(cur, rows[k], 1, p);
            if (++digits[k] < p) break;
            digits[k] = 0;
        }
        visit(cur);
    }
}

std::vector<Word> enumerate_codewords(const SpanBasis& b, std::uint64_t cap) {
    std::vector<Word> out;
    for_each_codeword(b, [&](const FpVector& v) { out.push_back(unflatten(v, b.ambient.field)); }, cap);
    return out;
}

std::optional<Code> classify_span(const SpanBasis& b) {
    const auto& a = b.ambient;
    const std::size_t n = a.n;
    const unsigned m = a.m();
    auto matches = [&](Code c) -> std::optional<Code> {
        if (code_span(c) == b) return c;
        return std::nullopt;
    };
    if (!a.lambda.b.is_zero()) {
        if (b.rank() % m != 0) return std::nullopt;
        const std::size_t i = 2 * n - b.rank() / m;
        return matches(make_code(CodeSpec{a.field, a.s, a.lambda, CodeKind::ChainIdeal, i, 0, 0, {}}));
    }
    const TorRes tr = torsion_residue(b);
    if (tr.res.rank() % m != 0 || tr.tor.rank() % m != 0) return std::nullopt;
    const std::size_t i = n - tr.res.rank() / m;
    const std::size_t w = n - tr.tor.rank() / m;
    const FieldElement gamma = a.lambda.a;
    if (i == n) return matches(normalize_gamma_ideal(a.field, a.s, gamma, n, 0, {}, w));

    const FieldElement root = inverse_root(gamma, a.s);
    const QuotientPoly target = nilpotent_power(root, i, a.lambda, n);
    const RowSpace sorted = a_first_space(b);
    const FpVector v = to_a_first(flatten(target.coeffs()), n, m);
    const FpVector r = sorted.reduce(v);
    if (std::any_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n * m), [](Fp x) { return x != 0; })) {
        return std::nullopt;
    }
    FpVector member(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) member[k] = (v[k] + a.p() - r[k]) % a.p();
    const Word word = unflatten(from_a_first(member, n, m), a.field);
    Word bpart;
    for (const auto& x : word) bpart.push_back(RingElement::embed(x.b));
    const NilExpansion g = nil_expand(bpart, root);
    std::vector<FieldElement> gy;
    for (const auto& c : g.coeffs) gy.push_back(c.a);
    return matches(normalize_gamma_ideal(a.field, a.s, gamma, i, 0, std::move(gy), w));
}

}  // namespace chainring
