#include "chainring/duality.hpp"

namespace chainring {

namespace {

using Series = std::vector<FieldElement>;

// Truncated power series in a nilpotent variable z with z^n = 0.
Series series_mul(const Series& a, const Series& b, std::size_t n) {
    const auto& f = a[0].ctx();
    Series out(n, f.zero());
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// (1 + z)^k for any integer k.
Series one_plus_z_pow(const FieldCtx& f, long k, std::size_t n) {
    Series base(n, f.zero());
    base[0] = f.one();
    if (k >= 0) {
        if (n > 1) base[1] = f.one();
    } else {
        // (1 + z)^{-1} = sum (-z)^j.
        for (std::size_t j = 0; j < n; ++j) base[j] = (j % 2 == 0) ? f.one() : -f.one();
        k = -k;
    }
    Series out(n, f.zero());
    out[0] = f.one();
    for (long e = 0; e < k; ++e) out = series_mul(out, base, n);
    return out;
}

bool parity_negative(long e) { return (e % 2 + 2) % 2 == 1; }

// sum_j c_j z^j (1 + z)^{i - j - t}.
Series expand_terms(const Code& code, const std::vector<FieldElement>& coeffs) {
    const auto& c = code.spec;
    const auto& f = *c.field;
    const std::size_t n = code.n;
    Series out(n, f.zero());
    for (std::size_t j = 0; j < coeffs.size() && j < n; ++j) {
        if (coeffs[j].is_zero()) continue;
        const long e = static_cast<long>(c.i) - static_cast<long>(j) - static_cast<long>(c.t);
        const Series pw = one_plus_z_pow(f, e, n);
        for (std::size_t k = 0; j + k < n; ++k) out[j + k] += coeffs[j] * pw[k];
    }
    return out;
}

// The rescaled form in the dual variable Z = theta(gamma0^{-1}) x - 1, where
// X = Z + 1.
Series h_tilde(const Code& code, const RingAut& sigma) {
    const auto& c = code.spec;
    const RingAut inv = aut_invert(sigma);
    std::vector<FieldElement> coeffs;
    for (std::size_t j = 0; j < c.h.size(); ++j) {
        const long e = static_cast<long>(j + c.t) - static_cast<long>(c.i);
        FieldElement v = -(inv.epsilon * frobenius(c.h[j], inv.theta));
        if (parity_negative(e)) v = -v;
        coeffs.push_back(v);
    }
    return expand_terms(code, coeffs);
}

Series y_plus_one_pow_scaled(const Code& code, std::size_t j) {
    // x^{i-j-t} = gamma0^{-(i-j-t)} (y + 1)^{i-j-t}.
    const long e = static_cast<long>(code.spec.i) - static_cast<long>(j) - static_cast<long>(code.spec.t);
    Series pw = one_plus_z_pow(*code.spec.field, e, code.n);
    const FieldElement scale = pow(code.root, -e);
    for (auto& x : pw) x *= scale;
    return pw;
}

Series unscaled_terms(const Code& code, const std::vector<FieldElement>& coeffs) {
    const std::size_t n = code.n;
    Series out(n, code.spec.field->zero());
    for (std::size_t j = 0; j < coeffs.size() && j < n; ++j) {
        if (coeffs[j].is_zero()) continue;
        const Series pw = y_plus_one_pow_scaled(code, j);
        for (std::size_t k = 0; j + k < n; ++k) out[j + k] += coeffs[j] * pw[k];
    }
    return out;
}

NilExpansion to_expansion(const Series& s, const FieldElement& base) {
    NilExpansion e{{}, base};
    for (const auto& c : s) e.coeffs.push_back(RingElement::embed(c));
    return e;
}

bool type3_high(const Code& code) {
    const auto& c = code.spec;
    return c.kind == CodeKind::Type3 && !c.h_zero() && 2 * c.i > code.n + c.t;
}

}  // namespace

std::string form_name(HPrimeForm f) {
    switch (f) {
        case HPrimeForm::Rescaled: return "rescaled";
        case HPrimeForm::UnscaledPower: return "unscaled_power";
        case HPrimeForm::GammaPower: return "gamma_power";
    }
    return "?";
}

bool root_gate(const Code& code, const RingAut& sigma) {
    if (code.spec.kind == CodeKind::ChainIdeal) return false;
    const RingAut inv = aut_invert(sigma);
    return code.root == frobenius(inverse(code.root), inv.theta);
}

DualResult sigma_dual(const Code& code, const RingAut& sigma) {
    const auto& c = code.spec;
    const auto& field = c.field;
    const std::size_t n = code.n;
    const RingAut inv = aut_invert(sigma);
    const RingElement lam = dual_constant(c.lambda, sigma);
    const FieldElement droot = frobenius(inverse(code.root), inv.theta);
    const RingElement one = RingElement::one(*field);

    auto z_gen = [&](std::size_t i, std::size_t t, const std::vector<FieldElement>& h) {
        return nil_generator(droot, i, t, h, lam, n);
    };
    auto uz = [&](std::size_t w) { return u_nil_power(droot, w, lam, n); };
    auto dual = [&](std::size_t i, std::size_t t, std::vector<FieldElement> h, std::size_t w) {
        return normalize_gamma_ideal(field, c.s, lam.a, i, t, std::move(h), w);
    };

    switch (c.kind) {
        case CodeKind::ChainIdeal: {
            CodeSpec ds{field, c.s, lam, CodeKind::ChainIdeal, 2 * n - c.i, 0, 0, {}};
            return {lam, make_code(ds), {nilpotent_power(droot, 2 * n - c.i, lam, n)}, "chain"};
        }
        case CodeKind::Zero:
            return {lam, dual(0, 0, {}, n), {QuotientPoly::constant(one, lam, n)}, "zero"};
        case CodeKind::Whole: return {lam, dual(n, 0, {}, n), {}, "whole"};
        case CodeKind::Type2:
            return {lam, dual(n - c.i, 0, {}, 0), {z_gen(n - c.i, 0, {}), QuotientPoly::constant(RingElement::u(*field), lam, n)},
                    "type2"};
        case CodeKind::Type3: {
            if (c.h_zero()) return {lam, dual(n - c.i, 0, {}, n), {z_gen(n - c.i, 0, {})}, "type3.h0"};
            const Series ht = h_tilde(code, sigma);
            if (!type3_high(code)) {
                const std::size_t t2 = n + c.t - 2 * c.i;
                return {lam, dual(n - c.i, t2, ht, n), {z_gen(n - c.i, t2, ht)}, "type3.low"};
            }
            return {lam, dual(c.i - c.t, 0, ht, n - c.i), {z_gen(c.i - c.t, 0, ht), uz(n - c.i)}, "type3.high"};
        }
        case CodeKind::Type4: {
            if (c.h_zero()) {
                return {lam, dual(n - c.omega, 0, {}, n - c.i), {z_gen(n - c.omega, 0, {}), uz(n - c.i)}, "type4.h0"};
            }
            const Series ht = h_tilde(code, sigma);
            const std::size_t t2 = n - c.omega - c.i + c.t;
            return {lam, dual(n - c.omega, t2, ht, n - c.i), {z_gen(n - c.omega, t2, ht), uz(n - c.i)}, "type4.h"};
        }
    }
    throw std::logic_error("unhandled code kind");
}

NilExpansion h_prime(const Code& code, const RingAut& sigma, HPrimeForm form) {
    const auto& c = code.spec;
    if ((c.kind != CodeKind::Type3 && c.kind != CodeKind::Type4) || c.h_zero()) {
        throw std::invalid_argument("h' is defined for Type3/Type4 codes with h != 0");
    }
    if (!root_gate(code, sigma)) throw RootGateViolated("root condition gamma0 = theta(gamma0^{-1}) violated");
    const RingAut inv = aut_invert(sigma);
    Series out;
    switch (form) {
        case HPrimeForm::Rescaled: out = h_tilde(code, sigma); break;
        case HPrimeForm::UnscaledPower: {
            std::vector<FieldElement> coeffs;
            for (std::size_t j = 0; j < c.h.size(); ++j) {
                const long e = static_cast<long>(j + c.t) - static_cast<long>(c.i);
                FieldElement v = -(inv.epsilon * frobenius(c.h[j], inv.theta));
                if (parity_negative(e)) v = -v;
                coeffs.push_back(v);
            }
            out = unscaled_terms(code, coeffs);
            break;
        }
        case HPrimeForm::GammaPower: {
            const FieldElement neg_gamma = -c.lambda.a;
            std::vector<FieldElement> coeffs;
            for (std::size_t j = 0; j < c.h.size(); ++j) {
                const long e = static_cast<long>(c.i) - static_cast<long>(c.t) + static_cast<long>(j);
                coeffs.push_back(-(c.h[j] * pow(neg_gamma, e)));
            }
            out = unscaled_terms(code, coeffs);
            break;
        }
    }
    if (type3_high(code)) out.resize(code.n - c.i, c.field->zero());
    return to_expansion(out, code.root);
}

bool nil_divides(std::size_t k, const NilExpansion& f) {
    for (std::size_t j = 0; j < k && j < f.coeffs.size(); ++j) {
        if (!f.coeffs[j].is_zero()) return false;
    }
    return true;
}

bool hprime_divides(const Code& code, const RingAut& sigma, HPrimeForm form) {
    const auto& c = code.spec;
    const NilExpansion hp = h_prime(code, sigma, form);
    const std::size_t k = c.i + c.t >= code.n ? 0 : code.n - c.i - c.t;
    NilExpansion diff{zero_word(*c.field, std::max(k, hp.size())), code.root};
    for (std::size_t j = 0; j < diff.size(); ++j) {
        RingElement v = RingElement::zero(*c.field);
        if (j < c.h.size()) v.a = c.h[j];
        if (j < hp.size()) v = v - hp.coeffs[j];
        diff.coeffs[j] = v;
    }
    return nil_divides(k, diff);
}

Verdict is_sigma_self_orthogonal(const Code& code, const RingAut& sigma) {
    const auto& c = code.spec;
    const std::size_t n = code.n;
    const std::size_t i = c.i;
    const std::size_t t = c.t;
    switch (c.kind) {
        case CodeKind::ChainIdeal:
            return i >= n ? Verdict{true, "chain.i_ge_n"} : Verdict{false, "chain.i_lt_n"};
        case CodeKind::Zero: return {true, "zero"};
        case CodeKind::Whole: return {false, "whole"};
        case CodeKind::Type2: return {true, "type2.in_u"};
        case CodeKind::Type3:
        case CodeKind::Type4: break;
    }
    if (!root_gate(code, sigma)) return {false, "root_gate"};
    if (c.kind == CodeKind::Type3) {
        if (c.h_zero()) return 2 * i >= n ? Verdict{true, "type3.h0.2i_ge_n"} : Verdict{false, "type3.h0.2i_lt_n"};
        const std::string tag = type3_high(code) ? "type3.high" : "type3.low";
        if (n <= i + t) return {true, tag + ".i_plus_t"};
        if (!type3_high(code) && n > 2 * i) return {false, tag + ".2i_lt_n"};
        return hprime_divides(code, sigma, HPrimeForm::Rescaled) ? Verdict{true, tag + ".divides"}
                                                                 : Verdict{false, tag + ".no_divide"};
    }
    if (c.h_zero()) {
        return c.omega + i >= n ? Verdict{true, "type4.h0.omega_plus_i"} : Verdict{false, "type4.h0.omega_plus_i_lt_n"};
    }
    if (n <= i + t) return {true, "type4.i_plus_t"};
    if (n > i + c.omega) return {false, "type4.omega_plus_i_lt_n"};
    return hprime_divides(code, sigma, HPrimeForm::Rescaled) ? Verdict{true, "type4.divides"}
                                                             : Verdict{false, "type4.no_divide"};
}

Verdict is_sigma_self_dual(const Code& code, const RingAut& sigma) {
    const auto& c = code.spec;
    const std::size_t n = code.n;
    switch (c.kind) {
        case CodeKind::ChainIdeal: return c.i == n ? Verdict{true, "chain.i_eq_n"} : Verdict{false, "chain.i_ne_n"};
        case CodeKind::Zero:
        case CodeKind::Whole: return {false, "type1"};
        case CodeKind::Type2: return c.i == 0 ? Verdict{true, "type2.i_eq_0"} : Verdict{false, "type2.i_ne_0"};
        case CodeKind::Type3: {
            if (c.h_zero()) return {false, "type3.h0.size"};
            if (!type3_high(code)) return {false, "type3.low.size"};
            if (c.t != 0) return {false, "type3.high.t_ne_0"};
            // With t = 0 the sizes agree, so self-duality is self-orthogonality.
            const Verdict so = is_sigma_self_orthogonal(code, sigma);
            return {so.holds, "type3.high.t0." + so.clause};
        }
        case CodeKind::Type4: break;
    }
    if (c.omega + c.i != n) return {false, "type4.size"};
    if (!root_gate(code, sigma)) return {false, "root_gate"};
    if (c.h_zero()) return {true, "type4.h0.omega_plus_i_eq_n"};
    return hprime_divides(code, sigma, HPrimeForm::Rescaled) ? Verdict{true, "type4.divides"}
                                                             : Verdict{false, "type4.no_divide"};
}

}  // namespace chainring
