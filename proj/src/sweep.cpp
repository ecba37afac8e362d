#include "chainring/sweep.hpp"

#include <chrono>
#include <cstdint>
#include <set>

#include "chainring/oracle.hpp"

namespace chainring {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) { return b != 0 && a > UINT64_MAX / b ? UINT64_MAX : a * b; }

std::string yesno(bool b) { return b ? "true" : "false"; }

std::vector<FieldElement> grid(const FieldCtx& f, std::optional<std::size_t> bound) {
    std::vector<FieldElement> all = f.elements();
    if (bound && *bound < all.size()) all.erase(all.begin() + static_cast<std::ptrdiff_t>(*bound), all.end());
    return all;
}

// Calls `visit` with every h of length len whose constant term is a unit.
void for_each_h(const std::vector<FieldElement>& values, std::size_t len,
                const std::function<void(const std::vector<FieldElement>&)>& visit) {
    if (len == 0) return;
    std::vector<std::size_t> idx(len, 0);
    std::vector<FieldElement> h(len, values[0]);
    while (true) {
        for (std::size_t k = 0; k < len; ++k) h[k] = values[idx[k]];
        if (!h[0].is_zero()) visit(h);
        std::size_t k = len;
        while (k-- > 0) {
            if (++idx[k] < values.size()) break;
            idx[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) return;
    }
}

}  // namespace

Json SweepRecord::to_json() const {
    Json j{{"spec", spec}, {"sigma", sigma}, {"check", check}, {"expected", expected}, {"got", got}, {"pass", pass}};
    if (informational) j["informational"] = true;
    return j;
}

Json SweepSummary::to_json() const {
    Json chain = Json::object();
    for (const auto& [k, v] : chain_self_dual) chain[k] = v;
    return Json{{"summary", true},
                {"specs", specs},
                {"cases", cases},
                {"checks", checks},
                {"mismatches", mismatches},
                {"informational_disagreements", notes},
                {"self_dual_type3", self_dual_type3},
                {"self_dual_type2_positive", self_dual_type2_positive},
                {"chain_self_dual", chain},
                {"seconds", seconds}};
}

SweepConfig parse_sweep_config(const Json& j) {
    SweepConfig c;
    try {
        Json fj{{"p", j.at("p")}, {"m", j.value("m", 1)}};
        if (j.contains("modulus")) fj["modulus"] = j.at("modulus");
        c.field = parse_field(fj);
        c.s = j.value("s", 1u);
        if (j.contains("lambda") && j.at("lambda") != "all") {
            std::vector<RingElement> ls;
            for (const auto& x : j.at("lambda")) ls.push_back(parse_ring_element(x, c.field));
            c.lambdas = ls;
        }
        if (j.contains("sigma") && j.at("sigma") != "all") {
            std::vector<RingAut> ss;
            for (const auto& x : j.at("sigma")) ss.push_back(parse_aut(x, c.field));
            c.sigmas = ss;
        }
        if (j.contains("h_bound") && !j.at("h_bound").is_null()) c.h_bound = j.at("h_bound").get<std::size_t>();
        if (j.contains("max_cases")) c.max_cases = j.at("max_cases").get<std::uint64_t>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed sweep config: ") + e.what());
    }
    if (c.s == 0) throw ParseError("s must be positive");
    return c;
}

std::vector<Code> enumerate_codes(const FieldPtr& field, unsigned s, const RingElement& lambda,
                                  std::optional<std::size_t> h_bound) {
    const std::size_t n = pow_size(field->p(), s);
    std::vector<Code> out;
    auto add = [&](CodeKind k, std::size_t i, std::size_t t, std::vector<FieldElement> h, std::size_t w) {
        out.push_back(make_code(CodeSpec{field, s, lambda, k, i, t, w, std::move(h)}));
    };
    if (!lambda.b.is_zero()) {
        for (std::size_t i = 0; i <= 2 * n; ++i) add(CodeKind::ChainIdeal, i, 0, {}, 0);
        return out;
    }
    const auto values = grid(*field, h_bound);
    add(CodeKind::Zero, 0, 0, {}, 0);
    add(CodeKind::Whole, 0, 0, {}, 0);
    for (std::size_t i = 0; i < n; ++i) add(CodeKind::Type2, i, 0, {}, 0);
    for (std::size_t i = 1; i < n; ++i) {
        add(CodeKind::Type3, i, 0, {}, 0);
        for (std::size_t t = 0; t < i; ++t) {
            const std::size_t T = t_value(i, t, false, n);
            for_each_h(values, T - t, [&](const std::vector<FieldElement>& h) { add(CodeKind::Type3, i, t, h, 0); });
        }
        for (std::size_t w = 0; w < i; ++w) add(CodeKind::Type4, i, 0, {}, w);
        for (std::size_t t = 0; t < i; ++t) {
            const std::size_t T = t_value(i, t, false, n);
            for (std::size_t w = t + 1; w < T; ++w) {
                for_each_h(values, w - t, [&](const std::vector<FieldElement>& h) { add(CodeKind::Type4, i, t, h, w); });
            }
        }
    }
    return out;
}

std::vector<RingElement> sweep_lambdas(const SweepConfig& c) { return c.lambdas ? *c.lambdas : ring_units(c.field); }

std::vector<RingAut> sweep_sigmas(const SweepConfig& c) { return c.sigmas ? *c.sigmas : all_automorphisms(c.field); }

std::uint64_t count_cases(const SweepConfig& c) {
    const std::uint64_t sigmas = sweep_sigmas(c).size();
    const std::uint64_t n = pow_size(c.field->p(), c.s);
    const std::uint64_t values = grid(*c.field, c.h_bound).size();
    // Number of h of length len with a nonzero constant term.
    auto hs = [&](std::uint64_t len) {
        std::uint64_t r = values - 1;
        for (std::uint64_t k = 1; k < len; ++k) r = sat_mul(r, values);
        return len == 0 ? 0 : r;
    };
    std::uint64_t field_codes = 2 + n;
    for (std::uint64_t i = 1; i < n; ++i) {
        field_codes = sat_add(field_codes, 1 + i);
        for (std::uint64_t t = 0; t < i; ++t) {
            const std::uint64_t T = t_value(i, t, false, n);
            field_codes = sat_add(field_codes, hs(T - t));
            for (std::uint64_t w = t + 1; w < T; ++w) field_codes = sat_add(field_codes, hs(w - t));
        }
    }
    std::uint64_t total = 0;
    for (const auto& l : sweep_lambdas(c)) {
        if (!l.is_unit()) continue;
        total = sat_add(total, sat_mul(l.b.is_zero() ? field_codes : 2 * n + 1, sigmas));
    }
    return total;
}

std::string spec_id(const Code& code) { return "lambda=" + code.spec.lambda.to_string() + " " + code.spec.to_string(); }

SweepSummary run_sweep(const SweepConfig& c, const std::function<void(const SweepRecord&)>& sink) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = count_cases(c);
    if (total > c.max_cases) {
        throw SweepTooLarge("sweep has " + std::to_string(total) + " cases, above the cap of " +
                            std::to_string(c.max_cases));
    }
    SweepSummary sum;
    const auto sigmas = sweep_sigmas(c);
    auto emit = [&](SweepRecord r) {
        ++sum.checks;
        if (r.informational) {
            if (!r.pass) ++sum.notes;
        } else if (!r.pass) {
            ++sum.mismatches;
            sum.failures.push_back(r);
        }
        if (sink) sink(r);
    };
    auto check = [&](const std::string& spec, const std::string& sigma, const std::string& name,
                     const std::string& expected, const std::string& got) {
        emit(SweepRecord{spec, sigma, name, expected, got, expected == got, false});
    };

    for (const auto& lambda : sweep_lambdas(c)) {
        if (!lambda.is_unit()) continue;
        const auto codes = enumerate_codes(c.field, c.s, lambda, c.h_bound);
        const Ambient amb = make_ambient(c.field, c.s, lambda);
        std::set<std::vector<FpVector>> distinct;
        for (const auto& code : codes) {
            ++sum.specs;
            const std::string id = spec_id(code);
            const SpanBasis span = code_span(code);
            distinct.insert(span.space.rows());

            check(id, "-", "size_law", std::to_string(code_size_exponent(code)), std::to_string(span.rank()));
            check(id, "-", "ideal", "true", yesno(ideal_check(span, lambda)));
            const TorRes tr = torsion_residue(span);
            check(id, "-", "tor_res_law", std::to_string(span.rank()), std::to_string(tr.tor.rank() + tr.res.rank()));
            const auto cls = classify_span(span);
            check(id, "-", "classify", code.spec.to_string(), cls ? cls->spec.to_string() : "none");
            const SpanBasis ann = brute_annihilator(span);
            const SpanBasis euclid = brute_dual(span, RingAut::identity(*c.field));
            check(id, "-", "dual_is_reciprocal_annihilator", "true", yesno(reciprocal_ideal(ann) == euclid));
            check(id, "-", "double_annihilator", "true", yesno(brute_annihilator(ann) == span));

            for (const auto& sigma : sigmas) {
                ++sum.cases;
                const std::string sid = sigma.to_string();
                const SpanBasis dual = brute_dual(span, sigma);
                const DualResult dr = sigma_dual(code, sigma);
                const Ambient damb = make_ambient(c.field, c.s, dr.dual_lambda);
                check(id, sid, "dual_span", "equal", span_basis(damb, dr.witness_generators) == dual ? "equal" : "differ");
                check(id, sid, "dual_spec_span", "equal", code_span(dr.dual_spec) == dual ? "equal" : "differ");
                check(id, sid, "dual_size_law", std::to_string(amb.dim()), std::to_string(span.rank() + dual.rank()));
                check(id, sid, "dual_constacyclic", "true", yesno(ideal_check(dual, dr.dual_lambda)));

                const bool so_oracle = brute_self_orthogonal(span, sigma);
                check(id, sid, "self_orthogonal_paths", yesno(so_oracle), yesno(dual.space.contains(span.space)));
                const Verdict so = is_sigma_self_orthogonal(code, sigma);
                emit(SweepRecord{id, sid, "self_orthogonal", yesno(so_oracle), yesno(so.holds) + " (" + so.clause + ")",
                                 so.holds == so_oracle, false});

                const bool sd_oracle = dual == span;
                const Verdict sd = is_sigma_self_dual(code, sigma);
                emit(SweepRecord{id, sid, "self_dual", yesno(sd_oracle), yesno(sd.holds) + " (" + sd.clause + ")",
                                 sd.holds == sd_oracle, false});
                if (sd_oracle) {
                    if (code.spec.kind == CodeKind::Type3) sum.self_dual_type3.push_back(id + " sigma=" + sid);
                    if (code.spec.kind == CodeKind::Type2 && code.spec.i > 0) {
                        sum.self_dual_type2_positive.push_back(id + " sigma=" + sid);
                    }
                }
                if (code.spec.kind == CodeKind::ChainIdeal) {
                    auto& v = sum.chain_self_dual[lambda.to_string() + "|" + sid];
                    if (sd_oracle) v.push_back(code.spec.i);
                }

                const bool with_h = (code.spec.kind == CodeKind::Type3 || code.spec.kind == CodeKind::Type4) &&
                                    !code.spec.h_zero();
                if (with_h && root_gate(code, sigma)) {
                    const bool base = hprime_divides(code, sigma, HPrimeForm::Rescaled);
                    for (const auto form : {HPrimeForm::UnscaledPower, HPrimeForm::GammaPower}) {
                        const bool v = hprime_divides(code, sigma, form);
                        emit(SweepRecord{id, sid, "hprime_form." + form_name(form), yesno(base), yesno(v), v == base, true});
                    }
                }
            }
        }
        check("lambda=" + lambda.to_string(), "-", "distinct_spans", std::to_string(codes.size()),
              std::to_string(distinct.size()));
    }
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

}  // namespace chainring
