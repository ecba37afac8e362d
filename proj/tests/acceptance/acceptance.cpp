// Acceptance criteria. One PASS/FAIL line per criterion; exit status 1 when
// any selected criterion fails.
//
//   acceptance            run all
//   acceptance --only N   run criterion N

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chainring/duality.hpp"
#include "chainring/fixtures.hpp"
#include "chainring/oracle.hpp"
#include "chainring/sweep.hpp"

using namespace chainring;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> evidence;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
};

std::string tf(bool b) { return b ? "true" : "false"; }

void example1(Outcome& o) {
    const ExampleReport r = analyze_example(1);
    const FieldPtr f = FieldCtx::builtin(3, 2);
    const Code spec = make_code({f, 2, RingElement::embed(f->generator()), CodeKind::Type4, 7, 0, 5, {}});
    const RingAut frob = make_aut(1, f->one());
    const RingAut id = RingAut::identity(*f);
    const ExampleFixture fx = example_fixture(1);
    const SpanBasis fixture_span = module_span(make_ambient(f, 2, fx.lambda), fx.rows);
    o.detail << "size=3^" << r.size_exponent << " sigma_so=" << tf(r.sigma_self_orthogonal)
             << " so=" << tf(r.euclidean_self_orthogonal) << " sigma_sd=" << tf(r.sigma_self_dual)
             << " spec_size=3^" << code_size_exponent(spec);
    o.require(r.size_exponent == 12, "fixture size 3^12");
    o.require(code_size_exponent(spec) == 12 && code_span(spec).rank() == 12, "spec size 3^12");
    o.require(fixture_span == code_span(spec), "fixture span equals spec span");
    o.require(r.sigma_self_orthogonal && is_sigma_self_orthogonal(spec, frob).holds, "sigma-self-orthogonal");
    o.require(!r.euclidean_self_orthogonal && !is_sigma_self_orthogonal(spec, id).holds, "not self-orthogonal");
    o.require(!r.sigma_self_dual && !is_sigma_self_dual(spec, frob).holds, "not sigma-self-dual");
}

void example3(Outcome& o) {
    const ExampleReport r = analyze_example(3);
    const ExampleFixture fx = example_fixture(3);
    const SpanBasis span = module_span(make_ambient(fx.field, 2, fx.lambda), fx.rows);
    std::uint64_t count = 0;
    std::size_t dmin = 0;
    for_each_codeword(span, [&](const FpVector& v) {
        ++count;
        const std::size_t w = hamming_weight(v, fx.field->m());
        if (w > 0 && (dmin == 0 || w < dmin)) dmin = w;
    });
    // |R| = 81, n = 9.
    std::uint64_t rhs = 1;
    for (std::size_t k = 0; k < 9 - dmin + 1; ++k) rhs *= 81;
    o.detail << "|C|=" << count << " d=" << dmin << " |R|^(n-d+1)=" << rhs << " sigma_so=" << tf(r.sigma_self_orthogonal)
             << " so=" << tf(r.euclidean_self_orthogonal);
    o.require(count == 81, "|C| = 81");
    o.require(dmin == 9, "d = 9");
    o.require(count == rhs, "MDS identity");
    o.require(r.sigma_self_orthogonal, "sigma-self-orthogonal");
    o.require(!r.euclidean_self_orthogonal, "not self-orthogonal");
}

void example2(Outcome& o) {
    const ExampleReport r = analyze_example(2);
    o.detail << "size=5^" << r.size_exponent << " sigma_so=" << tf(r.sigma_self_orthogonal) << " printed_spec=";
    if (r.printed_spec_problems.empty()) {
        o.detail << "valid";
    } else {
        for (std::size_t k = 0; k < r.printed_spec_problems.size(); ++k) {
            o.detail << (k ? "; " : "") << "\"" << r.printed_spec_problems[k] << "\"";
        }
    }
    if (r.classified) o.detail << " classified=" << r.classified->spec.to_string();
    o.require(r.size_exponent == 6, "size 25^3");
    o.require(r.sigma_self_orthogonal, "sigma-self-orthogonal");
    o.require(!r.printed_spec_problems.empty(), "printed spec inconsistency reported");
    o.require(r.classified && *r.spec_sigma_self_orthogonal == r.sigma_self_orthogonal,
              "closed form agrees on the classified spec");
}

SweepSummary sweep(std::uint32_t p, unsigned m, unsigned s) {
    return run_sweep(parse_sweep_config(Json{{"p", p}, {"m", m}, {"s", s}}));
}

void report_sweep(Outcome& o, const char* label, const SweepSummary& s) {
    o.detail << label << ": specs=" << s.specs << " cases=" << s.cases << " checks=" << s.checks
             << " mismatches=" << s.mismatches << ' ';
    for (const auto& f : s.failures) o.evidence.push_back(f.to_json().dump());
    o.require(s.mismatches == 0, std::string(label) + " zero mismatches");
}

void sweep311(Outcome& o) { report_sweep(o, "(3,1,1)", sweep(3, 1, 1)); }

void sweep321_511(Outcome& o) {
    report_sweep(o, "(3,2,1)", sweep(3, 2, 1));
    report_sweep(o, "(5,1,1)", sweep(5, 1, 1));
}

void structure(Outcome& o) {
    const FieldPtr f = FieldCtx::builtin(3, 1);
    const unsigned s = 2;
    const std::size_t n = 9;

    // The chain of ideals for a fixed alpha + u beta.
    const RingElement lam{f->from_int(2), f->one()};
    const Ambient a = make_ambient(f, s, lam);
    const FieldElement a0 = inverse_root(lam.a, s);
    std::vector<SpanBasis> chain;
    for (std::size_t i = 0; i <= 2 * n; ++i) chain.push_back(span_basis(a, {nilpotent_power(a0, i, lam, n)}));
    bool strict = true;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        strict = strict && chain[i].space.contains(chain[i + 1].space) && chain[i].rank() == chain[i + 1].rank() + 1;
    }
    std::set<std::vector<FpVector>> distinct;
    for (const auto& c : chain) distinct.insert(c.space.rows());
    const SpanBasis u_ideal = span_basis(a, {QuotientPoly::constant(RingElement::u(*f), lam, n)});
    o.detail << "chain ideals=" << distinct.size() << " strict=" << tf(strict);
    o.require(strict, "strict inclusions");
    o.require(distinct.size() == 2 * n + 1, "2p^s + 1 distinct ideals");
    o.require(chain[n] == u_ideal, "middle ideal is <u>");
    o.require(chain[2 * n].rank() == 0, "top power vanishes");

    // Nilpotency index p^s of gamma0 x - 1 for every field constant.
    bool nil = true;
    for (const auto& g : f->units()) {
        const RingElement gl = RingElement::embed(g);
        const FieldElement g0 = inverse_root(g, s);
        nil = nil && nilpotent_power(g0, n, gl, n).is_zero() && !nilpotent_power(g0, n - 1, gl, n).is_zero();
    }
    o.detail << " nilpotency_index_p^s=" << tf(nil);
    o.require(nil, "nilpotency index p^s");

    // Psi: f(x) -> f(gamma0^{-1} x) from R[x]/<x^n - gamma> onto R[x]/<x^n - 1>.
    std::mt19937_64 rng(20261014);
    auto rnd = [&](std::uint64_t k) { return std::uniform_int_distribution<std::uint64_t>(0, k - 1)(rng); };
    std::size_t ok = 0;
    const std::size_t pairs = 100;
    for (std::size_t trial = 0; trial < pairs; ++trial) {
        const FieldElement g = f->units()[rnd(f->order() - 1)];
        const RingElement gl = RingElement::embed(g);
        const FieldElement c = inverse(inverse_root(g, s));
        auto random_poly = [&] {
            Word w;
            for (std::size_t k = 0; k < n; ++k) w.push_back({f->from_index(rnd(f->order())), f->from_index(rnd(f->order()))});
            return QuotientPoly(w, gl, n);
        };
        const QuotientPoly x = random_poly(), y = random_poly();
        const QuotientPoly px = rescale_variable(x, c), py = rescale_variable(y, c);
        const RingElement one = RingElement::one(*f);
        bool good = px.lambda() == one;
        good = good && rescale_variable(x * y, c) == px * py;
        good = good && rescale_variable(x + y, c) == px + py;
        good = good && rescale_variable(QuotientPoly::constant(one, gl, n), c) == QuotientPoly::constant(one, one, n);
        good = good && rescale_variable(px, inverse(c)) == x;
        good = good && (x == y) == (px == py);
        good = good && rescale_variable(nilpotent_power(inverse_root(g, s), 1, gl, n), c) ==
                           nilpotent_power(f->one(), 1, one, n);
        ok += good ? 1 : 0;
    }
    o.detail << " psi_pairs=" << ok << "/" << pairs;
    o.require(ok == pairs, "Psi ring isomorphism on 100 random pairs");
}

void chain_uniqueness(Outcome& o) {
    const FieldPtr f = FieldCtx::builtin(3, 1);
    const std::size_t n = 3;
    std::size_t pairs = 0, good = 0;
    for (const auto& lam : ring_units(f)) {
        if (lam.in_field()) continue;
        for (const auto& sigma : all_automorphisms(f)) {
            ++pairs;
            std::vector<std::size_t> self_dual;
            for (std::size_t i = 0; i <= 2 * n; ++i) {
                const Code c = make_code({f, 1, lam, CodeKind::ChainIdeal, i, 0, 0, {}});
                const SpanBasis b = code_span(c);
                if (brute_dual(b, sigma) == b) self_dual.push_back(i);
                if (is_sigma_self_dual(c, sigma).holds != (brute_dual(b, sigma) == b)) {
                    o.evidence.push_back("closed form disagrees: " + spec_id(c) + " sigma " + sigma.to_string());
                }
            }
            if (self_dual == std::vector<std::size_t>{n}) {
                ++good;
            } else {
                std::ostringstream os;
                os << "lambda=" << lam.to_string() << " sigma=" << sigma.to_string() << " self-dual i:";
                for (auto i : self_dual) os << ' ' << i;
                o.evidence.push_back(os.str());
            }
        }
    }
    o.detail << "(lambda, sigma) pairs=" << pairs << " with unique self-dual i=p^s: " << good;
    o.require(pairs > 0 && good == pairs && o.evidence.empty(), "exactly one self-dual chain code per pair");
}

void nonexistence(Outcome& o) {
    std::size_t type3 = 0, type2 = 0;
    const std::tuple<std::uint32_t, unsigned, unsigned> points[] = {{3, 1, 1}, {3, 2, 1}, {5, 1, 1}};
    for (const auto& [p, m, s] : points) {
        const SweepSummary sum = sweep(p, m, s);
        type3 += sum.self_dual_type3.size();
        type2 += sum.self_dual_type2_positive.size();
        std::ostringstream label;
        label << "(" << p << "," << m << "," << s << ")";
        for (const auto& c : sum.self_dual_type3) o.evidence.push_back(label.str() + " type3 self-dual: " + c);
        for (const auto& c : sum.self_dual_type2_positive) o.evidence.push_back(label.str() + " type2 self-dual: " + c);
    }
    o.detail << "oracle-certified sigma-self-dual codes: type3=" << type3 << " type2(i>0)=" << type2;
    o.require(type3 == 0, "no sigma-self-dual Type3 code");
    o.require(type2 == 0, "no sigma-self-dual Type2 code with i > 0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::size_t max_evidence = 12;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 8));
    app.add_option("--evidence", max_evidence, "evidence lines printed per failing criterion");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "example 1 reproduction", 10, example1},
        {2, "example 3 reproduction (MDS)", 5, example3},
        {3, "example 2 reproduction", 10, example2},
        {4, "differential sweep (3,1,1)", 60, sweep311},
        {5, "differential sweep (3,2,1) and (5,1,1)", 600, sweep321_511},
        {6, "structural invariants at (3,1,2)", 60, structure},
        {7, "chain self-dual uniqueness at (3,1,1)", 60, chain_uniqueness},
        {8, "nonexistence of self-dual Type3 / Type2 (i>0)", 600, nonexistence},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        if (!in_time) o.detail << " [fail: over the " << c.limit_seconds << " s limit]";
        const bool pass = o.pass && in_time;
        all = all && pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_seconds);
        std::cout << "AC" << c.id << ' ' << (pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail.str()
                  << " (" << timing << ")\n";
        if (!pass) {
            const std::size_t shown = std::min(max_evidence, o.evidence.size());
            for (std::size_t k = 0; k < shown; ++k) std::cout << "    " << o.evidence[k] << '\n';
            if (o.evidence.size() > shown) std::cout << "    ... " << o.evidence.size() - shown << " more\n";
        }
    }
    return all ? 0 : 1;
}
