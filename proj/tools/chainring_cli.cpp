// chainring_cli: classification, duals, self-orthogonality and self-duality
// checks, enumeration, worked examples, and the differential sweep.
//
// Exit status: 0 success or true, 1 false, 2 input error, 3 closed form
// disagrees with the oracle.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chainring/duality.hpp"
#include "chainring/fixtures.hpp"
#include "chainring/io.hpp"
#include "chainring/oracle.hpp"
#include "chainring/sweep.hpp"

using namespace chainring;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kMismatch = 3;

std::string size_text(std::uint32_t p, std::size_t e) {
    return e == 0 ? std::string("1") : std::to_string(p) + "^" + std::to_string(e);
}

std::string headline(const Code& c) {
    std::ostringstream os;
    if (c.spec.kind == CodeKind::Zero) {
        os << "type1 zero";
    } else if (c.spec.kind == CodeKind::Whole) {
        os << "type1 whole";
    } else {
        os << c.spec.to_string();
    }
    if (c.spec.kind == CodeKind::Type3 || c.spec.kind == CodeKind::Type4) os << ", T=" << c.T;
    os << ", size=" << size_text(c.spec.field->p(), code_size_exponent(c));
    return os.str();
}

std::string poly_text(const QuotientPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < f.n(); ++k) {
        if (f[k].is_zero()) continue;
        os << (first ? "" : " + ") << '(' << f[k].to_string() << ")x^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

void print_code(const Code& c, std::ostream& os) {
    os << headline(c) << '\n';
    os << "  lambda = " << c.spec.lambda.to_string() << ", n = " << c.n << '\n';
    os << "  " << (c.spec.kind == CodeKind::ChainIdeal ? "alpha0" : "gamma0") << " = " << c.root.to_string() << '\n';
    for (const auto& g : generators(c)) os << "  gen " << poly_text(g) << '\n';
}

void print_problems(const std::vector<std::string>& problems) {
    for (const auto& p : problems) std::cerr << "error: " << p << '\n';
}

// Loads and validates a spec, printing named violations.
std::optional<Code> load_code(const std::string& path) {
    const CodeSpec spec = load_spec(path);
    const auto problems = validate_spec(spec);
    if (!problems.empty()) {
        print_problems(problems);
        return std::nullopt;
    }
    return make_code(spec);
}

RingAut sigma_of(const std::string& flag, const FieldPtr& f) {
    return flag.empty() ? RingAut::identity(*f) : parse_aut_flag(flag, f);
}

int cmd_classify(const std::string& path, bool json) {
    const auto code = load_code(path);
    if (!code) return kInputError;
    if (json) {
        std::cout << to_json(*code).dump(2) << '\n';
    } else {
        print_code(*code, std::cout);
    }
    return kTrue;
}

int cmd_dual(const std::string& path, const std::string& sigma_flag, bool verify, bool json) {
    const auto code = load_code(path);
    if (!code) return kInputError;
    const RingAut sigma = sigma_of(sigma_flag, code->spec.field);
    const DualResult d = sigma_dual(*code, sigma);
    std::optional<bool> match;
    if (verify) match = brute_dual(code_span(*code), sigma) == code_span(d.dual_spec);
    if (json) {
        Json j = to_json(d);
        if (match) j["verify"] = *match ? "MATCH" : "MISMATCH";
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "sigma = " << sigma.to_string() << '\n';
        std::cout << "dual constant = " << d.dual_lambda.to_string() << '\n';
        std::cout << "clause = " << d.clause << '\n';
        for (const auto& g : d.witness_generators) std::cout << "witness " << poly_text(g) << '\n';
        std::cout << "dual ";
        print_code(d.dual_spec, std::cout);
        if (match) std::cout << (*match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match && !*match ? kMismatch : kTrue;
}

int cmd_check(const std::string& path, const std::string& sigma_flag, bool self_dual, bool verify) {
    const auto code = load_code(path);
    if (!code) return kInputError;
    const RingAut sigma = sigma_of(sigma_flag, code->spec.field);
    const Verdict v = self_dual ? is_sigma_self_dual(*code, sigma) : is_sigma_self_orthogonal(*code, sigma);
    std::cout << (v.holds ? "true" : "false") << " via " << v.clause << '\n';
    if (verify) {
        const SpanBasis span = code_span(*code);
        const bool oracle = self_dual ? brute_dual(span, sigma) == span : brute_self_orthogonal(span, sigma);
        std::cout << "oracle " << (oracle ? "true" : "false") << ' ' << (oracle == v.holds ? "MATCH" : "MISMATCH")
                  << '\n';
        if (oracle != v.holds) return kMismatch;
    }
    return v.holds ? kTrue : kFalse;
}

int cmd_enumerate(const std::string& path, std::uint64_t cap, bool words) {
    const auto code = load_code(path);
    if (!code) return kInputError;
    const SpanBasis span = code_span(*code);
    std::uint64_t count = 0;
    std::size_t dmin = 0;
    const unsigned m = code->spec.field->m();
    for_each_codeword(
        span,
        [&](const FpVector& v) {
            ++count;
            const std::size_t w = hamming_weight(v, m);
            if (w > 0 && (dmin == 0 || w < dmin)) dmin = w;
            if (words) {
                const Word cw = unflatten(v, code->spec.field);
                for (std::size_t k = 0; k < cw.size(); ++k) std::cout << (k ? " " : "") << cw[k].to_string();
                std::cout << '\n';
            }
        },
        cap);
    std::cout << "count = " << count << '\n';
    if (dmin > 0) std::cout << "min_distance = " << dmin << '\n';
    return kTrue;
}

int cmd_sweep(SweepConfig config, const std::string& out_path) {
    std::ofstream out;
    if (!out_path.empty()) {
        out.open(out_path);
        if (!out) throw ParseError("cannot write " + out_path);
    }
    std::cout << "cases = " << count_cases(config) << '\n';
    const SweepSummary sum = run_sweep(config, [&](const SweepRecord& r) {
        if (out.is_open()) out << r.to_json().dump() << '\n';
        if (!r.pass && !r.informational) std::cout << "MISMATCH " << r.to_json().dump() << '\n';
    });
    Json j = sum.to_json();
    std::cerr << "seconds = " << sum.seconds << '\n';
    j.erase("seconds");
    if (out.is_open()) out << j.dump() << '\n';
    std::cout << j.dump(2) << '\n';
    return sum.mismatches == 0 ? kTrue : kMismatch;
}

std::string tf(bool b) { return b ? "true" : "false"; }

int cmd_example(int which) {
    const ExampleReport r = analyze_example(which);
    std::cout << "example " << which << '\n';
    std::cout << "size = " << size_text(r.p, r.size_exponent) << '\n';
    std::cout << "sigma-self-orthogonal = " << tf(r.sigma_self_orthogonal) << '\n';
    std::cout << "self-orthogonal = " << tf(r.euclidean_self_orthogonal) << '\n';
    std::cout << "sigma-self-dual = " << tf(r.sigma_self_dual) << '\n';
    if (r.min_distance) std::cout << "min_distance = " << *r.min_distance << '\n';
    if (r.mds) std::cout << "mds = " << tf(*r.mds) << '\n';
    for (const auto& x : r.readings) {
        std::cout << "reading " << x.label << " lambda=" << x.lambda.to_string()
                  << ": rows constacyclic = " << tf(x.rows_constacyclic)
                  << ", printed generators match = " << tf(x.printed_generators_match) << '\n';
    }
    std::cout << "consistent constants =";
    for (const auto& l : r.consistent_lambdas) std::cout << ' ' << l.to_string();
    std::cout << '\n';
    if (r.printed_spec_problems.empty()) {
        std::cout << "printed spec valid\n";
    } else {
        for (const auto& p : r.printed_spec_problems) std::cout << "printed spec invalid: " << p << '\n';
    }
    if (r.classified) {
        std::cout << "classified lambda=" << r.classified->spec.lambda.to_string() << ' ' << headline(*r.classified)
                  << '\n';
        std::cout << "closed form: sigma-self-orthogonal = " << tf(*r.spec_sigma_self_orthogonal)
                  << ", self-orthogonal = " << tf(*r.spec_euclidean_self_orthogonal)
                  << ", sigma-self-dual = " << tf(*r.spec_sigma_self_dual) << '\n';
    }
    for (const auto& n : r.notes) std::cout << "note " << n << '\n';
    return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic codes of length p^s over F_{p^m} + u F_{p^m}"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string sigma_flag;
    bool json = false;
    bool verify = false;

    auto* classify = app.add_subcommand("classify", "validate a spec and print its classification");
    classify->add_option("--spec", spec_path, "spec file")->required();
    classify->add_flag("--json", json);

    auto* dual = app.add_subcommand("dual", "closed-form sigma-dual");
    dual->add_option("--spec", spec_path, "spec file")->required();
    dual->add_option("--sigma", sigma_flag, "automorphism, e.g. h=1,eps=1,0");
    dual->add_flag("--verify", verify, "compare against the brute-force dual");
    dual->add_flag("--json", json);

    bool so = false;
    bool sd = false;
    auto* check = app.add_subcommand("check", "decide sigma-self-orthogonality or sigma-self-duality");
    check->add_option("--spec", spec_path, "spec file")->required();
    check->add_option("--sigma", sigma_flag, "automorphism, e.g. h=1,eps=1,0");
    auto* so_flag = check->add_flag("--self-orthogonal", so);
    auto* sd_flag = check->add_flag("--self-dual", sd);
    so_flag->excludes(sd_flag);
    check->add_flag("--verify", verify, "compare against the oracle");

    std::uint64_t cap = kDefaultEnumerationCap;
    bool words = false;
    auto* enumerate = app.add_subcommand("enumerate", "list or count codewords");
    enumerate->add_option("--spec", spec_path, "spec file")->required();
    enumerate->add_option("--cap", cap, "refuse codes with more codewords");
    enumerate->add_flag("--words", words, "print every codeword");

    std::string config_path;
    std::string out_path;
    std::uint32_t p = 0;
    unsigned m = 1;
    unsigned s = 1;
    std::size_t h_bound = 0;
    std::uint64_t max_cases = 0;
    auto* sweep = app.add_subcommand("sweep", "differential sweep, closed form against oracle");
    sweep->add_option("--config", config_path, "sweep config file");
    sweep->add_option("--p", p);
    sweep->add_option("--m", m);
    sweep->add_option("--s", s);
    sweep->add_option("--h-bound", h_bound, "h coefficients from the first N field elements");
    sweep->add_option("--max-cases", max_cases, "hard cap on (spec, sigma) cases");
    sweep->add_option("--out", out_path, "write every record as JSON lines");

    int which = 0;
    auto* example = app.add_subcommand("example", "the three worked generator matrices");
    example->add_option("which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*classify) return cmd_classify(spec_path, json);
        if (*dual) return cmd_dual(spec_path, sigma_flag, verify, json);
        if (*check) {
            if (so == sd) {
                std::cerr << "error: pass exactly one of --self-orthogonal, --self-dual\n";
                return kInputError;
            }
            return cmd_check(spec_path, sigma_flag, sd, verify);
        }
        if (*enumerate) return cmd_enumerate(spec_path, cap, words);
        if (*sweep) {
            Json j;
            if (!config_path.empty()) {
                j = read_json_file(config_path);
            } else if (p != 0) {
                j = Json{{"p", p}, {"m", m}, {"s", s}};
            } else {
                std::cerr << "error: sweep needs --config or --p\n";
                return kInputError;
            }
            SweepConfig config = parse_sweep_config(j);
            if (h_bound > 0) config.h_bound = h_bound;
            if (max_cases > 0) config.max_cases = max_cases;
            return cmd_sweep(std::move(config), out_path);
        }
        if (*example) return cmd_example(which);
    } catch (const SpecError& e) {
        print_problems(e.problems());
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const SweepTooLarge& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kInputError;
    } catch (const CapExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
