#include "chainring/io.hpp"

#include <fstream>
#include <sstream>

namespace chainring {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t get_size(const Json& j, const char* key, std::size_t fallback) {
    if (!j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

CodeKind parse_kind(const std::string& s) {
    if (s == "chain") return CodeKind::ChainIdeal;
    if (s == "type1_zero" || s == "zero") return CodeKind::Zero;
    if (s == "type1_whole" || s == "whole") return CodeKind::Whole;
    if (s == "type2") return CodeKind::Type2;
    if (s == "type3") return CodeKind::Type3;
    if (s == "type4") return CodeKind::Type4;
    throw ParseError("unknown kind \"" + s + "\"");
}

}  // namespace

FieldPtr parse_field(const Json& j) {
    const auto p = require(j, "p").get<std::uint32_t>();
    const auto m = require(j, "m").get<unsigned>();
    try {
        if (!j.contains("modulus")) return FieldCtx::builtin(p, m);
        return FieldCtx::make(p, m, j.at("modulus").get<std::vector<std::uint32_t>>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad modulus: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

FieldElement parse_field_element(const Json& j, const FieldPtr& f) {
    if (j.is_number_integer()) return f->from_int(j.get<std::int64_t>());
    if (!j.is_array()) throw ParseError("field element must be a coefficient list");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError("coefficients must be nonnegative integers");
        c.push_back(x.get<std::uint32_t>());
    }
    try {
        return field_make(f, c);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

RingElement parse_ring_element(const Json& j, const FieldPtr& f) {
    const FieldElement a = parse_field_element(require(j, "a"), f);
    const FieldElement b = j.contains("b") ? parse_field_element(j.at("b"), f) : f->zero();
    return {a, b};
}

RingAut parse_aut(const Json& j, const FieldPtr& f) {
    const auto h = require(j, "h").get<unsigned>();
    const FieldElement eps = j.contains("epsilon") ? parse_field_element(j.at("epsilon"), f) : f->one();
    try {
        return make_aut(h, eps);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

RingAut parse_aut_flag(const std::string& text, const FieldPtr& f) {
    unsigned h = 0;
    std::vector<std::uint32_t> eps;
    enum { None, InH, InEps } state = None;
    std::stringstream ss(text);
    std::string item;
    bool saw_eps = false;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("h=", 0) == 0) {
            state = InH;
            item = item.substr(2);
        } else if (item.rfind("eps=", 0) == 0) {
            state = InEps;
            saw_eps = true;
            item = item.substr(4);
        } else if (state != InEps) {
            throw ParseError("bad automorphism flag \"" + text + "\"; expected h=<int>,eps=<coeffs>");
        }
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument("");
            if (state == InH) {
                h = static_cast<unsigned>(v);
            } else {
                eps.push_back(static_cast<std::uint32_t>(v));
            }
        } catch (const std::exception&) {
            throw ParseError("bad automorphism flag \"" + text + "\"; expected h=<int>,eps=<coeffs>");
        }
    }
    const FieldElement e = saw_eps ? parse_field_element(Json(eps), f) : f->one();
    try {
        return make_aut(h, e);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

CodeSpec parse_spec(const Json& j) {
    try {
        const FieldPtr f = parse_field(require(j, "field"));
        const auto s = static_cast<unsigned>(get_size(j, "s", 0));
        const RingElement lambda = parse_ring_element(require(j, "lambda"), f);
        const CodeKind kind = parse_kind(require(j, "kind").get<std::string>());
        CodeSpec spec{f, s, lambda, kind, get_size(j, "i", 0), get_size(j, "t", 0), get_size(j, "omega", 0), {}};
        if (j.contains("h")) {
            for (const auto& c : j.at("h")) spec.h.push_back(parse_field_element(c, f));
        }
        const std::string basis = j.value("h_basis", std::string("nil"));
        if (basis == "monomial" && !spec.h.empty() && lambda.is_unit() && s > 0) {
            Word plain;
            for (const auto& c : spec.h) plain.push_back(RingElement::embed(c));
            const NilExpansion e = nil_expand(plain, inverse_root(lambda.a, s));
            spec.h.clear();
            for (const auto& c : e.coeffs) spec.h.push_back(c.a);
        } else if (basis != "nil" && basis != "monomial") {
            throw ParseError("h_basis must be \"nil\" or \"monomial\"");
        }
        return spec;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed spec: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

CodeSpec load_spec(const std::string& path) { return parse_spec(read_json_file(path)); }

Json to_json(const FieldElement& x) { return Json(std::vector<std::uint32_t>(x.coeffs().begin(), x.coeffs().end())); }

Json to_json(const RingElement& x) { return Json{{"a", to_json(x.a)}, {"b", to_json(x.b)}}; }

Json to_json(const RingAut& sigma) { return Json{{"h", sigma.theta.h}, {"epsilon", to_json(sigma.epsilon)}}; }

Json to_json(const QuotientPoly& f) {
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(Json::array({to_json(c.a), to_json(c.b)}));
    return out;
}

Json to_json(const Code& code) {
    const auto& c = code.spec;
    Json j{{"kind", kind_name(c.kind)},
           {"p", c.field->p()},
           {"m", c.field->m()},
           {"s", c.s},
           {"lambda", to_json(c.lambda)},
           {"root", to_json(code.root)},
           {"size_exponent", code_size_exponent(code)}};
    if (c.kind == CodeKind::ChainIdeal || c.kind == CodeKind::Type2 || c.kind == CodeKind::Type3 ||
        c.kind == CodeKind::Type4) {
        j["i"] = c.i;
    }
    if (c.kind == CodeKind::Type3 || c.kind == CodeKind::Type4) {
        j["t"] = c.t;
        j["T"] = code.T;
        Json h = Json::array();
        for (const auto& x : c.h) h.push_back(to_json(x));
        j["h"] = h;
    }
    if (c.kind == CodeKind::Type4) j["omega"] = c.omega;
    return j;
}

Json to_json(const DualResult& d) {
    Json gens = Json::array();
    for (const auto& g : d.witness_generators) gens.push_back(to_json(g));
    return Json{{"dual_lambda", to_json(d.dual_lambda)},
                {"dual_spec", to_json(d.dual_spec)},
                {"witness_generators", gens},
                {"clause", d.clause}};
}

}  // namespace chainring
