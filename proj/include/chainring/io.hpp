#pragma once

// JSON encodings of fields, ring elements, automorphisms, code specs and dual
// results, plus the compact automorphism flag syntax "h=1,eps=1,0".

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chainring/duality.hpp"

namespace chainring {

using Json = nlohmann::json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"p": 3, "m": 2, "modulus": [1,0,1]}; the modulus may be omitted where a
/// built-in one exists.
FieldPtr parse_field(const Json& j);
/// A coefficient list (low degree first) or a plain integer.
FieldElement parse_field_element(const Json& j, const FieldPtr& f);
/// {"a": [...], "b": [...]}, with "b" optional.
RingElement parse_ring_element(const Json& j, const FieldPtr& f);
/// {"h": 1, "epsilon": [1,0]}.
RingAut parse_aut(const Json& j, const FieldPtr& f);
/// "h=1,eps=1,0": the integer h, then epsilon's coefficients.
RingAut parse_aut_flag(const std::string& text, const FieldPtr& f);

/// The spec file schema. "h" is read in the (gamma0 x - 1) basis unless
/// "h_basis" is "monomial". Throws ParseError for malformed documents; the
/// result is not yet validated.
CodeSpec parse_spec(const Json& j);
CodeSpec load_spec(const std::string& path);
Json read_json_file(const std::string& path);

Json to_json(const FieldElement& x);
Json to_json(const RingElement& x);
Json to_json(const RingAut& sigma);
Json to_json(const QuotientPoly& f);
Json to_json(const Code& code);
Json to_json(const DualResult& d);

}  // namespace chainring
