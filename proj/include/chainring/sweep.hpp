#pragma once

// Differential sweep: every classified code at a parameter point, against
// every automorphism, closed form versus oracle.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainring/io.hpp"

namespace chainring {

struct SweepConfig {
    FieldPtr field;
    unsigned s = 1;
    /// Nothing selects every unit of R.
    std::optional<std::vector<RingElement>> lambdas;
    /// Nothing selects all of Aut(R).
    std::optional<std::vector<RingAut>> sigmas;
    /// h coefficients range over the first `h_bound` field elements in index
    /// order; nothing means the whole field.
    std::optional<std::size_t> h_bound;
    std::uint64_t max_cases = 250'000;
};

/// {"p","m","s","modulus"?,"lambda":"all"|[...],"sigma":"all"|[...],
///  "h_bound"?,"max_cases"?}
SweepConfig parse_sweep_config(const Json& j);

struct SweepRecord {
    std::string spec;
    std::string sigma;
    std::string check;
    std::string expected;
    std::string got;
    bool pass = true;
    /// Logged comparisons that are not part of the pass criterion.
    bool informational = false;

    Json to_json() const;
};

struct SweepSummary {
    std::size_t specs = 0;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    std::size_t notes = 0;
    std::vector<SweepRecord> failures;
    /// Oracle-certified sigma-self-dual codes by family.
    std::vector<std::string> self_dual_type3;
    std::vector<std::string> self_dual_type2_positive;
    /// For chain constants: "lambda|sigma" -> the i with a self-dual ideal.
    std::map<std::string, std::vector<std::size_t>> chain_self_dual;
    double seconds = 0;

    Json to_json() const;
};

class SweepTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every canonical code over the constant, in a fixed order.
std::vector<Code> enumerate_codes(const FieldPtr& field, unsigned s, const RingElement& lambda,
                                  std::optional<std::size_t> h_bound);

std::vector<RingElement> sweep_lambdas(const SweepConfig& c);
std::vector<RingAut> sweep_sigmas(const SweepConfig& c);
std::uint64_t count_cases(const SweepConfig& c);

/// Throws SweepTooLarge before doing any work when the case count exceeds
/// max_cases. `sink` receives every record in order.
SweepSummary run_sweep(const SweepConfig& c, const std::function<void(const SweepRecord&)>& sink = {});

std::string spec_id(const Code& code);

}  // namespace chainring
