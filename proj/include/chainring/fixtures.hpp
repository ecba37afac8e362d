#pragma once

// The three printed generator matrices and their analysis.

#include <optional>
#include <string>
#include <vector>

#include "chainring/codes.hpp"

namespace chainring {

struct ExampleFixture {
    int which;
    FieldPtr field;
    unsigned s;
    /// The constant named in the text.
    RingElement lambda;
    std::vector<Word> rows;
    /// The automorphism the text pairs with the code.
    RingAut sigma;
    /// The polynomial spec as printed (may fail validation).
    CodeSpec printed;
    /// The printed generators taken literally, over `lambda`.
    std::vector<QuotientPoly> printed_generators;
};

/// which in {1, 2, 3}; throws std::invalid_argument otherwise.
ExampleFixture example_fixture(int which);

struct LambdaReading {
    std::string label;
    RingElement lambda;
    /// The R-span of the rows is already lambda-constacyclic.
    bool rows_constacyclic;
    /// The printed generators, read over this constant, span the same code.
    bool printed_generators_match;
};

struct ExampleReport {
    int which;
    std::uint32_t p;
    /// |C| = p^size_exponent for the R-span of the rows.
    std::size_t size_exponent;
    bool sigma_self_orthogonal;
    bool euclidean_self_orthogonal;
    bool sigma_self_dual;
    std::optional<std::size_t> min_distance;
    std::optional<bool> mds;
    std::vector<LambdaReading> readings;
    /// Units lambda for which the row span is lambda-constacyclic.
    std::vector<RingElement> consistent_lambdas;
    /// Validation problems of the printed spec.
    std::vector<std::string> printed_spec_problems;
    /// The canonical spec of the row span over the text's constant, or over
    /// the first consistent constant when the text's does not close.
    std::optional<Code> classified;
    /// Closed-form verdicts for `classified`.
    std::optional<bool> spec_sigma_self_orthogonal;
    std::optional<bool> spec_euclidean_self_orthogonal;
    std::optional<bool> spec_sigma_self_dual;
    std::vector<std::string> notes;
};

ExampleReport analyze_example(int which);

}  // namespace chainring
