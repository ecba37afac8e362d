#include <gtest/gtest.h>

#include "chainring/sweep.hpp"
#include "support.hpp"

using namespace chainring;
using namespace chainring::test;

namespace {

TEST(Sweep, FullAt311HasNoMismatches) {
    const SweepConfig c = parse_sweep_config(Json{{"p", 3}, {"m", 1}, {"s", 1}});
    EXPECT_EQ(count_cases(c), 120u);
    std::size_t records = 0;
    const SweepSummary s = run_sweep(c, [&](const SweepRecord&) { ++records; });
    EXPECT_EQ(s.mismatches, 0u);
    EXPECT_EQ(s.cases, 120u);
    EXPECT_EQ(records, s.checks);
}

TEST(Sweep, CountMatchesEnumeration) {
    for (auto [p, m, s] : {std::tuple{3, 1, 1}, std::tuple{3, 2, 1}, std::tuple{5, 1, 1}, std::tuple{3, 1, 2}}) {
        const SweepConfig c = parse_sweep_config(Json{{"p", p}, {"m", m}, {"s", s}});
        std::uint64_t direct = 0;
        for (const auto& l : sweep_lambdas(c)) direct += enumerate_codes(c.field, c.s, l, c.h_bound).size();
        EXPECT_EQ(count_cases(c), direct * sweep_sigmas(c).size());
    }
}

TEST(Sweep, RefusesAboveCap) {
    const SweepConfig c = parse_sweep_config(Json{{"p", 5}, {"m", 1}, {"s", 2}, {"max_cases", 100}});
    try {
        run_sweep(c);
        FAIL();
    } catch (const SweepTooLarge& e) {
        EXPECT_NE(std::string(e.what()).find(std::to_string(count_cases(c))), std::string::npos);
    }
}

TEST(Sweep, ExplicitSelections) {
    const Json j = Json::parse(R"({"p": 3, "m": 2, "s": 1, "lambda": [{"a": [0, 1]}],
                                   "sigma": [{"h": 1, "epsilon": [1]}], "h_bound": 2})");
    const SweepConfig c = parse_sweep_config(j);
    EXPECT_EQ(sweep_lambdas(c).size(), 1u);
    EXPECT_EQ(sweep_sigmas(c).size(), 1u);
    const SweepSummary s = run_sweep(c);
    EXPECT_EQ(s.mismatches, 0u);
}

}  // namespace
