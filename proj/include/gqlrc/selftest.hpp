#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gqlrc::selftest {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    bool budget_limited = false; // ran out of budget: reported, not failed
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t budget = 1'000'000'000;
    unsigned threads = 1;
    std::uint64_t seed = 2024;
    std::string only; // run a single check by id when non-empty
};

// The full verification suite; one result per check, in a fixed order.
std::vector<CheckResult> run_all(const Options& opt = {});

std::string format_line(const CheckResult& r);

} // namespace gqlrc::selftest
