// Runs every suite criterion and prints one pass/fail line per check.
#include "gqlrc/selftest.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    gqlrc::selftest::Options opt;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) opt.only = argv[++i];
        if (arg == "--seed" && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
        if (arg == "--threads" && i + 1 < argc)
            opt.threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
        if (arg == "--budget" && i + 1 < argc)
            opt.budget = std::strtoull(argv[++i], nullptr, 10);
    }
    auto results = gqlrc::selftest::run_all(opt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << gqlrc::selftest::format_line(r) << "\n";
        all = all && r.pass;
    }
    if (results.empty()) {
        std::cout << "no checks matched\n";
        return 1;
    }
    std::cout << (all ? "all checks passed" : "FAILURES present") << "\n";
    return all ? 0 : 1;
}
