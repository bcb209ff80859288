#pragma once

#include "gqlrc/codes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gqlrc {

// Repair metrics of the dual of a GQ's p-ary code. The parity checks
// repairing a symbol live in the GQ code itself, so everything is derived
// from its low-weight codewords.
struct SymbolRepair {
    std::uint32_t i = 0;
    unsigned r_i = 0;
    std::uint64_t a_i = 0;
};

struct RepairProfile {
    std::string kind;
    unsigned p = 2;
    long s = 0;
    long t = 0;
    unsigned r = 0;       // max_i r_i
    std::uint64_t a = 0;  // min_i a_i
    bool tight_r = false; // r == s
    bool tight_a = false; // a == t+1
    bool closed_form_r = false; // r == s
    bool closed_form_a = false; // a == (p-1)(t+1)
    bool uniform = true;    // r_i and a_i constant over i
    std::vector<SymbolRepair> per_symbol;
    std::vector<std::uint32_t> unrepairable; // zero columns of the GQ code
};

struct LrcOptions {
    std::uint64_t budget = 1'000'000'000;
    unsigned threads = 1;
    unsigned weight_cap = 0; // 0: up to the code length
};

// Sweep the GQ code by increasing weight until every symbol is covered, then
// read off r(i), r, a(i) and a from the enumerated words alone. Throws
// budget_error if the sweep cannot finish.
RepairProfile lrc_profile(const IncidenceStructure& gq, unsigned p,
                          const LrcOptions& opt = {});

// All minimum-weight parity checks through position i (scalar multiples
// included): the lightest GQ codewords with a nonzero i-th entry.
std::vector<Word> omega_min(const LinearCode& gq_code, std::uint32_t i,
                            const LrcOptions& opt = {});

// The bounds r <= s and a >= t+1 with tightness flags. The bounds are
// stated for the binary case; for p > 2 the check is informational.
struct BoundCheck {
    bool binary = false;
    bool r_le_s = false;
    bool a_ge_t_plus_1 = false;
    bool tight_r = false;
    bool tight_a = false;
    bool hard_fail = false; // r > s: contradiction
    std::string detail;
};
BoundCheck check_bounds(const RepairProfile& profile);

} // namespace gqlrc
