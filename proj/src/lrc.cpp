#include "gqlrc/lrc.hpp"

#include <algorithm>
#include <stdexcept>

namespace gqlrc {

namespace {

std::vector<std::uint32_t> zero_columns(const LinearCode& code) {
    std::vector<std::uint32_t> zeros;
    for (std::uint32_t j = 0; j < code.length; ++j) {
        bool covered = false;
        for (const auto& row : code.basis)
            if (row[j]) {
                covered = true;
                break;
            }
        if (!covered) zeros.push_back(j);
    }
    return zeros;
}

} // namespace

RepairProfile lrc_profile(const IncidenceStructure& gq, unsigned p,
                          const LrcOptions& opt) {
    RepairProfile prof;
    prof.kind = gq.kind;
    prof.p = p;
    if (gq.params) {
        prof.s = gq.params->s;
        prof.t = gq.params->t;
    } else {
        PgVerdict v = verify_partial_geometry(gq);
        if (!v.ok)
            throw std::invalid_argument("structure is not a partial geometry: " + v.witness);
        prof.s = v.params.s;
        prof.t = v.params.t;
    }

    LinearCode code = code_from_structure(gq, p);
    prof.unrepairable = zero_columns(code);

    const std::size_t n = code.length;
    const unsigned cap = opt.weight_cap == 0
                             ? static_cast<unsigned>(n)
                             : std::min<unsigned>(opt.weight_cap, n);
    std::vector<unsigned> min_weight_at(n, 0); // 0 = not yet covered
    std::vector<char> repairable(n, 1);
    for (auto j : prof.unrepairable) repairable[j] = 0;

    // words per weight level, one representative per scalar class
    std::vector<std::vector<Word>> reps_by_weight(cap + 1);
    std::size_t covered = static_cast<std::size_t>(
        std::count(repairable.begin(), repairable.end(), char(0)));
    unsigned top = 0;
    EnumOptions eopt{opt.budget, opt.threads};
    for (unsigned w = 1; w <= cap && covered < n; ++w) {
        reps_by_weight[w] = words_of_weight(code, w, eopt);
        top = w;
        for (const auto& word : reps_by_weight[w])
            for (auto j : word.support)
                if (repairable[j] && min_weight_at[j] == 0) {
                    min_weight_at[j] = w;
                    ++covered;
                }
    }
    if (covered < n)
        throw budget_error("repair sweep hit the weight cap before covering all symbols");

    unsigned r = 0;
    for (std::uint32_t j = 0; j < n; ++j)
        if (repairable[j]) r = std::max(r, min_weight_at[j] - 1);
    prof.r = r;

    // availability counts words of weight <= r+1 through each position; make
    // sure all levels up to r+1 were enumerated even if coverage stopped early
    for (unsigned w = top + 1; w <= std::min<unsigned>(r + 1, cap); ++w)
        reps_by_weight[w] = words_of_weight(code, w, eopt);

    std::vector<std::uint64_t> count_through(n, 0);
    for (unsigned w = 1; w <= std::min<unsigned>(r + 1, cap); ++w)
        for (const auto& word : reps_by_weight[w])
            for (auto j : word.support) count_through[j] += p - 1;

    prof.per_symbol.reserve(n);
    std::uint64_t a = ~0ull;
    bool uniform = true;
    for (std::uint32_t j = 0; j < n; ++j) {
        if (!repairable[j]) continue;
        SymbolRepair sr{j, min_weight_at[j] - 1, count_through[j]};
        if (!prof.per_symbol.empty() &&
            (sr.r_i != prof.per_symbol[0].r_i || sr.a_i != prof.per_symbol[0].a_i))
            uniform = false;
        a = std::min(a, sr.a_i);
        prof.per_symbol.push_back(sr);
    }
    prof.a = prof.per_symbol.empty() ? 0 : a;
    prof.uniform = uniform;

    prof.closed_form_r = prof.r == static_cast<unsigned>(prof.s);
    prof.closed_form_a =
        prof.a == static_cast<std::uint64_t>(p - 1) * (prof.t + 1);
    prof.tight_r = prof.closed_form_r;
    prof.tight_a = prof.a == static_cast<std::uint64_t>(prof.t) + 1;
    return prof;
}

std::vector<Word> omega_min(const LinearCode& gq_code, std::uint32_t i,
                            const LrcOptions& opt) {
    if (i >= gq_code.length) throw std::invalid_argument("position out of range");
    const unsigned cap = opt.weight_cap == 0
                             ? static_cast<unsigned>(gq_code.length)
                             : std::min<unsigned>(opt.weight_cap, gq_code.length);
    EnumOptions eopt{opt.budget, opt.threads};
    for (unsigned w = 1; w <= cap; ++w) {
        std::vector<Word> hits;
        for (const auto& word : words_of_weight(gq_code, w, eopt))
            if (std::binary_search(word.support.begin(), word.support.end(), i))
                hits.push_back(word);
        if (!hits.empty()) return expand_scalars(hits, gq_code.p);
    }
    return {};
}

BoundCheck check_bounds(const RepairProfile& profile) {
    BoundCheck b;
    b.binary = profile.p == 2;
    b.r_le_s = profile.r <= static_cast<unsigned>(profile.s);
    b.a_ge_t_plus_1 = profile.a >= static_cast<std::uint64_t>(profile.t) + 1;
    b.tight_r = profile.r == static_cast<unsigned>(profile.s);
    b.tight_a = profile.a == static_cast<std::uint64_t>(profile.t) + 1;
    b.hard_fail = !b.r_le_s;
    b.detail = "r=" + std::to_string(profile.r) + (b.tight_r ? "=s" : "<s") +
               ", a=" + std::to_string(profile.a) +
               (b.tight_a ? "=t+1" : (b.a_ge_t_plus_1 ? ">t+1" : "<t+1"));
    if (!b.binary) b.detail += " (bounds stated for p=2; informational)";
    return b;
}

} // namespace gqlrc
