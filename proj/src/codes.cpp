#include "gqlrc/codes.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace gqlrc {

namespace {

std::uint8_t mod_p(long v, unsigned p) {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint8_t>(r);
}

// RREF over F_p on byte rows; returns (reduced nonzero rows, pivot columns)
std::pair<std::vector<std::vector<std::uint8_t>>, std::vector<std::uint32_t>>
rref_mod_p(std::vector<std::vector<std::uint8_t>> rows, unsigned p) {
    std::vector<std::uint32_t> pivots;
    if (rows.empty()) return {rows, pivots};
    const std::size_t n = rows[0].size();
    auto inv_mod = [&](unsigned a) {
        unsigned r = 1, b = a, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::uint32_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        if (rows[r][c] != 1) {
            unsigned s = inv_mod(rows[r][c]);
            for (std::size_t j = c; j < n; ++j)
                rows[r][j] = static_cast<std::uint8_t>(rows[r][j] * s % p);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            unsigned f = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = static_cast<std::uint8_t>(
                    (rows[i][j] + (p - f) * rows[r][j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {rows, pivots};
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    long double acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    acc += 0.5L;
    if (acc > 2e18L) return ~0ull;
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t pow_sat(std::uint64_t b, unsigned e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / (b ? b : 1)) return cap + 1;
        r *= b;
    }
    return r;
}

// candidate count for supports of size exactly w with first value normalized
std::uint64_t candidates_at(std::size_t n, unsigned w, unsigned p) {
    std::uint64_t c = binom(n, w);
    std::uint64_t scal = pow_sat(p - 1, w > 0 ? w - 1 : 0, ~0ull >> 1);
    if (c != 0 && scal > (~0ull) / c) return ~0ull;
    return c * scal;
}

// Per-column syndromes against the dual basis. For p = 2 the syndromes are
// bit-packed; otherwise one byte per parity check.
struct Syndromes {
    unsigned p = 2;
    std::size_t nchecks = 0;
    std::size_t words = 0; // packed words per column (p == 2)
    std::vector<std::uint64_t> packed;
    std::vector<std::uint8_t> bytes;

    static Syndromes build(const LinearCode& c) {
        Syndromes s;
        s.p = c.p;
        s.nchecks = c.dual.size();
        if (c.p == 2) {
            s.words = (s.nchecks + 63) / 64;
            if (s.words == 0) s.words = 1;
            s.packed.assign(c.length * s.words, 0);
            for (std::size_t r = 0; r < c.dual.size(); ++r)
                for (std::size_t j = 0; j < c.length; ++j)
                    if (c.dual[r][j])
                        s.packed[j * s.words + r / 64] |= 1ull << (r % 64);
        } else {
            s.bytes.assign(c.length * std::max<std::size_t>(s.nchecks, 1), 0);
            for (std::size_t r = 0; r < c.dual.size(); ++r)
                for (std::size_t j = 0; j < c.length; ++j)
                    s.bytes[j * s.nchecks + r] = c.dual[r][j];
        }
        return s;
    }
};

// enumerate supports of size exactly w with first-index in [first_lo,
// first_hi), normalized scalar patterns, zero-syndrome hits reported through
// `out`; returns the number of candidates inspected
std::uint64_t enumerate_exact_weight(const LinearCode& code, const Syndromes& syn,
                                     unsigned w, std::uint32_t first_lo,
                                     std::uint32_t first_hi,
                                     std::vector<Word>& out) {
    const std::size_t n = code.length;
    const unsigned p = code.p;
    std::uint64_t tested = 0;
    if (w == 0 || n == 0) return 0;

    std::vector<std::uint32_t> pos(w);
    std::vector<std::uint8_t> val(w);

    if (p == 2) {
        const std::size_t W = syn.words;
        std::vector<std::uint64_t> acc((w + 1) * W, 0);
        // depth-first over ascending positions, acc[d] = partial syndrome
        std::vector<std::uint32_t> stack_pos(w + 1, 0);
        unsigned d = 0;
        stack_pos[0] = first_lo;
        while (true) {
            if (d == 0 && stack_pos[0] >= first_hi) break;
            if (stack_pos[d] > n - (w - d)) {
                if (d == 0) break;
                --d;
                ++stack_pos[d];
                continue;
            }
            std::uint32_t j = stack_pos[d];
            pos[d] = j;
            const std::uint64_t* col = &syn.packed[j * W];
            std::uint64_t* cur = &acc[(d + 1) * W];
            const std::uint64_t* prev = &acc[d * W];
            for (std::size_t x = 0; x < W; ++x) cur[x] = prev[x] ^ col[x];
            if (d + 1 == w) {
                ++tested;
                bool zero = true;
                for (std::size_t x = 0; x < W; ++x)
                    if (cur[x]) {
                        zero = false;
                        break;
                    }
                if (zero) {
                    Word word;
                    word.support.assign(pos.begin(), pos.end());
                    word.values.assign(w, 1);
                    out.push_back(std::move(word));
                }
                ++stack_pos[d];
            } else {
                ++d;
                stack_pos[d] = j + 1;
            }
        }
        return tested;
    }

    // general p: byte accumulators, value loops (first position fixed at 1)
    const std::size_t C = std::max<std::size_t>(syn.nchecks, 1);
    std::vector<std::uint8_t> acc((w + 1) * C, 0);
    struct Frame {
        std::uint32_t j;
        std::uint8_t v;
    };
    std::vector<Frame> frame(w + 1);
    unsigned d = 0;
    frame[0] = {first_lo, 1};
    while (true) {
        if (d == 0 && (frame[0].j >= first_hi)) break;
        if (frame[d].j > n - (w - d)) {
            if (d == 0) break;
            --d;
            // advance value first, then position
            if (d == 0) {
                frame[d].v = 1; // leading value stays 1
                ++frame[d].j;
            } else if (frame[d].v + 1u < p) {
                ++frame[d].v;
            } else {
                frame[d].v = 1;
                ++frame[d].j;
            }
            continue;
        }
        std::uint32_t j = frame[d].j;
        std::uint8_t v = frame[d].v;
        pos[d] = j;
        val[d] = v;
        const std::uint8_t* col = syn.nchecks ? &syn.bytes[j * syn.nchecks] : nullptr;
        std::uint8_t* cur = &acc[(d + 1) * C];
        const std::uint8_t* prev = &acc[d * C];
        for (std::size_t x = 0; x < syn.nchecks; ++x)
            cur[x] = static_cast<std::uint8_t>((prev[x] + v * col[x]) % p);
        if (d + 1 == w) {
            ++tested;
            bool zero = true;
            for (std::size_t x = 0; x < syn.nchecks; ++x)
                if (cur[x]) {
                    zero = false;
                    break;
                }
            if (zero) {
                Word word;
                word.support.assign(pos.begin(), pos.end());
                word.values.assign(val.begin(), val.end());
                out.push_back(std::move(word));
            }
            if (d == 0) {
                ++frame[d].j; // leading value fixed at 1
            } else if (frame[d].v + 1u < p) {
                ++frame[d].v;
            } else {
                frame[d].v = 1;
                ++frame[d].j;
            }
        } else {
            ++d;
            frame[d] = {j + 1, 1};
        }
    }
    return tested;
}

} // namespace

std::vector<std::uint8_t> Word::dense(std::size_t length) const {
    std::vector<std::uint8_t> v(length, 0);
    for (std::size_t i = 0; i < support.size(); ++i) v[support[i]] = values[i];
    return v;
}

LinearCode code_from_matrix(const std::vector<std::vector<std::uint8_t>>& rows,
                            unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("code alphabet must be prime");
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("empty generator matrix");
    LinearCode c;
    c.p = p;
    c.length = rows[0].size();
    c.gen_rows = rows;
    for (auto& row : c.gen_rows) {
        if (row.size() != c.length)
            throw std::invalid_argument("ragged generator matrix");
        for (auto& x : row) x = static_cast<std::uint8_t>(x % p);
    }
    auto [basis, pivots] = rref_mod_p(c.gen_rows, p);
    c.basis = std::move(basis);
    c.pivots = std::move(pivots);
    c.k = c.basis.size();

    // dual basis: one vector per non-pivot column
    std::vector<char> is_pivot(c.length, 0);
    for (auto col : c.pivots) is_pivot[col] = 1;
    for (std::uint32_t f = 0; f < c.length; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint8_t> w(c.length, 0);
        w[f] = 1;
        for (std::size_t i = 0; i < c.k; ++i)
            w[c.pivots[i]] = mod_p(-static_cast<long>(c.basis[i][f]), p);
        c.dual.push_back(std::move(w));
    }
    return c;
}

LinearCode code_from_structure(const IncidenceStructure& is, unsigned p) {
    BlockMatrix m = incidence_matrix(is, MatrixOrdering::canonical);
    return code_from_matrix(m.rows, p);
}

bool code_contains(const LinearCode& c, const std::vector<std::uint8_t>& v) {
    if (v.size() != c.length) throw std::invalid_argument("length mismatch");
    for (const auto& w : c.dual) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < c.length; ++j) acc += v[j] % c.p * w[j];
        if (acc % c.p != 0) return false;
    }
    return true;
}

std::vector<Word> words_of_weight(const LinearCode& c, unsigned w,
                                  const EnumOptions& opt) {
    if (w == 0 || w > c.length) return {};
    std::uint64_t cand = candidates_at(c.length, w, c.p);
    if (cand > opt.budget)
        throw budget_error("weight-" + std::to_string(w) + " enumeration needs " +
                           std::to_string(cand) + " candidates, budget " +
                           std::to_string(opt.budget));
    Syndromes syn = Syndromes::build(c);
    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(opt.threads, c.length));
    if (nthreads == 1 || c.length < 2 * nthreads) {
        std::vector<Word> out;
        enumerate_exact_weight(c, syn, w, 0, static_cast<std::uint32_t>(c.length),
                               out);
        return out;
    }
    std::vector<std::vector<Word>> parts(nthreads);
    std::vector<std::thread> pool;
    const std::uint32_t n = static_cast<std::uint32_t>(c.length);
    for (unsigned tix = 0; tix < nthreads; ++tix) {
        std::uint32_t lo = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(n) * tix / nthreads);
        std::uint32_t hi = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(n) * (tix + 1) / nthreads);
        pool.emplace_back([&, lo, hi, tix] {
            enumerate_exact_weight(c, syn, w, lo, hi, parts[tix]);
        });
    }
    for (auto& th : pool) th.join();
    std::vector<Word> out;
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return out;
}

std::vector<Word> expand_scalars(const std::vector<Word>& reps, unsigned p) {
    std::vector<Word> out;
    out.reserve(reps.size() * (p - 1));
    for (const auto& rep : reps) {
        for (unsigned s = 1; s < p; ++s) {
            Word w = rep;
            if (s != 1)
                for (auto& v : w.values) v = static_cast<std::uint8_t>(v * s % p);
            out.push_back(std::move(w));
        }
    }
    return out;
}

MinWeightReport min_weight_sweep(const LinearCode& c, unsigned w_max,
                                 const EnumOptions& opt) {
    MinWeightReport rep;
    rep.method = "sweep";
    rep.w_max = w_max;
    std::uint64_t total = 0;
    for (unsigned w = 1; w <= std::min<std::size_t>(w_max, c.length); ++w) {
        std::uint64_t cand = candidates_at(c.length, w, c.p);
        if (total + cand > opt.budget) {
            rep.status = MwStatus::budget_exceeded;
            rep.tested = total;
            rep.note = "budget exceeded at weight " + std::to_string(w) +
                       "; no codeword of weight < " + std::to_string(w) +
                       " exists; consider the bz method";
            return rep;
        }
        total += cand;
        auto reps = words_of_weight(c, w, {opt.budget, opt.threads});
        rep.tested = total;
        if (!reps.empty()) {
            rep.status = MwStatus::found;
            rep.d = w;
            rep.complete = true;
            rep.words = expand_scalars(reps, c.p);
            return rep;
        }
    }
    rep.status = MwStatus::none_within_wmax;
    rep.note = "no codeword of weight <= " + std::to_string(w_max);
    return rep;
}

MinWeightReport min_distance_exhaustive(const LinearCode& c,
                                        std::uint64_t budget) {
    if (c.k == 0) throw std::domain_error("zero code has no minimum distance");
    std::uint64_t total = pow_sat(c.p, static_cast<unsigned>(c.k), budget);
    if (total > budget)
        throw budget_error("row space has more than " + std::to_string(budget) +
                           " codewords");
    MinWeightReport rep;
    rep.method = "exhaustive";
    rep.w_max = static_cast<unsigned>(c.length);
    rep.complete = true;
    rep.status = MwStatus::found;

    unsigned best = static_cast<unsigned>(c.length) + 1;
    std::vector<Word> found;

    if (c.p == 2) {
        const std::size_t W = (c.length + 63) / 64;
        std::vector<std::uint64_t> packed(c.k * W, 0);
        for (std::size_t r = 0; r < c.k; ++r)
            for (std::size_t j = 0; j < c.length; ++j)
                if (c.basis[r][j]) packed[r * W + j / 64] |= 1ull << (j % 64);
        std::vector<std::uint64_t> cur(W, 0);
        // Gray walk over all 2^k - 1 nonzero combinations
        for (std::uint64_t g = 1; g < (1ull << c.k); ++g) {
            unsigned bit = __builtin_ctzll(g);
            for (std::size_t x = 0; x < W; ++x) cur[x] ^= packed[bit * W + x];
            unsigned wt = 0;
            for (std::size_t x = 0; x < W; ++x)
                wt += static_cast<unsigned>(__builtin_popcountll(cur[x]));
            if (wt == 0) continue;
            if (wt < best) {
                best = wt;
                found.clear();
            }
            if (wt == best) {
                Word word;
                for (std::uint32_t j = 0; j < c.length; ++j)
                    if (cur[j / 64] >> (j % 64) & 1) {
                        word.support.push_back(j);
                        word.values.push_back(1);
                    }
                found.push_back(std::move(word));
            }
        }
        rep.tested = (1ull << c.k) - 1;
    } else {
        std::vector<std::uint8_t> msg(c.k, 0);
        std::vector<std::uint8_t> cur(c.length, 0);
        std::uint64_t steps = total - 1;
        for (std::uint64_t it = 0; it < steps; ++it) {
            // odometer increment, updating cur by the changed rows
            for (std::size_t i = 0; i < c.k; ++i) {
                for (std::size_t j = 0; j < c.length; ++j)
                    cur[j] = static_cast<std::uint8_t>((cur[j] + c.basis[i][j]) % c.p);
                if (msg[i] + 1u < c.p) {
                    ++msg[i];
                    break;
                }
                msg[i] = 0;
            }
            unsigned wt = 0;
            for (std::size_t j = 0; j < c.length; ++j)
                if (cur[j]) ++wt;
            if (wt == 0) continue;
            if (wt < best) {
                best = wt;
                found.clear();
            }
            if (wt == best) {
                Word word;
                for (std::uint32_t j = 0; j < c.length; ++j)
                    if (cur[j]) {
                        word.support.push_back(j);
                        word.values.push_back(cur[j]);
                    }
                found.push_back(std::move(word));
            }
        }
        rep.tested = steps;
    }
    rep.d = best;
    // deterministic order: by support then values
    std::sort(found.begin(), found.end(), [](const Word& a, const Word& b) {
        if (a.support != b.support) return a.support < b.support;
        return a.values < b.values;
    });
    rep.words = std::move(found);
    return rep;
}

BzResult min_distance_bz(const LinearCode& c) {
    if (c.k == 0) throw std::domain_error("zero code has no minimum distance");
    const unsigned p = c.p;
    const std::size_t n = c.length;
    const std::size_t k = c.k;

    // disjoint information sets: repeatedly eliminate, preferring columns not
    // used by earlier sets; record the rank deficiency of each set
    struct InfoSet {
        std::vector<std::vector<std::uint8_t>> g;
        unsigned deficiency = 0;
    };
    std::vector<InfoSet> sets;
    std::vector<char> used(n, 0);
    while (true) {
        std::vector<std::uint32_t> order;
        for (std::uint32_t j = 0; j < n; ++j)
            if (!used[j]) order.push_back(j);
        std::size_t fresh_cols = order.size();
        if (fresh_cols == 0) break;
        for (std::uint32_t j = 0; j < n; ++j)
            if (used[j]) order.push_back(j);

        auto g = c.basis;
        auto inv_mod = [&](unsigned a) {
            unsigned r = 1, b = a, e = p - 2;
            while (e > 0) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            return r;
        };
        std::size_t r = 0;
        std::size_t fresh_pivots = 0;
        std::vector<std::uint32_t> fresh_pivot_cols;
        for (std::size_t oi = 0; oi < order.size() && r < k; ++oi) {
            std::uint32_t col = order[oi];
            std::size_t sel = r;
            while (sel < k && g[sel][col] == 0) ++sel;
            if (sel == k) continue;
            std::swap(g[r], g[sel]);
            if (g[r][col] != 1) {
                unsigned s = inv_mod(g[r][col]);
                for (std::size_t j = 0; j < n; ++j)
                    g[r][j] = static_cast<std::uint8_t>(g[r][j] * s % p);
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (i == r || g[i][col] == 0) continue;
                unsigned f = g[i][col];
                for (std::size_t j = 0; j < n; ++j)
                    g[i][j] = static_cast<std::uint8_t>((g[i][j] + (p - f) * g[r][j]) % p);
            }
            if (oi < fresh_cols) {
                ++fresh_pivots;
                fresh_pivot_cols.push_back(col);
            }
            ++r;
        }
        if (fresh_pivots == 0) break;
        for (auto col : fresh_pivot_cols) used[col] = 1;
        InfoSet is;
        is.g = std::move(g);
        is.deficiency = static_cast<unsigned>(k - fresh_pivots);
        sets.push_back(std::move(is));
    }

    BzResult res;
    unsigned best = static_cast<unsigned>(n) + 1;
    Word best_word;
    std::uint64_t tested = 0;

    std::vector<std::uint32_t> comb;
    std::vector<std::uint8_t> cur(n);
    auto consider = [&](const std::vector<std::vector<std::uint8_t>>& g,
                        const std::vector<std::uint32_t>& rows,
                        const std::vector<std::uint8_t>& coef) {
        std::fill(cur.begin(), cur.end(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = g[rows[i]];
            unsigned v = coef[i];
            for (std::size_t j = 0; j < n; ++j)
                cur[j] = static_cast<std::uint8_t>((cur[j] + v * row[j]) % p);
        }
        unsigned wt = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (cur[j]) ++wt;
        ++tested;
        if (wt != 0 && wt < best) {
            best = wt;
            best_word.support.clear();
            best_word.values.clear();
            for (std::uint32_t j = 0; j < n; ++j)
                if (cur[j]) {
                    best_word.support.push_back(j);
                    best_word.values.push_back(cur[j]);
                }
        }
    };

    for (unsigned w = 1; w <= k; ++w) {
        for (const auto& is : sets) {
            // all row subsets of size w with normalized coefficient patterns
            comb.assign(w, 0);
            for (unsigned i = 0; i < w; ++i) comb[i] = i;
            while (true) {
                std::vector<std::uint8_t> coef(w, 1);
                while (true) {
                    consider(is.g, comb, coef);
                    // odometer over coef[1..w-1] in 1..p-1
                    std::size_t pos = w;
                    while (pos-- > 1) {
                        if (coef[pos] + 1u < p) {
                            ++coef[pos];
                            break;
                        }
                        coef[pos] = 1;
                    }
                    if (pos == 0 || w == 1) break;
                }
                // next combination
                long i = static_cast<long>(w) - 1;
                while (i >= 0 && comb[i] == k - w + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (std::size_t j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        res.rounds = w;
        std::uint64_t lower = 0;
        for (const auto& is : sets)
            lower += is.deficiency < w + 1 ? (w + 1 - is.deficiency) : 0;
        if (lower >= best) break;
    }

    res.d = best;
    res.witness = std::move(best_word);
    res.tested = tested;
    return res;
}

Classification classify_vs_supports(
    const std::vector<Word>& words,
    const std::vector<std::vector<std::uint32_t>>& supports) {
    std::set<std::vector<std::uint32_t>> allowed(supports.begin(), supports.end());
    Classification cls;
    cls.all_line_multiples = true;
    for (const auto& w : words) {
        bool constant = true;
        for (auto v : w.values)
            if (v != w.values[0]) {
                constant = false;
                break;
            }
        if (!constant || !allowed.count(w.support)) {
            cls.all_line_multiples = false;
            cls.exceptions.push_back(w);
        }
    }
    return cls;
}

Classification classify_min_words(const MinWeightReport& rep,
                                  const IncidenceStructure& is) {
    if (rep.status != MwStatus::found || !rep.complete)
        throw std::invalid_argument("classification needs a complete minimum-weight list");
    return classify_vs_supports(rep.words, is.lines);
}

std::vector<std::uint8_t> cone_difference_vector(const ProjectiveSpace& outer,
                                            const Subspace& U, const Subspace& T,
                                            const Coords& r) {
    const Field& F = outer.field();
    if (U.ambient_dim() != outer.dim() || T.ambient_dim() != outer.dim())
        throw std::invalid_argument("subspaces must live in the outer space");
    if (U.proj_dim() != T.proj_dim())
        throw std::invalid_argument("subspaces must have equal dimension");
    for (const auto& row : U.basis())
        if (!at_infinity(row))
            throw std::invalid_argument("subspace not contained in the hyperplane at infinity");
    for (const auto& row : T.basis())
        if (!at_infinity(row))
            throw std::invalid_argument("subspace not contained in the hyperplane at infinity");
    if (at_infinity(r))
        throw std::invalid_argument("the cone point must be affine");

    const unsigned p = F.p();
    std::vector<std::uint8_t> v(outer.size(), 0);
    Subspace a = span_of(F, {U}, {r});
    Subspace b = span_of(F, {T}, {r});
    for (const auto& pt : a.points(F)) v[outer.index_of(pt)] = 1;
    for (const auto& pt : b.points(F)) {
        auto idx = outer.index_of(pt);
        v[idx] = mod_p(static_cast<long>(v[idx]) - 1, p);
    }
    return v;
}

namespace {

SpaceCodeCheck check_space_code(const IncMatrix& mat, unsigned p,
                                unsigned expected, bool gap_check,
                                const EnumOptions& opt) {
    SpaceCodeCheck chk;
    chk.ran = true;
    chk.expected_d = expected;
    LinearCode code = code_from_matrix(mat.rows, p);
    MinWeightReport rep = min_weight_sweep(code, expected, opt);
    if (rep.status != MwStatus::found) {
        chk.detail = "no codeword of weight <= " + std::to_string(expected);
        return chk;
    }
    chk.got_d = rep.d;
    chk.num_min_words = rep.words.size();
    std::vector<std::vector<std::uint32_t>> supports;
    for (const auto& row : mat.rows) {
        std::vector<std::uint32_t> s;
        for (std::uint32_t j = 0; j < row.size(); ++j)
            if (row[j]) s.push_back(j);
        supports.push_back(std::move(s));
    }
    Classification cls = classify_vs_supports(rep.words, supports);
    chk.all_flat_multiples = cls.all_line_multiples;
    bool count_ok = rep.words.size() == (p - 1) * mat.rows.size();
    chk.ok = rep.d == expected && cls.all_line_multiples && count_ok;
    if (!chk.ok)
        chk.detail = "d=" + std::to_string(rep.d) + " words=" +
                     std::to_string(rep.words.size()) + " classified=" +
                     (cls.all_line_multiples ? "yes" : "no");
    if (gap_check) {
        chk.gap_checked = true;
        auto gap_words = expand_scalars(words_of_weight(code, expected + 1, opt), p);
        chk.gap_ok = gap_words.empty();
        if (!chk.gap_ok)
            chk.detail += " gap violated: " + std::to_string(gap_words.size()) +
                          " words of weight " + std::to_string(expected + 1);
    }
    return chk;
}

} // namespace

SpaceMinimaReport verify_pg_ag_minima(const Field& F, unsigned n, unsigned t,
                                      const EnumOptions& opt) {
    SpaceMinimaReport rep;
    ProjectiveSpace S(F, n);
    const std::uint64_t q = F.q();
    std::uint64_t qt = 1;
    for (unsigned i = 0; i < t; ++i) qt *= q;
    std::uint64_t pg_expected = (qt * q - 1) / (q - 1); // (q^{t+1}-1)/(q-1)

    rep.pg = check_space_code(incidence_matrix_pg(S, t), F.p(),
                              static_cast<unsigned>(pg_expected), false, opt);
    if (t >= 1 && t <= n - 1) {
        rep.ag = check_space_code(incidence_matrix_ag(S, t), F.p(),
                                  static_cast<unsigned>(qt), true, opt);
    }
    return rep;
}

} // namespace gqlrc
