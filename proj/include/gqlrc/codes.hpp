#pragma once

#include "gqlrc/gq.hpp"
#include "gqlrc/pgeom.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqlrc {

// Raised when an enumeration would exceed its configured candidate budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row space over F_p of a set of generator rows, with the canonical RREF
// basis and a basis of the orthogonal complement.
struct LinearCode {
    unsigned p = 2;
    std::size_t length = 0;
    std::vector<std::vector<std::uint8_t>> gen_rows;
    std::vector<std::vector<std::uint8_t>> basis; // RREF, k rows
    std::vector<std::vector<std::uint8_t>> dual;  // length-k rows
    std::size_t k = 0;
    std::vector<std::uint32_t> pivots;
};

LinearCode code_from_matrix(const std::vector<std::vector<std::uint8_t>>& rows,
                            unsigned p);
LinearCode code_from_structure(const IncidenceStructure& is, unsigned p);

// Membership via the parity checks (dot products with the dual basis).
bool code_contains(const LinearCode& c, const std::vector<std::uint8_t>& v);

// Sparse codeword: sorted support with the parallel nonzero values.
struct Word {
    std::vector<std::uint32_t> support;
    std::vector<std::uint8_t> values;
    unsigned weight() const { return static_cast<unsigned>(support.size()); }
    std::vector<std::uint8_t> dense(std::size_t length) const;
};

enum class MwStatus { found, none_within_wmax, budget_exceeded };

struct MinWeightReport {
    MwStatus status = MwStatus::none_within_wmax;
    unsigned d = 0;          // valid when status == found
    unsigned w_max = 0;      // sweep bound that was used
    std::string method;
    bool complete = false;   // the word list at weight d is exhaustive
    std::vector<Word> words; // all words of weight d, scalar multiples included
    bool all_line_multiples = false;
    std::uint64_t tested = 0;
    std::string note;
};

struct EnumOptions {
    std::uint64_t budget = 1'000'000'000; // candidate vectors
    unsigned threads = 1;
};

// All codewords of weight exactly w, one representative per scalar class
// (first nonzero value 1), in deterministic support order.
std::vector<Word> words_of_weight(const LinearCode& c, unsigned w,
                                  const EnumOptions& opt = {});

// Expand scalar classes: every nonzero multiple of every representative.
std::vector<Word> expand_scalars(const std::vector<Word>& reps, unsigned p);

// Enumerate supports of size 1..w_max against the parity checks; stops at the
// first weight with a hit and reports the complete word list at that weight.
MinWeightReport min_weight_sweep(const LinearCode& c, unsigned w_max,
                                 const EnumOptions& opt = {});

// Walk the whole row space (p^k codewords). Throws budget_error when p^k
// exceeds the budget and std::domain_error for the zero code.
MinWeightReport min_distance_exhaustive(const LinearCode& c,
                                        std::uint64_t budget = 1ull << 26);

// Exact minimum distance by enumerating low-weight information words over a
// chain of disjoint information sets until the lower bound meets the best
// word found.
struct BzResult {
    unsigned d = 0;
    Word witness;
    std::uint64_t tested = 0;
    unsigned rounds = 0;
};
BzResult min_distance_bz(const LinearCode& c);

// Is every word a scalar multiple of a line's incidence vector?
struct Classification {
    bool all_line_multiples = false;
    std::vector<Word> exceptions;
};
Classification classify_min_words(const MinWeightReport& rep,
                                  const IncidenceStructure& is);
Classification classify_vs_supports(
    const std::vector<Word>& words,
    const std::vector<std::vector<std::uint32_t>>& supports);

// Difference of the incidence vectors of span(U,r) and span(T,r), indexed by
// the points of the outer space; lies in the dual of the code of points
// versus n-spaces whenever U and T are (m+n-1)-subspaces of the hyperplane
// at infinity and r is an affine point.
std::vector<std::uint8_t> cone_difference_vector(const ProjectiveSpace& outer,
                                            const Subspace& U, const Subspace& T,
                                            const Coords& r);

// Minimum-weight checks of the point/t-space codes of PG(n,q) and AG(n,q)
// against the closed forms, with classification of the minimum words and the
// weight-gap check for the affine code.
struct SpaceCodeCheck {
    bool ran = false;
    bool ok = false;
    unsigned expected_d = 0;
    unsigned got_d = 0;
    std::size_t num_min_words = 0;
    bool all_flat_multiples = false;
    bool gap_checked = false; // affine only: no words of weight q^t + 1
    bool gap_ok = false;
    std::string detail;
};
struct SpaceMinimaReport {
    SpaceCodeCheck pg;
    SpaceCodeCheck ag; // ran only when 1 <= t <= n-1
    bool all_ok() const { return pg.ok && (!ag.ran || (ag.ok && ag.gap_ok)); }
};
SpaceMinimaReport verify_pg_ag_minima(const Field& F, unsigned n, unsigned t,
                                      const EnumOptions& opt = {});

} // namespace gqlrc
