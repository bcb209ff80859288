#pragma once

#include "gqlrc/gf.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gqlrc {

// Homogeneous coordinates, length N+1 for PG(N,q).
using Coords = std::vector<felem>;

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Canonical representative: first nonzero coordinate scaled to 1.
// Throws on the zero vector.
Coords normalize_point(const Field& F, Coords v);
bool is_zero_vec(const Coords& v);

// Row-reduce over F_q; returns the nonzero rows in reduced row echelon form
// (unique for a given row space) and the pivot columns.
std::pair<std::vector<Coords>, std::vector<std::uint32_t>> rref(
    const Field& F, std::vector<Coords> rows);

// A projective subspace given by its canonical RREF basis. Two subspaces are
// equal iff their basis matrices are equal. Row count k gives proj_dim = k-1;
// zero rows are never stored, so the empty subspace has proj_dim -1.
class Subspace {
public:
    Subspace() = default;

    static Subspace from_rows(const Field& F, unsigned ambient_dim,
                              std::vector<Coords> rows);

    unsigned ambient_dim() const { return ambient_; }
    int proj_dim() const { return static_cast<int>(rows_.size()) - 1; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Coords>& basis() const { return rows_; }

    bool contains_point(const Field& F, const Coords& pt) const;
    bool contains(const Field& F, const Subspace& other) const;

    // All (q^k - 1)/(q - 1) normalized points, sorted by coordinate list.
    std::vector<Coords> points(const Field& F) const;

    // Flattened canonical form; usable as a hash/dedup key.
    std::vector<std::uint32_t> key() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;

private:
    unsigned ambient_ = 0;
    std::vector<Coords> rows_;
};

// Smallest subspace containing all generators (points and/or subspaces).
// Throws on an empty generator list.
Subspace span_points(const Field& F, unsigned ambient_dim,
                     const std::vector<Coords>& pts);
Subspace span_of(const Field& F, const std::vector<Subspace>& parts,
                 const std::vector<Coords>& pts);

Subspace intersection(const Field& F, const Subspace& a, const Subspace& b);

// PG(N, q) with its full point list in lexicographic coordinate order.
class ProjectiveSpace {
public:
    ProjectiveSpace(Field f, unsigned N);

    const Field& field() const { return F_; }
    unsigned dim() const { return N_; }
    std::size_t size() const { return pts_.size(); }
    const Coords& point(std::uint32_t i) const { return pts_[i]; }
    const std::vector<Coords>& points() const { return pts_; }

    std::uint32_t index_of(const Coords& normalized) const; // throws if absent
    std::optional<std::uint32_t> find(const Coords& pt) const;

private:
    Field F_;
    unsigned N_;
    std::vector<Coords> pts_;
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> idx_;
};

// All t-dimensional subspaces, deterministic order.
std::vector<Subspace> subspaces_of_dim(const ProjectiveSpace& S, unsigned t);

// --- hyperplane-at-infinity embedding -------------------------------------
// The inner space PG(N,q) embeds into PG(N+1,q) by appending a zero
// coordinate; H_infinity is always {last coordinate = 0}, and the affine
// points of the outer space are those off H_infinity.

struct HyperplaneEmbedding {
    ProjectiveSpace outer;
    Subspace h_infinity;
};
HyperplaneEmbedding embed_in_hyperplane(const ProjectiveSpace& inner);

Coords lift_point(const Coords& inner_pt);
Subspace lift_subspace(const Field& F, const Subspace& s);
bool at_infinity(const Coords& outer_pt);
std::vector<std::uint32_t> affine_point_ids(const ProjectiveSpace& outer);

// --- classical varieties (fixed coordinate conventions) -------------------

// zeros of X0*X2 = X1^2 in PG(2,q): the q+1 points (1,t,t^2) and (0,0,1)
std::vector<Coords> conic_points(const Field& F);
// common point of all conic tangents, q even
Coords conic_nucleus(const Field& F);
// conic plus nucleus, q even: a (q+2)-arc
std::vector<Coords> hyperoval_points(const Field& F);
// smallest (a,b) with x^2+ax+b irreducible over F_q
std::pair<felem, felem> irreducible_quadratic(const Field& F);
// zeros of X0*X1 + f(X2,X3) in PG(3,q), f irreducible quadratic: q^2+1 points
std::vector<Coords> elliptic_quadric_points(const Field& F);
// zeros of X0^2 + X1*X2 + X3*X4 in PG(4,q)
std::vector<Coords> parabolic_quadric_points(const Field& F);
// zeros of f(X0,X1) + X2*X3 + X4*X5 in PG(5,q), f irreducible quadratic
std::vector<Coords> elliptic_quadric5_points(const Field& F);
// zeros of sum X_i^(q0+1) in PG(N, q0^2), N in {3,4}; requires h even
std::vector<Coords> hermitian_points(const Field& F, unsigned N);
// totally isotropic lines of X0Y1 - X1Y0 + X2Y3 - X3Y2 in PG(3,q)
std::vector<Subspace> symplectic_lines(const Field& F);

// no three of the given points collinear
bool is_arc(const Field& F, unsigned ambient_dim, const std::vector<Coords>& pts,
            std::vector<std::size_t>* witness = nullptr);

// all lines fully contained in the given point set
std::vector<Subspace> lines_on_set(const ProjectiveSpace& S,
                                   const std::vector<Coords>& pts);

// --- field reduction -------------------------------------------------------
// Reinterpret PG(k-1, q^e) objects over the subfield F_q: a point becomes an
// (e-1)-dimensional subspace of PG(ke-1, q), a (d-1)-subspace becomes a
// (de-1)-subspace. Basis of F_{q^e} over F_q is {1, X, ..., X^{e-1}} with X
// the polynomial generator of the big field; F_q sits inside via the
// smallest root of the small field's modulus.
class FieldReduction {
public:
    FieldReduction(Field big, Field small);

    const Field& big() const { return big_; }
    const Field& small() const { return small_; }
    unsigned e() const { return e_; }

    felem embed(felem small_elt) const;            // F_q -> F_{q^e}
    std::vector<felem> expand(felem big_elt) const; // coords over F_q, length e

    Subspace reduce_point(const Coords& big_pt) const;
    Subspace reduce_subspace(const Subspace& s) const;

private:
    Field big_, small_;
    unsigned e_;
    std::vector<felem> embed_pow_; // images of g^0..g^(h-1)
    std::vector<std::vector<std::uint8_t>> inv_; // H x H inverse over F_p
};

// --- incidence matrices of points versus t-spaces --------------------------

struct IncMatrix {
    std::size_t cols = 0;
    std::vector<std::vector<std::uint8_t>> rows; // 0/1 entries
    std::vector<Subspace> row_spaces;            // parallel to rows
    std::vector<std::uint32_t> col_point_ids;    // indices into the space
};

// rows = t-spaces of PG(n,q), columns = all points
IncMatrix incidence_matrix_pg(const ProjectiveSpace& S, unsigned t);
// rows = t-spaces not inside H_infinity, columns = affine points
IncMatrix incidence_matrix_ag(const ProjectiveSpace& S, unsigned t);

} // namespace gqlrc
