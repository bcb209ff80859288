#pragma once

#include "gqlrc/egg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gqlrc {

struct GqParams {
    long s = 0;
    long t = 0;
    long alpha = 0;
    bool operator==(const GqParams& o) const {
        return s == o.s && t == o.t && alpha == o.alpha;
    }
};

// Point-line incidence structure with typed, indexed points and lines.
// Lines store sorted point-index lists.
struct IncidenceStructure {
    std::string kind;
    std::vector<std::string> point_types;
    std::vector<std::string> line_types;
    std::vector<std::vector<std::uint32_t>> lines;
    std::optional<GqParams> params;

    std::size_t num_points() const { return point_types.size(); }
    std::size_t num_lines() const { return lines.size(); }
    std::vector<std::vector<std::uint32_t>> lines_through_points() const;
};

struct PgVerdict {
    bool ok = false;
    GqParams params;
    std::string witness; // first violated axiom, empty when ok
};

// Exhaustive check of the four partial-geometry axioms; returns the unique
// (s,t,alpha) or the first violation with a witness.
PgVerdict verify_partial_geometry(const IncidenceStructure& is);

// Translation generalised quadrangle from a verified egg: embed the egg's
// ambient space as the hyperplane at infinity of PG(2n+m,q) and take the
// affine points, the (n+m)-subspaces through a tangent space, and the extra
// point; lines are the n-subspaces through an egg element plus the elements
// themselves. Point order: affine, then subspace, then infinity; line order:
// affine spans, then egg elements (the block order of the incidence matrix).
IncidenceStructure build_te(const Egg& egg);

// GQ of order (q-1, q+1) from a hyperoval in PG(2,q), q even: affine points
// of PG(3,q) and the lines meeting the hyperplane at infinity in a point of
// the hyperoval.
IncidenceStructure build_t2star(const Field& F, const std::vector<Coords>& hyperoval);
IncidenceStructure build_t2star(const Field& F); // conic plus nucleus

enum class GqKind { W3, Q4, Q5, H3, H4 };
const char* gq_kind_name(GqKind k);

// Classical generalised quadrangles from forms:
//   W3: all points of PG(3,q), totally isotropic lines     -> (q, q)
//   Q4: X0^2 + X1X2 + X3X4 in PG(4,q)                      -> (q, q)
//   Q5: f(X0,X1) + X2X3 + X4X5 in PG(5,q)                  -> (q, q^2)
//   H3: sum X_i^(q0+1) in PG(3, q0^2)                      -> (q0^2, q0)
//   H4: sum X_i^(q0+1) in PG(4, q0^2)                      -> (q0^2, q0^3)
IncidenceStructure build_classical(GqKind kind, const Field& F);

enum class MatrixOrdering { canonical, te_block };

// Incidence matrix with rows indexed by lines and columns by points. With
// te_block ordering the matrix is [[A,B,0],[O,D,1]] and the block boundaries
// are recorded.
struct BlockMatrix {
    std::vector<std::vector<std::uint8_t>> rows; // L x P
    bool has_blocks = false;
    std::size_t rows_a = 0;  // number of lines of the first type
    std::size_t cols_i = 0;  // number of points of the first type
    std::size_t cols_ii = 0; // number of points of the second type

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return rows.empty() ? 0 : rows[0].size(); }
};

BlockMatrix incidence_matrix(const IncidenceStructure& is, MatrixOrdering ordering);

// Validates the block shape: row weights of A and D, weight-1 rows of B,
// pairwise disjoint supports in D, zero block O and the 0/1 last column.
// Returns an error description or nullopt when everything holds. s is the
// line size minus one (each A/D row has weight s).
std::optional<std::string> check_te_blocks(const BlockMatrix& m, long s);

} // namespace gqlrc
