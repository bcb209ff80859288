#include "gqlrc/gq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gqlrc {

std::vector<std::vector<std::uint32_t>> IncidenceStructure::lines_through_points()
    const {
    std::vector<std::vector<std::uint32_t>> through(num_points());
    for (std::uint32_t l = 0; l < lines.size(); ++l)
        for (std::uint32_t p : lines[l]) through[p].push_back(l);
    return through;
}

PgVerdict verify_partial_geometry(const IncidenceStructure& is) {
    PgVerdict v;
    const std::size_t P = is.num_points();
    const std::size_t L = is.num_lines();
    if (P == 0 || L == 0) {
        v.witness = "empty structure";
        return v;
    }

    // axiom 1 via pairs of collinear points: each pair on at most one line
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pair_line;
    for (std::uint32_t l = 0; l < L; ++l) {
        const auto& pts = is.lines[l];
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                auto key = std::make_pair(pts[a], pts[b]);
                auto [it, fresh] = pair_line.emplace(key, l);
                if (!fresh) {
                    v.witness = "points " + std::to_string(pts[a]) + "," +
                                std::to_string(pts[b]) + " on lines " +
                                std::to_string(it->second) + " and " + std::to_string(l);
                    return v;
                }
            }
    }

    // axiom 2: constant line size
    std::size_t line_size = is.lines[0].size();
    for (std::uint32_t l = 0; l < L; ++l)
        if (is.lines[l].size() != line_size) {
            v.witness = "line " + std::to_string(l) + " has " +
                        std::to_string(is.lines[l].size()) + " points, expected " +
                        std::to_string(line_size);
            return v;
        }

    // axiom 3: constant point degree
    auto through = is.lines_through_points();
    std::size_t degree = through[0].size();
    for (std::uint32_t p = 0; p < P; ++p)
        if (through[p].size() != degree) {
            v.witness = "point " + std::to_string(p) + " lies on " +
                        std::to_string(through[p].size()) + " lines, expected " +
                        std::to_string(degree);
            return v;
        }

    // axiom 4: constant number of transversals from an external point
    long alpha = -1;
    std::vector<char> on_line(P, 0);
    for (std::uint32_t l = 0; l < L; ++l) {
        for (std::uint32_t p : is.lines[l]) on_line[p] = 1;
        for (std::uint32_t p = 0; p < P; ++p) {
            if (on_line[p]) continue;
            long count = 0;
            for (std::uint32_t m : through[p]) {
                // lines are sorted, intersect by merge
                const auto& mp = is.lines[m];
                const auto& lp = is.lines[l];
                std::size_t i = 0, j = 0;
                bool meets = false;
                while (i < mp.size() && j < lp.size()) {
                    if (mp[i] == lp[j]) {
                        meets = true;
                        break;
                    }
                    if (mp[i] < lp[j])
                        ++i;
                    else
                        ++j;
                }
                if (meets) ++count;
            }
            if (alpha < 0) alpha = count;
            if (count != alpha) {
                v.witness = "point " + std::to_string(p) + " sees line " +
                            std::to_string(l) + " via " + std::to_string(count) +
                            " transversals, expected " + std::to_string(alpha);
                return v;
            }
        }
        for (std::uint32_t p : is.lines[l]) on_line[p] = 0;
    }

    v.ok = true;
    v.params = {static_cast<long>(line_size) - 1, static_cast<long>(degree) - 1,
                alpha};
    return v;
}

IncidenceStructure build_te(const Egg& egg) {
    EggReport rep = verify_egg(egg);
    if (!rep.pass)
        throw std::invalid_argument("egg fails verification: " + rep.summary());

    const Field& F = egg.field;
    const unsigned inner_dim = egg.ambient_dim();
    ProjectiveSpace outer(F, inner_dim + 1);

    std::vector<Subspace> elements, tangents;
    for (const auto& e : egg.elements) elements.push_back(lift_subspace(F, e));
    for (const auto& t : egg.tangents) tangents.push_back(lift_subspace(F, t));

    const auto affine = affine_point_ids(outer);
    std::unordered_map<std::uint32_t, std::uint32_t> affine_pos;
    for (std::uint32_t i = 0; i < affine.size(); ++i) affine_pos[affine[i]] = i;

    IncidenceStructure is;
    is.kind = "te(q=" + std::to_string(F.q()) + ",n=" + std::to_string(egg.n) +
              ",m=" + std::to_string(egg.m) + ")";

    // points: affine first, then the tangent-space covers, then infinity
    const std::uint32_t num_affine = static_cast<std::uint32_t>(affine.size());
    std::vector<std::vector<std::uint32_t>> cover_ids_per_elt(elements.size());
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> cover_id;
    std::uint32_t next_id = num_affine;
    for (std::size_t j = 0; j < tangents.size(); ++j) {
        for (std::uint32_t a : affine) {
            Subspace cover = span_of(F, {tangents[j]}, {outer.point(a)});
            auto key = cover.key();
            auto [it, fresh] = cover_id.emplace(std::move(key), next_id);
            if (fresh) {
                cover_ids_per_elt[j].push_back(next_id);
                ++next_id;
            }
        }
    }
    const std::uint32_t infinity_id = next_id;

    is.point_types.assign(num_affine, "affine");
    for (std::size_t j = 0; j < elements.size(); ++j)
        for (std::size_t c = 0; c < cover_ids_per_elt[j].size(); ++c)
            is.point_types.push_back("subspace");
    is.point_types.push_back("infinity");

    // lines of the first type: n-subspaces meeting the hyperplane in an element
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen_line;
    for (std::size_t j = 0; j < elements.size(); ++j) {
        for (std::uint32_t a : affine) {
            Subspace line = span_of(F, {elements[j]}, {outer.point(a)});
            if (!seen_line.insert(line.key()).second) continue;
            std::vector<std::uint32_t> pts;
            Coords rep;
            for (const auto& pt : line.points(F)) {
                if (at_infinity(pt)) continue;
                if (rep.empty()) rep = pt;
                pts.push_back(affine_pos.at(outer.index_of(pt)));
            }
            // the unique second-type point containing this line
            Subspace cover = span_of(F, {tangents[j]}, {rep});
            pts.push_back(cover_id.at(cover.key()));
            std::sort(pts.begin(), pts.end());
            is.lines.push_back(std::move(pts));
            is.line_types.push_back("affine");
        }
    }
    // lines of the second type: the egg elements
    for (std::size_t j = 0; j < elements.size(); ++j) {
        std::vector<std::uint32_t> pts = cover_ids_per_elt[j];
        pts.push_back(infinity_id);
        std::sort(pts.begin(), pts.end());
        is.lines.push_back(std::move(pts));
        is.line_types.push_back("egg");
    }

    PgVerdict v = verify_partial_geometry(is);
    if (!v.ok) throw std::logic_error("constructed structure violates GQ axioms: " + v.witness);
    std::uint64_t qn = 1, qm = 1;
    for (unsigned i = 0; i < egg.n; ++i) qn *= F.q();
    for (unsigned i = 0; i < egg.m; ++i) qm *= F.q();
    if (v.params.s != static_cast<long>(qn) || v.params.t != static_cast<long>(qm) ||
        v.params.alpha != 1)
        throw std::logic_error("unexpected parameters for translation GQ");
    is.params = v.params;
    return is;
}

IncidenceStructure build_t2star(const Field& F, const std::vector<Coords>& hyperoval) {
    if (F.p() != 2)
        throw std::invalid_argument("T2*(O) requires q even");
    if (hyperoval.empty() || hyperoval[0].size() != 3)
        throw std::invalid_argument("hyperoval must consist of points of PG(2,q)");
    if (hyperoval.size() != F.q() + 2)
        throw std::invalid_argument("hyperoval must have q+2 points");
    if (!is_arc(F, 2, hyperoval, nullptr))
        throw std::invalid_argument("input has three collinear points");

    ProjectiveSpace outer(F, 3);
    const auto affine = affine_point_ids(outer);
    std::unordered_map<std::uint32_t, std::uint32_t> affine_pos;
    for (std::uint32_t i = 0; i < affine.size(); ++i) affine_pos[affine[i]] = i;

    IncidenceStructure is;
    is.kind = "t2star(q=" + std::to_string(F.q()) + ")";
    is.point_types.assign(affine.size(), "affine");

    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    for (const auto& O : hyperoval) {
        Coords lifted = lift_point(O);
        for (std::uint32_t a : affine) {
            Subspace line = span_of(F, {}, {lifted, outer.point(a)});
            if (!seen.insert(line.key()).second) continue;
            std::vector<std::uint32_t> pts;
            for (const auto& pt : line.points(F)) {
                if (at_infinity(pt)) continue;
                pts.push_back(affine_pos.at(outer.index_of(pt)));
            }
            std::sort(pts.begin(), pts.end());
            is.lines.push_back(std::move(pts));
            is.line_types.push_back("affine");
        }
    }

    PgVerdict v = verify_partial_geometry(is);
    if (!v.ok) throw std::logic_error("constructed structure violates GQ axioms: " + v.witness);
    is.params = v.params;
    return is;
}

IncidenceStructure build_t2star(const Field& F) {
    return build_t2star(F, hyperoval_points(F));
}

const char* gq_kind_name(GqKind k) {
    switch (k) {
        case GqKind::W3: return "w3";
        case GqKind::Q4: return "q4";
        case GqKind::Q5: return "q5";
        case GqKind::H3: return "h3";
        case GqKind::H4: return "h4";
    }
    return "?";
}

IncidenceStructure build_classical(GqKind kind, const Field& F) {
    IncidenceStructure is;
    std::vector<Coords> pts;
    std::vector<Subspace> lines;
    unsigned ambient = 0;

    switch (kind) {
        case GqKind::W3: {
            ambient = 3;
            ProjectiveSpace S(F, ambient);
            pts = S.points();
            lines = symplectic_lines(F);
            break;
        }
        case GqKind::Q4: {
            ambient = 4;
            ProjectiveSpace S(F, ambient);
            pts = parabolic_quadric_points(F);
            lines = lines_on_set(S, pts);
            break;
        }
        case GqKind::Q5: {
            ambient = 5;
            ProjectiveSpace S(F, ambient);
            pts = elliptic_quadric5_points(F);
            lines = lines_on_set(S, pts);
            break;
        }
        case GqKind::H3:
        case GqKind::H4: {
            ambient = kind == GqKind::H3 ? 3 : 4;
            ProjectiveSpace S(F, ambient);
            pts = hermitian_points(F, ambient);
            lines = lines_on_set(S, pts);
            break;
        }
    }

    is.kind = std::string(gq_kind_name(kind)) + "(q=" + std::to_string(F.q()) + ")";
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> pt_id;
    for (std::uint32_t i = 0; i < pts.size(); ++i) pt_id.emplace(pts[i], i);
    is.point_types.assign(pts.size(), "point");
    for (const auto& l : lines) {
        std::vector<std::uint32_t> ids;
        for (const auto& pt : l.points(F)) ids.push_back(pt_id.at(pt));
        std::sort(ids.begin(), ids.end());
        is.lines.push_back(std::move(ids));
        is.line_types.push_back("line");
    }

    PgVerdict v = verify_partial_geometry(is);
    if (!v.ok)
        throw std::logic_error("classical construction violates GQ axioms: " + v.witness);
    is.params = v.params;
    return is;
}

BlockMatrix incidence_matrix(const IncidenceStructure& is, MatrixOrdering ordering) {
    BlockMatrix m;
    const std::size_t P = is.num_points();
    m.rows.reserve(is.num_lines());
    for (const auto& line : is.lines) {
        std::vector<std::uint8_t> row(P, 0);
        for (std::uint32_t p : line) row[p] = 1;
        m.rows.push_back(std::move(row));
    }
    if (ordering == MatrixOrdering::canonical) return m;

    // block ordering: verify that the structure was built with the
    // affine/subspace/infinity and affine/egg orderings
    std::size_t cols_i = 0, cols_ii = 0, rows_a = 0;
    std::size_t stage = 0;
    for (const auto& t : is.point_types) {
        if (t == "affine" && stage == 0) {
            ++cols_i;
        } else if (t == "subspace" && stage <= 1) {
            stage = 1;
            ++cols_ii;
        } else if (t == "infinity" && stage <= 2) {
            stage = 2;
        } else {
            throw std::invalid_argument(
                "block ordering requires a structure built from an egg");
        }
    }
    if (cols_i + cols_ii + 1 != P)
        throw std::invalid_argument("block ordering requires a structure built from an egg");
    bool in_b = false;
    for (const auto& t : is.line_types) {
        if (t == "affine" && !in_b) {
            ++rows_a;
        } else if (t == "egg") {
            in_b = true;
        } else {
            throw std::invalid_argument(
                "block ordering requires a structure built from an egg");
        }
    }
    m.has_blocks = true;
    m.rows_a = rows_a;
    m.cols_i = cols_i;
    m.cols_ii = cols_ii;
    return m;
}

std::optional<std::string> check_te_blocks(const BlockMatrix& m, long s) {
    if (!m.has_blocks) return "matrix has no block boundaries";
    const std::size_t P = m.num_cols();
    const std::size_t last = P - 1;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        const auto& row = m.rows[r];
        std::size_t wa = 0, wb = 0;
        for (std::size_t c = 0; c < m.cols_i; ++c) wa += row[c];
        for (std::size_t c = m.cols_i; c < m.cols_i + m.cols_ii; ++c) wb += row[c];
        if (r < m.rows_a) {
            if (static_cast<long>(wa) != s)
                return "row " + std::to_string(r) + " of A has weight " + std::to_string(wa);
            if (wb != 1) return "row " + std::to_string(r) + " of B has weight " + std::to_string(wb);
            if (row[last] != 0) return "type (a) row " + std::to_string(r) + " marked incident with infinity";
        } else {
            if (wa != 0) return "row " + std::to_string(r) + " of O is not zero";
            if (static_cast<long>(wb) != s)
                return "row " + std::to_string(r) + " of D has weight " + std::to_string(wb);
            if (row[last] != 1) return "type (b) row " + std::to_string(r) + " not incident with infinity";
        }
    }
    // supports of D rows partition the second point class
    std::vector<std::uint32_t> cover(m.cols_ii, 0);
    for (std::size_t r = m.rows_a; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols_ii; ++c) cover[c] += m.rows[r][m.cols_i + c];
    for (std::size_t c = 0; c < m.cols_ii; ++c)
        if (cover[c] != 1)
            return "column " + std::to_string(c) + " of D covered " + std::to_string(cover[c]) + " times";
    return std::nullopt;
}

} // namespace gqlrc
