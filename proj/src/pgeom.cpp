#include "gqlrc/pgeom.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gqlrc {

bool is_zero_vec(const Coords& v) {
    for (felem c : v)
        if (c != 0) return false;
    return true;
}

Coords normalize_point(const Field& F, Coords v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (v[i] != 1) {
                felem s = F.inv(v[i]);
                for (std::size_t j = i; j < v.size(); ++j) v[j] = F.mul(v[j], s);
            }
            return v;
        }
    }
    throw std::invalid_argument("zero vector is not a projective point");
}

std::pair<std::vector<Coords>, std::vector<std::uint32_t>> rref(
    const Field& F, std::vector<Coords> rows) {
    std::vector<std::uint32_t> pivots;
    if (rows.empty()) return {rows, pivots};
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::uint32_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        felem s = F.inv(rows[r][c]);
        if (s != 1)
            for (std::size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            felem f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {rows, pivots};
}

Subspace Subspace::from_rows(const Field& F, unsigned ambient_dim,
                             std::vector<Coords> rows) {
    for (const auto& row : rows)
        if (row.size() != ambient_dim + 1)
            throw std::invalid_argument("generator length does not match ambient dimension");
    Subspace s;
    s.ambient_ = ambient_dim;
    s.rows_ = rref(F, std::move(rows)).first;
    return s;
}

bool Subspace::contains_point(const Field& F, const Coords& pt) const {
    Coords v = pt;
    for (const auto& row : rows_) {
        std::size_t pc = 0;
        while (pc < row.size() && row[pc] == 0) ++pc;
        if (pc == row.size()) continue;
        if (v[pc] != 0) {
            felem f = v[pc];
            for (std::size_t j = pc; j < v.size(); ++j)
                v[j] = F.sub(v[j], F.mul(f, row[j]));
        }
    }
    return is_zero_vec(v);
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains_point(F, row)) return false;
    return true;
}

std::vector<Coords> Subspace::points(const Field& F) const {
    std::vector<Coords> out;
    const std::size_t k = rows_.size();
    if (k == 0) return out;
    const std::size_t ncols = rows_[0].size();
    std::vector<felem> lambda(k, 0);
    // normalized coefficient vectors: first nonzero entry equals 1
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(lambda.begin(), lambda.end(), 0);
        lambda[lead] = 1;
        while (true) {
            Coords pt(ncols, 0);
            for (std::size_t i = lead; i < k; ++i) {
                if (lambda[i] == 0) continue;
                for (std::size_t j = 0; j < ncols; ++j)
                    pt[j] = F.add(pt[j], F.mul(lambda[i], rows_[i][j]));
            }
            out.push_back(std::move(pt));
            // odometer over positions lead+1..k-1
            std::size_t pos = k;
            while (pos-- > lead + 1) {
                if (lambda[pos] + 1 < F.q()) {
                    ++lambda[pos];
                    break;
                }
                lambda[pos] = 0;
            }
            if (pos == lead || k == lead + 1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> Subspace::key() const {
    std::vector<std::uint32_t> k;
    k.reserve(rows_.size() * (ambient_ + 1) + 1);
    k.push_back(static_cast<std::uint32_t>(rows_.size()));
    for (const auto& row : rows_)
        for (felem c : row) k.push_back(c);
    return k;
}

bool Subspace::operator<(const Subspace& o) const {
    if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
    return rows_ < o.rows_;
}

Subspace span_points(const Field& F, unsigned ambient_dim,
                     const std::vector<Coords>& pts) {
    if (pts.empty()) throw std::invalid_argument("span of an empty generator list");
    return Subspace::from_rows(F, ambient_dim, pts);
}

Subspace span_of(const Field& F, const std::vector<Subspace>& parts,
                 const std::vector<Coords>& pts) {
    if (parts.empty() && pts.empty())
        throw std::invalid_argument("span of an empty generator list");
    unsigned ambient = parts.empty() ? static_cast<unsigned>(pts[0].size()) - 1
                                     : parts[0].ambient_dim();
    std::vector<Coords> rows;
    for (const auto& s : parts) {
        if (s.ambient_dim() != ambient)
            throw std::invalid_argument("span generators with mixed ambient dimensions");
        rows.insert(rows.end(), s.basis().begin(), s.basis().end());
    }
    for (const auto& p : pts) rows.push_back(p);
    return Subspace::from_rows(F, ambient, rows);
}

Subspace intersection(const Field& F, const Subspace& a, const Subspace& b) {
    // desk scale: filter the points of the smaller side
    const Subspace& small = a.rank() <= b.rank() ? a : b;
    const Subspace& other = a.rank() <= b.rank() ? b : a;
    std::vector<Coords> pts;
    for (auto& pt : small.points(F))
        if (other.contains_point(F, pt)) pts.push_back(pt);
    return Subspace::from_rows(F, a.ambient_dim(), pts);
}

ProjectiveSpace::ProjectiveSpace(Field f, unsigned N) : F_(std::move(f)), N_(N) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i <= N; ++i) {
        total *= F_.q();
        if (total > (1ull << 26))
            throw std::invalid_argument("projective space too large to enumerate");
    }
    Coords v(N + 1, 0);
    // lexicographic order on coordinate lists, c_0 most significant
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = N + 1; i-- > 0;) {
            v[i] = static_cast<felem>(c % F_.q());
            c /= F_.q();
        }
        std::size_t lead = 0;
        while (lead <= N && v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;
        pts_.push_back(v);
    }
    idx_.reserve(pts_.size() * 2);
    for (std::uint32_t i = 0; i < pts_.size(); ++i) idx_.emplace(pts_[i], i);
}

std::uint32_t ProjectiveSpace::index_of(const Coords& normalized) const {
    auto it = idx_.find(normalized);
    if (it == idx_.end()) throw std::invalid_argument("point not in space");
    return it->second;
}

std::optional<std::uint32_t> ProjectiveSpace::find(const Coords& pt) const {
    if (pt.size() != N_ + 1 || is_zero_vec(pt)) return std::nullopt;
    auto it = idx_.find(normalize_point(F_, pt));
    if (it == idx_.end()) return std::nullopt;
    return it->second;
}

std::vector<Subspace> subspaces_of_dim(const ProjectiveSpace& S, unsigned t) {
    if (t > S.dim())
        throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    const Field& F = S.field();
    std::vector<Subspace> level;
    level.reserve(S.size());
    for (const auto& pt : S.points())
        level.push_back(Subspace::from_rows(F, S.dim(), {pt}));
    for (unsigned d = 0; d < t; ++d) {
        std::vector<Subspace> next;
        std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
        for (const auto& sub : level) {
            for (const auto& pt : S.points()) {
                if (sub.contains_point(F, pt)) continue;
                auto rows = sub.basis();
                rows.push_back(pt);
                Subspace bigger = Subspace::from_rows(F, S.dim(), std::move(rows));
                if (seen.insert(bigger.key()).second) next.push_back(std::move(bigger));
            }
        }
        level = std::move(next);
    }
    return level;
}

HyperplaneEmbedding embed_in_hyperplane(const ProjectiveSpace& inner) {
    ProjectiveSpace outer(inner.field(), inner.dim() + 1);
    std::vector<Coords> rows;
    for (unsigned i = 0; i <= inner.dim(); ++i) {
        Coords r(inner.dim() + 2, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    Subspace h = Subspace::from_rows(inner.field(), inner.dim() + 1, rows);
    return {std::move(outer), std::move(h)};
}

Coords lift_point(const Coords& inner_pt) {
    Coords out = inner_pt;
    out.push_back(0);
    return out;
}

Subspace lift_subspace(const Field& F, const Subspace& s) {
    std::vector<Coords> rows;
    for (const auto& row : s.basis()) rows.push_back(lift_point(row));
    return Subspace::from_rows(F, s.ambient_dim() + 1, rows);
}

bool at_infinity(const Coords& outer_pt) { return outer_pt.back() == 0; }

std::vector<std::uint32_t> affine_point_ids(const ProjectiveSpace& outer) {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t i = 0; i < outer.size(); ++i)
        if (!at_infinity(outer.point(i))) ids.push_back(i);
    return ids;
}

std::vector<Coords> conic_points(const Field& F) {
    std::vector<Coords> pts;
    for (felem t = 0; t < F.q(); ++t)
        pts.push_back({1, t, F.mul(t, t)});
    pts.push_back({0, 0, 1});
    std::sort(pts.begin(), pts.end());
    return pts;
}

Coords conic_nucleus(const Field& F) {
    if (F.p() != 2) throw std::invalid_argument("the conic has a nucleus only in even characteristic");
    return {0, 1, 0};
}

std::vector<Coords> hyperoval_points(const Field& F) {
    if (F.p() != 2) throw std::invalid_argument("hyperovals require q even");
    auto pts = conic_points(F);
    pts.push_back(conic_nucleus(F));
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::pair<felem, felem> irreducible_quadratic(const Field& F) {
    for (felem a = 0; a < F.q(); ++a) {
        for (felem b = 0; b < F.q(); ++b) {
            bool has_root = false;
            for (felem z = 0; z < F.q() && !has_root; ++z)
                if (F.add(F.add(F.mul(z, z), F.mul(a, z)), b) == 0) has_root = true;
            if (!has_root) return {a, b};
        }
    }
    throw std::logic_error("no irreducible quadratic found"); // unreachable
}

std::vector<Coords> elliptic_quadric_points(const Field& F) {
    ProjectiveSpace S(F, 3);
    auto [a, b] = irreducible_quadratic(F);
    std::vector<Coords> out;
    for (const auto& x : S.points()) {
        felem f = F.add(F.add(F.mul(x[2], x[2]), F.mul(a, F.mul(x[2], x[3]))),
                        F.mul(b, F.mul(x[3], x[3])));
        if (F.add(F.mul(x[0], x[1]), f) == 0) out.push_back(x);
    }
    return out;
}

std::vector<Coords> parabolic_quadric_points(const Field& F) {
    ProjectiveSpace S(F, 4);
    std::vector<Coords> out;
    for (const auto& x : S.points()) {
        felem v = F.add(F.mul(x[0], x[0]),
                        F.add(F.mul(x[1], x[2]), F.mul(x[3], x[4])));
        if (v == 0) out.push_back(x);
    }
    return out;
}

std::vector<Coords> elliptic_quadric5_points(const Field& F) {
    ProjectiveSpace S(F, 5);
    auto [a, b] = irreducible_quadratic(F);
    std::vector<Coords> out;
    for (const auto& x : S.points()) {
        felem f = F.add(F.add(F.mul(x[0], x[0]), F.mul(a, F.mul(x[0], x[1]))),
                        F.mul(b, F.mul(x[1], x[1])));
        felem v = F.add(f, F.add(F.mul(x[2], x[3]), F.mul(x[4], x[5])));
        if (v == 0) out.push_back(x);
    }
    return out;
}

std::vector<Coords> hermitian_points(const Field& F, unsigned N) {
    if (N != 3 && N != 4)
        throw std::invalid_argument("Hermitian varieties supported in PG(3,q^2) and PG(4,q^2)");
    if (F.h() % 2 != 0)
        throw std::invalid_argument("Hermitian variety needs a field of square order");
    std::uint64_t q0 = 1;
    for (unsigned i = 0; i < F.h() / 2; ++i) q0 *= F.p();
    const std::int64_t e = static_cast<std::int64_t>(q0) + 1;
    ProjectiveSpace S(F, N);
    std::vector<Coords> out;
    for (const auto& x : S.points()) {
        felem v = 0;
        for (felem c : x) v = F.add(v, F.pow(c, e));
        if (v == 0) out.push_back(x);
    }
    return out;
}

std::vector<Subspace> symplectic_lines(const Field& F) {
    ProjectiveSpace S(F, 3);
    auto bform = [&](const Coords& u, const Coords& v) {
        felem s = F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]));
        return F.add(s, F.sub(F.mul(u[2], v[3]), F.mul(u[3], v[2])));
    };
    std::vector<Subspace> lines;
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    for (std::uint32_t i = 0; i < S.size(); ++i) {
        for (std::uint32_t j = i + 1; j < S.size(); ++j) {
            if (bform(S.point(i), S.point(j)) != 0) continue;
            Subspace l = Subspace::from_rows(F, 3, {S.point(i), S.point(j)});
            if (seen.insert(l.key()).second) lines.push_back(std::move(l));
        }
    }
    return lines;
}

bool is_arc(const Field& F, unsigned ambient_dim, const std::vector<Coords>& pts,
            std::vector<std::size_t>* witness) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                Subspace s = Subspace::from_rows(F, ambient_dim,
                                                 {pts[i], pts[j], pts[k]});
                if (s.rank() < 3) {
                    if (witness) *witness = {i, j, k};
                    return false;
                }
            }
    return true;
}

std::vector<Subspace> lines_on_set(const ProjectiveSpace& S,
                                   const std::vector<Coords>& pts) {
    const Field& F = S.field();
    std::unordered_set<std::vector<std::uint32_t>, VecHash> in_set;
    for (const auto& p : pts) in_set.insert(p);
    std::vector<Subspace> lines;
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Subspace l = Subspace::from_rows(F, S.dim(), {pts[i], pts[j]});
            if (!seen.insert(l.key()).second) continue;
            bool inside = true;
            for (const auto& pt : l.points(F))
                if (!in_set.count(pt)) {
                    inside = false;
                    break;
                }
            if (inside) lines.push_back(std::move(l));
        }
    }
    return lines;
}

// --- field reduction --------------------------------------------------------

namespace {

// invert a square matrix over F_p; throws if singular
std::vector<std::vector<std::uint8_t>> invert_mod_p(
    std::vector<std::vector<std::uint8_t>> m, unsigned p) {
    const std::size_t n = m.size();
    std::vector<std::vector<std::uint8_t>> inv(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    auto inv_mod = [&](unsigned a) {
        unsigned r = 1, b = a, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) throw std::logic_error("singular matrix in field reduction");
        std::swap(m[c], m[sel]);
        std::swap(inv[c], inv[sel]);
        unsigned s = inv_mod(m[c][c]);
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] = static_cast<std::uint8_t>(m[c][j] * s % p);
            inv[c][j] = static_cast<std::uint8_t>(inv[c][j] * s % p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            unsigned f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = static_cast<std::uint8_t>((m[i][j] + p * p - f * m[c][j] % p * 1u) % p);
                inv[i][j] = static_cast<std::uint8_t>((inv[i][j] + p * p - f * inv[c][j] % p * 1u) % p);
            }
        }
    }
    return inv;
}

} // namespace

FieldReduction::FieldReduction(Field big, Field small)
    : big_(std::move(big)), small_(std::move(small)) {
    if (big_.p() != small_.p())
        throw std::invalid_argument("field reduction requires equal characteristic");
    if (big_.h() % small_.h() != 0)
        throw std::invalid_argument("small field degree must divide big field degree");
    e_ = big_.h() / small_.h();

    // image of the small field's generator inside the big field: the
    // smallest root of the small modulus
    const unsigned p = big_.p();
    felem root = 0;
    if (small_.h() == 1) {
        root = 1; // constants embed as themselves
    } else {
        bool found = false;
        for (felem z = 0; z < big_.q() && !found; ++z) {
            felem v = 0, zp = 1;
            for (unsigned i = 0; i < small_.modulus().size(); ++i) {
                v = big_.add(v, big_.mul(small_.modulus()[i] % p, zp));
                zp = big_.mul(zp, z);
            }
            if (v == 0) {
                root = z;
                found = true;
            }
        }
        if (!found) throw std::logic_error("small modulus has no root in the big field");
    }
    embed_pow_.resize(small_.h());
    embed_pow_[0] = 1;
    for (unsigned i = 1; i < small_.h(); ++i)
        embed_pow_[i] = big_.mul(embed_pow_[i - 1], root);

    // matrix of the basis {emb(g^i) * X^j} in F_p coordinates
    const unsigned H = big_.h();
    if (H == 1) {
        inv_ = {{1}};
        return;
    }
    std::vector<std::vector<std::uint8_t>> m(H, std::vector<std::uint8_t>(H, 0));
    felem X = big_.gen();
    felem Xj = 1;
    for (unsigned j = 0; j < e_; ++j) {
        for (unsigned i = 0; i < small_.h(); ++i) {
            felem b = big_.mul(Xj, embed_pow_[i]);
            auto digits = big_.coeffs(b);
            for (unsigned rowp = 0; rowp < H; ++rowp)
                m[rowp][j * small_.h() + i] = static_cast<std::uint8_t>(digits[rowp]);
        }
        Xj = big_.mul(Xj, X);
    }
    inv_ = invert_mod_p(std::move(m), p);
}

felem FieldReduction::embed(felem small_elt) const {
    felem r = 0;
    auto digits = small_.coeffs(small_elt);
    for (unsigned i = 0; i < small_.h(); ++i)
        r = big_.add(r, big_.mul(digits[i], embed_pow_[i]));
    return r;
}

std::vector<felem> FieldReduction::expand(felem big_elt) const {
    const unsigned H = big_.h();
    auto digits = big_.coeffs(big_elt);
    std::vector<unsigned> c(H, 0);
    const unsigned p = big_.p();
    for (unsigned i = 0; i < H; ++i) {
        unsigned acc = 0;
        for (unsigned j = 0; j < H; ++j) acc = (acc + inv_[i][j] * digits[j]) % p;
        c[i] = acc;
    }
    std::vector<felem> out(e_);
    for (unsigned j = 0; j < e_; ++j) {
        std::vector<unsigned> chunk(c.begin() + j * small_.h(),
                                    c.begin() + (j + 1) * small_.h());
        out[j] = small_.from_coeffs(chunk);
    }
    return out;
}

Subspace FieldReduction::reduce_point(const Coords& big_pt) const {
    const std::size_t k = big_pt.size();
    std::vector<Coords> rows;
    felem X = big_.h() == 1 ? 1 : big_.gen();
    felem Xj = 1;
    for (unsigned j = 0; j < e_; ++j) {
        Coords row;
        row.reserve(k * e_);
        for (std::size_t l = 0; l < k; ++l) {
            auto small = expand(big_.mul(Xj, big_pt[l]));
            row.insert(row.end(), small.begin(), small.end());
        }
        rows.push_back(std::move(row));
        Xj = big_.mul(Xj, X);
    }
    return Subspace::from_rows(small_, static_cast<unsigned>(k * e_) - 1, rows);
}

Subspace FieldReduction::reduce_subspace(const Subspace& s) const {
    std::vector<Coords> rows;
    for (const auto& brow : s.basis()) {
        felem X = big_.h() == 1 ? 1 : big_.gen();
        felem Xj = 1;
        for (unsigned j = 0; j < e_; ++j) {
            Coords row;
            row.reserve(brow.size() * e_);
            for (std::size_t l = 0; l < brow.size(); ++l) {
                auto small = expand(big_.mul(Xj, brow[l]));
                row.insert(row.end(), small.begin(), small.end());
            }
            rows.push_back(std::move(row));
            Xj = big_.mul(Xj, X);
        }
    }
    return Subspace::from_rows(small_, (s.ambient_dim() + 1) * e_ - 1, rows);
}

// --- incidence matrices ------------------------------------------------------

IncMatrix incidence_matrix_pg(const ProjectiveSpace& S, unsigned t) {
    if (t > S.dim() - 1 && S.dim() > 0)
        throw std::invalid_argument("t out of range for point/t-space incidence");
    IncMatrix m;
    m.cols = S.size();
    m.col_point_ids.resize(S.size());
    for (std::uint32_t i = 0; i < S.size(); ++i) m.col_point_ids[i] = i;
    m.row_spaces = subspaces_of_dim(S, t);
    m.rows.reserve(m.row_spaces.size());
    for (const auto& sub : m.row_spaces) {
        std::vector<std::uint8_t> row(m.cols, 0);
        for (const auto& pt : sub.points(S.field())) row[S.index_of(pt)] = 1;
        m.rows.push_back(std::move(row));
    }
    return m;
}

IncMatrix incidence_matrix_ag(const ProjectiveSpace& S, unsigned t) {
    if (t < 1 || t > S.dim() - 1)
        throw std::invalid_argument("t out of range for affine point/t-flat incidence");
    IncMatrix m;
    auto affine = affine_point_ids(S);
    m.cols = affine.size();
    m.col_point_ids = affine;
    std::unordered_map<std::uint32_t, std::uint32_t> col_of;
    for (std::uint32_t c = 0; c < affine.size(); ++c) col_of[affine[c]] = c;
    for (auto& sub : subspaces_of_dim(S, t)) {
        bool inside_h = true;
        for (const auto& row : sub.basis())
            if (row.back() != 0) {
                inside_h = false;
                break;
            }
        if (inside_h) continue; // t-space inside the hyperplane at infinity
        std::vector<std::uint8_t> row(m.cols, 0);
        for (const auto& pt : sub.points(S.field())) {
            if (at_infinity(pt)) continue;
            row[col_of.at(S.index_of(pt))] = 1;
        }
        m.rows.push_back(std::move(row));
        m.row_spaces.push_back(std::move(sub));
    }
    return m;
}

} // namespace gqlrc
