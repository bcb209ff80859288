#include "gqlrc/egg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gqlrc {

std::string EggReport::summary() const {
    std::string s;
    for (const auto& ax : axioms) {
        if (!s.empty()) s += "; ";
        s += ax.name + ": " + (ax.pass ? "ok" : "FAIL (" + ax.witness + ")");
    }
    return s;
}

EggReport verify_egg(const Egg& egg) {
    EggReport rep;
    const Field& F = egg.field;
    const unsigned N = egg.ambient_dim();
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < egg.m; ++i) qm *= F.q();

    EggAxiom card{"cardinality q^m+1", true, ""};
    if (egg.elements.size() != qm + 1) {
        card.pass = false;
        card.witness = std::to_string(egg.elements.size()) + " elements, expected " +
                       std::to_string(qm + 1);
    }
    rep.axioms.push_back(card);

    EggAxiom dims{"elements of dimension n-1", true, ""};
    for (std::size_t i = 0; i < egg.elements.size(); ++i) {
        if (egg.elements[i].proj_dim() != static_cast<int>(egg.n) - 1 ||
            egg.elements[i].ambient_dim() != N) {
            dims.pass = false;
            dims.witness = "element " + std::to_string(i);
            break;
        }
    }
    rep.axioms.push_back(dims);

    EggAxiom span3{"triples span dimension 3n-1", true, ""};
    if (dims.pass) {
        for (std::size_t i = 0; i < egg.elements.size() && span3.pass; ++i)
            for (std::size_t j = i + 1; j < egg.elements.size() && span3.pass; ++j)
                for (std::size_t k = j + 1; k < egg.elements.size(); ++k) {
                    Subspace s = span_of(
                        F, {egg.elements[i], egg.elements[j], egg.elements[k]}, {});
                    if (s.proj_dim() != static_cast<int>(3 * egg.n) - 1) {
                        span3.pass = false;
                        span3.witness = "triple (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) +
                                        ") spans dim " + std::to_string(s.proj_dim());
                        break;
                    }
                }
    } else {
        span3.pass = false;
        span3.witness = "skipped: element dimensions wrong";
    }
    rep.axioms.push_back(span3);

    EggAxiom tang{"tangent spaces", true, ""};
    if (egg.tangents.size() != egg.elements.size()) {
        tang.pass = false;
        tang.witness = "tangent list size mismatch";
    } else {
        for (std::size_t i = 0; i < egg.elements.size() && tang.pass; ++i) {
            const Subspace& T = egg.tangents[i];
            if (T.proj_dim() != static_cast<int>(egg.n + egg.m) - 1 ||
                T.ambient_dim() != N) {
                tang.pass = false;
                tang.witness = "tangent " + std::to_string(i) + " has wrong dimension";
                break;
            }
            if (!T.contains(F, egg.elements[i])) {
                tang.pass = false;
                tang.witness = "tangent " + std::to_string(i) + " misses its element";
                break;
            }
            for (std::size_t j = 0; j < egg.elements.size(); ++j) {
                if (j == i) continue;
                if (intersection(F, T, egg.elements[j]).rank() != 0) {
                    tang.pass = false;
                    tang.witness = "tangent " + std::to_string(i) + " meets element " +
                                   std::to_string(j);
                    break;
                }
            }
        }
    }
    rep.axioms.push_back(tang);

    rep.pass = true;
    for (const auto& ax : rep.axioms) rep.pass = rep.pass && ax.pass;
    return rep;
}

namespace {

// all lines through pt in the plane/space containing the given points
std::vector<Subspace> lines_through(const Field& F, const ProjectiveSpace& S,
                                    const Coords& pt) {
    std::vector<Subspace> lines;
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    for (const auto& other : S.points()) {
        if (other == pt) continue;
        Subspace l = Subspace::from_rows(F, S.dim(), {pt, other});
        if (seen.insert(l.key()).second) lines.push_back(std::move(l));
    }
    return lines;
}

std::size_t count_on(const Field& F, const Subspace& s,
                     const std::vector<Coords>& pts) {
    std::size_t n = 0;
    for (const auto& p : pts)
        if (s.contains_point(F, p)) ++n;
    return n;
}

} // namespace

std::vector<Subspace> oval_tangents(const Field& F,
                                    const std::vector<Coords>& oval) {
    ProjectiveSpace plane(F, 2);
    std::vector<Subspace> tangents;
    for (const auto& P : oval) {
        std::vector<Subspace> found;
        for (const auto& l : lines_through(F, plane, P))
            if (count_on(F, l, oval) == 1) found.push_back(l);
        if (found.size() != 1)
            throw std::invalid_argument(
                "point set is not an oval: expected exactly one tangent per point, got " +
                std::to_string(found.size()));
        tangents.push_back(found[0]);
    }
    return tangents;
}

std::vector<Subspace> ovoid_tangent_planes(const Field& F,
                                           const std::vector<Coords>& ovoid) {
    ProjectiveSpace space(F, 3);
    std::vector<Subspace> planes;
    for (const auto& P : ovoid) {
        std::vector<Subspace> tls;
        for (const auto& l : lines_through(F, space, P))
            if (count_on(F, l, ovoid) == 1) tls.push_back(l);
        if (tls.empty())
            throw std::invalid_argument("point set is not an ovoid: no tangent lines");
        Subspace plane = span_of(F, tls, {});
        if (plane.proj_dim() != 2 || count_on(F, plane, ovoid) != 1)
            throw std::invalid_argument(
                "point set is not an ovoid: tangent lines do not form a plane");
        planes.push_back(std::move(plane));
    }
    return planes;
}

Egg egg_from_oval(const Field& big, const std::vector<Coords>& oval,
                  const Field& base) {
    if (oval.empty() || oval[0].size() != 3)
        throw std::invalid_argument("oval must consist of points of PG(2,q^n)");
    if (oval.size() != big.q() + 1)
        throw std::invalid_argument("oval must have q^n+1 points, got " +
                                    std::to_string(oval.size()));
    std::vector<std::size_t> bad;
    if (!is_arc(big, 2, oval, &bad))
        throw std::invalid_argument("input has three collinear points");

    auto tangents = oval_tangents(big, oval);
    FieldReduction red(big, base);
    Egg egg;
    egg.field = base;
    egg.n = red.e();
    egg.m = red.e();
    for (const auto& P : oval) egg.elements.push_back(red.reduce_point(P));
    for (const auto& t : tangents) egg.tangents.push_back(red.reduce_subspace(t));
    EggReport rep = verify_egg(egg);
    if (!rep.pass) throw std::logic_error("constructed egg failed verification: " + rep.summary());
    return egg;
}

Egg egg_from_ovoid(const Field& big, const std::vector<Coords>& ovoid,
                   const Field& base) {
    if (ovoid.empty() || ovoid[0].size() != 4)
        throw std::invalid_argument("ovoid must consist of points of PG(3,q^n)");
    if (ovoid.size() != big.q() * big.q() + 1)
        throw std::invalid_argument("ovoid must have q^{2n}+1 points, got " +
                                    std::to_string(ovoid.size()));
    if (!is_arc(big, 3, ovoid, nullptr))
        throw std::invalid_argument("input has three collinear points");

    auto tangents = ovoid_tangent_planes(big, ovoid);
    FieldReduction red(big, base);
    Egg egg;
    egg.field = base;
    egg.n = red.e();
    egg.m = 2 * red.e();
    for (const auto& P : ovoid) egg.elements.push_back(red.reduce_point(P));
    for (const auto& t : tangents) egg.tangents.push_back(red.reduce_subspace(t));
    EggReport rep = verify_egg(egg);
    if (!rep.pass) throw std::logic_error("constructed egg failed verification: " + rep.summary());
    return egg;
}

Egg conic_egg(const Field& base, unsigned n) {
    if (n < 1) throw std::invalid_argument("field-reduction degree must be >= 1");
    Field big = n == 1 ? base : Field::create(base.p(), base.h() * n);
    return egg_from_oval(big, conic_points(big), base);
}

Egg ovoid_egg(const Field& base, unsigned n) {
    if (n < 1) throw std::invalid_argument("field-reduction degree must be >= 1");
    Field big = n == 1 ? base : Field::create(base.p(), base.h() * n);
    return egg_from_ovoid(big, elliptic_quadric_points(big), base);
}

} // namespace gqlrc
