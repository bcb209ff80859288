#pragma once

#include "gqlrc/pgeom.hpp"

#include <string>
#include <vector>

namespace gqlrc {

// q^m+1 pairwise skew-in-triples (n-1)-subspaces of PG(2n+m-1,q), each with
// an (n+m-1)-dimensional tangent space containing it and missing every other
// element. Seed data for a translation generalised quadrangle.
struct Egg {
    Field field;
    unsigned n = 1;
    unsigned m = 1;
    std::vector<Subspace> elements;
    std::vector<Subspace> tangents; // parallel to elements

    unsigned ambient_dim() const { return 2 * n + m - 1; }
};

struct EggAxiom {
    std::string name;
    bool pass = false;
    std::string witness; // empty when the axiom holds
};

struct EggReport {
    bool pass = false;
    std::vector<EggAxiom> axioms;
    std::string summary() const;
};

// Checks cardinality, element dimensions, the span condition on all triples,
// and the tangent-space conditions. Total: failures land in the report.
EggReport verify_egg(const Egg& egg);

// Elementary eggs by field reduction. The oval lives in PG(2, q^n) and gives
// m = n; the ovoid lives in PG(3, q^n) and gives m = 2n. Tangent spaces are
// the field-reduced tangent lines/planes. Throws if the input point set is
// not an oval/ovoid or if the resulting egg fails verification.
Egg egg_from_oval(const Field& big, const std::vector<Coords>& oval,
                  const Field& base);
Egg egg_from_ovoid(const Field& big, const std::vector<Coords>& ovoid,
                   const Field& base);

// Canonical instances over F_{q^n} reduced to the base field.
Egg conic_egg(const Field& base, unsigned n = 1);
Egg ovoid_egg(const Field& base, unsigned n = 1);

// The unique line through each oval point meeting the oval only there.
std::vector<Subspace> oval_tangents(const Field& F,
                                    const std::vector<Coords>& oval);
// The tangent plane at each ovoid point (span of the tangent lines).
std::vector<Subspace> ovoid_tangent_planes(const Field& F,
                                           const std::vector<Coords>& ovoid);

} // namespace gqlrc
