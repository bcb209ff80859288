#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gqlrc {

// Element of F_{p^h}, encoded as an integer in [0, q): the base-p digits of
// the code are the coefficients of the polynomial representative, constant
// term first.
using felem = std::uint32_t;

// Arithmetic in F_{p^h}, p prime, h >= 1, q = p^h. The extension is defined
// by a fixed monic irreducible modulus of degree h over F_p. Immutable after
// construction; safe for concurrent reads.
class Field {
public:
    static constexpr std::uint64_t max_order = 1u << 20;
    static constexpr std::uint64_t max_table_order = 1u << 16;

    // F_2 by default so value members are usable before assignment.
    Field();

    // Deterministic modulus: x for h = 1, the Conway polynomial where
    // tabulated, otherwise the first primitive polynomial in coefficient
    // order (non-leading coefficients read as a little-endian base-p
    // integer, smallest first).
    static Field create(unsigned p, unsigned h);

    // Explicit monic modulus (little-endian, degree h >= 1). Irreducibility
    // is checked by trial division; primitivity is not required.
    static Field with_modulus(unsigned p, const std::vector<unsigned>& modulus);

    unsigned p() const { return p_; }
    unsigned h() const { return h_; }
    std::uint64_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return mod_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }
    // The class of x. For h = 1 the modulus is x, so this is 0.
    felem gen() const { return h_ == 1 ? 0u : p_; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;                 // throws on 0
    felem pow(felem a, std::int64_t e) const; // throws on 0^{negative}
    felem frobenius(felem a, unsigned e) const; // a^{p^e}; total

    // Multiplicative order; throws on 0.
    std::uint64_t element_order(felem a) const;

    std::vector<unsigned> coeffs(felem a) const;             // h digits
    felem from_coeffs(const std::vector<unsigned>& c) const; // size <= h

    bool operator==(const Field& o) const {
        return p_ == o.p_ && h_ == o.h_ && mod_ == o.mod_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string(felem a) const;
    std::string name() const; // "GF(q)"

private:
    void init(unsigned p, unsigned h, std::vector<unsigned> modulus);
    felem mul_slow(felem a, felem b) const;

    unsigned p_ = 2;
    unsigned h_ = 1;
    std::uint64_t q_ = 2;
    std::vector<unsigned> mod_;
    // log/antilog tables w.r.t. a fixed generator, built for h >= 2 and
    // q <= max_table_order; mul/inv fall back to polynomial arithmetic
    // above that.
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> alog_;
    bool tables_ = false;
};

// Shared small-number helpers.
bool is_prime(unsigned n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace gqlrc
