#include "gqlrc/gf.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace gqlrc;

TEST_CASE("prime field construction") {
    Field f2 = Field::create(2, 1);
    CHECK(f2.p() == 2);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<unsigned>{0, 1}); // modulus x

    Field f3 = Field::create(3, 1);
    CHECK(f3.inv(2) == 2); // 2*2 = 4 = 1 mod 3
    CHECK(f3.neg(1) == 2);

    CHECK_THROWS_AS(Field::create(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(2, 0), std::invalid_argument);
}

TEST_CASE("extension field moduli are deterministic") {
    CHECK(Field::create(2, 2).modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(Field::create(2, 3).modulus() == std::vector<unsigned>{1, 1, 0, 1});
    CHECK(Field::create(3, 2).modulus() == std::vector<unsigned>{2, 2, 1});

    // reducible modulus rejected: x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), std::invalid_argument);
    // non-monic rejected
    CHECK_THROWS_AS(Field::with_modulus(3, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("arithmetic in GF(4)") {
    Field f4 = Field::create(2, 2);
    felem x = f4.gen();
    CHECK(x == 2);
    CHECK(f4.mul(1, x) == x);
    CHECK(f4.mul(x, x) == 3); // x^2 = x + 1 mod x^2+x+1
    CHECK(f4.inv(x) == 3);    // x * (x+1) = x^2 + x = 1
    CHECK(f4.add(x, 3) == 1);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (auto [p, h] : {std::pair<unsigned, unsigned>{2, 2},
                        {2, 3},
                        {2, 4},
                        {3, 2},
                        {5, 1},
                        {7, 1}}) {
        Field F = Field::create(p, h);
        const felem q = static_cast<felem>(F.q());
        for (felem a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (felem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (felem c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative group order") {
    for (auto [p, h] : {std::pair<unsigned, unsigned>{2, 8}, {3, 4}, {5, 2}}) {
        Field F = Field::create(p, h);
        // chosen moduli are primitive: x generates the whole group
        CHECK(F.element_order(F.gen()) == F.q() - 1);
        for (felem a = 1; a < F.q(); ++a)
            CHECK(F.pow(a, static_cast<std::int64_t>(F.q()) - 1) == 1);
    }
}

TEST_CASE("frobenius") {
    Field f2 = Field::create(2, 1);
    CHECK(f2.frobenius(1, 1) == 1);

    Field f4 = Field::create(2, 2);
    CHECK(f4.frobenius(f4.gen(), 1) == f4.mul(f4.gen(), f4.gen()));

    Field f9 = Field::create(3, 2);
    for (felem a = 0; a < f9.q(); ++a) {
        CHECK(f9.frobenius(f9.frobenius(a, 1), 1) == a); // order-2 automorphism
        CHECK(f9.frobenius(a, 2) == a);                  // e = h is the identity
    }
    // frobenius is additive and multiplicative
    for (felem a = 0; a < f9.q(); ++a)
        for (felem b = 0; b < f9.q(); ++b) {
            CHECK(f9.frobenius(f9.add(a, b), 1) ==
                  f9.add(f9.frobenius(a, 1), f9.frobenius(b, 1)));
            CHECK(f9.frobenius(f9.mul(a, b), 1) ==
                  f9.mul(f9.frobenius(a, 1), f9.frobenius(b, 1)));
        }
}

TEST_CASE("pow handles negative exponents, inv(0) rejected") {
    Field f8 = Field::create(2, 3);
    for (felem a = 1; a < f8.q(); ++a) {
        CHECK(f8.pow(a, -1) == f8.inv(a));
        CHECK(f8.mul(f8.pow(a, -3), f8.pow(a, 3)) == 1);
    }
    CHECK(f8.pow(0, 5) == 0);
    CHECK(f8.pow(0, 0) == 1);
    CHECK_THROWS_AS(f8.pow(0, -1), std::domain_error);
    CHECK_THROWS_AS(f8.inv(0), std::domain_error);
}

TEST_CASE("coefficient round trip") {
    Field f27 = Field::create(3, 3);
    for (felem a = 0; a < f27.q(); ++a) {
        auto c = f27.coeffs(a);
        CHECK(c.size() == 3);
        CHECK(f27.from_coeffs(c) == a);
    }
    CHECK_THROWS_AS(f27.from_coeffs({3}), std::invalid_argument);
    CHECK_THROWS_AS(f27.from_coeffs({0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("large field falls back to polynomial arithmetic") {
    // q = 2^17 exceeds the table bound but stays under the order bound
    Field F = Field::create(2, 17);
    felem x = F.gen();
    felem y = F.pow(x, 1000);
    CHECK(F.mul(y, F.inv(y)) == 1);
    std::set<felem> firsts;
    felem b = 1;
    for (int i = 0; i < 64; ++i) {
        firsts.insert(b);
        b = F.mul(b, x);
    }
    CHECK(firsts.size() == 64); // no short cycle
}
