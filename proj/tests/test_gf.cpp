#include <doctest.h>

#include <set>

#include "grasswt/gf.hpp"

using namespace grasswt;

TEST_SUITE("gf") {

TEST_CASE("characteristic-2 addition wraps") {
    Field F(2, 1);
    CHECK((F.one() + F.one()).is_zero());
}

TEST_CASE("prime field inverses") {
    Field F3(3, 1);
    CHECK(inv(F3.element(2)) == F3.element(2));
    Field F5(5, 1);
    CHECK(F5.element(2) * F5.element(3) == F5.one());
    CHECK(inv(F5.element(2)) == F5.element(3));
}

TEST_CASE("F4 modulus is the unique irreducible quadratic") {
    // Oracle: a quadratic over F_2 is reducible iff it has a root. Exactly
    // one of the four monic quadratics survives.
    std::vector<std::vector<int>> irreducible;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            bool has_root = false;
            for (int x = 0; x < 2; ++x)
                if ((x * x + c1 * x + c0) % 2 == 0) has_root = true;
            if (!has_root) irreducible.push_back({c0, c1, 1});
        }
    REQUIRE(irreducible.size() == 1);
    CHECK(irreducible[0] == std::vector<int>{1, 1, 1});

    Field F4(2, 2);
    CHECK(F4.modulus() == std::vector<int>{1, 1, 1});

    // x * x reduces to x + 1 mod x^2 + x + 1
    FieldElement x = F4.from_coeffs({0, 1});
    CHECK(x * x == F4.from_coeffs({1, 1}));
}

TEST_CASE("element enumeration is lexicographic on coefficient lists") {
    Field F4(2, 2);
    auto els = F4.elements();
    REQUIRE(els.size() == 4);
    CHECK(els[0].is_zero());
    std::vector<std::vector<int>> seen;
    for (auto e : els) seen.push_back(e.coeffs());
    std::vector<std::vector<int>> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(seen == want);

    Field F9(3, 2);
    auto e9 = F9.elements();
    REQUIRE(e9.size() == 9);
    CHECK(e9[0].is_zero());
    for (size_t i = 1; i < e9.size(); ++i) CHECK(e9[i - 1].coeffs() < e9[i].coeffs());
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field F(p, e);
        auto els = F.elements();
        for (auto a : els) {
            CHECK(a + F.zero() == a);
            CHECK(a * F.one() == a);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK(a * inv(a) == F.one());
            for (auto b : els) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (auto c : els) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("nonzero elements form a cyclic group of order q-1") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field F(p, e);
        int qm1 = F.q() - 1;
        bool generator_found = false;
        for (auto a : F.elements()) {
            if (a.is_zero()) continue;
            int ord = mult_order(a);
            CHECK(qm1 % ord == 0);
            if (ord == qm1) generator_found = true;
        }
        CHECK(generator_found);
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_WITH_AS(Field(4, 1), doctest::Contains("NonPrimeCharacteristic"), Error);
    CHECK_THROWS_WITH_AS(Field(6, 1), doctest::Contains("NonPrimeCharacteristic"), Error);
    CHECK_THROWS_WITH_AS(Field(2, 0), doctest::Contains("DegreeZero"), Error);
    CHECK_THROWS_WITH_AS(Field(2, 5), doctest::Contains("FieldTooLarge"), Error);
    CHECK_NOTHROW(Field(2, 5, 32)); // cap is configurable
}

TEST_CASE("cross-field operations are rejected") {
    Field F2(2, 1), F3(3, 1);
    bool threw = false;
    try {
        (void)(F2.one() + F3.one());
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == Errc::MixedFields);
    }
    CHECK(threw);
    CHECK_THROWS_AS((void)(F2.one() / F2.zero()), Error);
}

TEST_CASE("two instances of the same field interoperate") {
    Field A(3, 1), B(3, 1);
    CHECK(A.one() + B.element(2) == A.zero());
}

TEST_CASE("from_coeffs reduces mod p and round-trips") {
    Field F9(3, 2);
    for (auto a : F9.elements()) CHECK(F9.from_coeffs(a.coeffs()) == a);
    CHECK(F9.from_coeffs({4, -1}) == F9.from_coeffs({1, 2}));
}

} // TEST_SUITE
