#include "doctest.h"

#include "chaincodes/field.hpp"

using namespace chaincodes;

TEST_CASE("prime field arithmetic") {
    Field F(3, 1);
    CHECK(F.q() == 3);
    CHECK(F.add(1, 2) == 0);
    CHECK(F.sub(0, 1) == 2);
    CHECK(F.mul(2, 2) == 1);
    CHECK(F.inv(2) == 2);
    CHECK(F.neg(1) == 2);
    CHECK(F.pow(2, 4) == 1);
}

TEST_CASE("canonical moduli are frozen") {
    // first monic irreducible of the degree, coefficient vectors in
    // lexicographic order
    CHECK(Field(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});  // x^2+x+1
    CHECK(Field(3, 2).modulus() == std::vector<uint32_t>{1, 0, 1});  // x^2+1
}

TEST_CASE("F4 multiplication table") {
    Field F(2, 2);  // elements 0, 1, w = 2, w+1 = 3
    CHECK(F.mul(2, 2) == 3);  // w^2 = w + 1
    CHECK(F.mul(2, 3) == 1);  // w (w+1) = 1
    CHECK(F.inv(2) == 3);
    CHECK(F.mult_order(2) == 3);
    CHECK(F.mult_order(1) == 1);
}

TEST_CASE("digit conversions round-trip") {
    Field F(3, 2);
    for (uint32_t a = 0; a < F.q(); ++a) CHECK(F.from_digits(F.digits(a)) == a);
    CHECK(F.from_int(-1) == 2);
    CHECK(F.from_int(4) == 1);
}

TEST_CASE("p-power roots") {
    Field F3(3, 1);
    CHECK(F3.ps_root(2, 1) == 2);  // 2^3 = 2 in F_3
    Field F4(2, 2);
    CHECK(F4.ps_root(2, 1) == 3);  // (w+1)^2 = w
    for (uint32_t a = 1; a < F4.q(); ++a) CHECK(F4.pow(F4.ps_root(a, 1), 2) == a);
    Field F9(3, 2);
    for (uint32_t a = 1; a < F9.q(); ++a) CHECK(F9.pow(F9.ps_root(a, 2), 9) == a);
}

TEST_CASE("field construction and domain errors") {
    CHECK_THROWS_AS(Field(4, 1), NonPrimeError);
    CHECK_THROWS_AS(Field(2, 0), DegreeZeroError);
    Field F(5, 1);
    CHECK_THROWS_AS(F.inv(0), ZeroInputError);
    CHECK_THROWS_AS(F.mult_order(0), ZeroInputError);
    CHECK_THROWS_AS(F.ps_root(0, 1), ZeroInputError);
}

TEST_CASE("inverses across a larger field") {
    Field F(5, 2);
    for (uint32_t a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}
