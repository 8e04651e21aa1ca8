#include "doctest.h"

#include <random>

#include "chaincodes/factor.hpp"
#include "test_util.hpp"

using namespace chaincodes;
using chaincodes::testutil::P;

namespace {

Poly random_poly(const Field& F, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<uint32_t> coef(0, uint32_t(F.q() - 1));
    int d = deg(rng);
    std::vector<uint32_t> c;
    for (int i = 0; i <= d; ++i) c.push_back(coef(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("division and gcd identities on random inputs") {
    Field F(3, 2);
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        Poly a = random_poly(F, rng, 8);
        Poly b = random_poly(F, rng, 5);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(F, a, b);
        CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
        CHECK(r.degree() < b.degree());
        auto xg = poly_xgcd(F, a, b);
        CHECK(poly_add(F, poly_mul(F, xg.u, a), poly_mul(F, xg.v, b)) == xg.g);
        if (!xg.g.is_zero()) CHECK(xg.g.lead() == 1);
        CHECK(poly_mod(F, a, xg.g).is_zero());
        CHECK(poly_mod(F, b, xg.g).is_zero());
    }
}

TEST_CASE("reciprocal and valuation") {
    Field F(2, 1);
    CHECK(poly_reciprocal(P({1, 1, 0, 1})) == P({1, 0, 1, 1}));
    CHECK(poly_reciprocal(Poly()) == Poly());
    Poly f = P({1, 1});  // x + 1
    Poly a = poly_mul(F, poly_mul(F, f, f), P({0, 1}));  // x (x+1)^2
    CHECK(poly_valuation(F, a, f, 10) == 2);
    CHECK(poly_valuation(F, Poly(), f, 10) == 10);
}

TEST_CASE("binomial factorizations are frozen") {
    Field F3(3, 1);
    auto fs = factor_binomial(F3, 2, 1);  // x^2 - 1
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == P({1, 1}));
    CHECK(fs[1] == P({2, 1}));

    Field F2(2, 1);
    auto gs = factor_binomial(F2, 3, 1);  // x^3 - 1
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == P({1, 1}));
    CHECK(gs[1] == P({1, 1, 1}));
}

TEST_CASE("binomial factorization product identity") {
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}, {3u, 2u}}) {
        Field F(p, m);
        for (uint32_t n = 1; n <= 6; ++n) {
            if (n % p == 0) continue;
            for (uint32_t a0 = 1; a0 < std::min<uint32_t>(uint32_t(F.q()), 5); ++a0) {
                auto fs = factor_binomial(F, n, a0);
                Poly prod = Poly::constant(1);
                for (const Poly& f : fs) {
                    CHECK(poly_irreducible(F, f));
                    CHECK(f.lead() == 1);
                    prod = poly_mul(F, prod, f);
                }
                Poly target = poly_sub(F, poly_shift(Poly::constant(1), n), Poly::constant(a0));
                CHECK(prod == target);
            }
        }
    }
}

TEST_CASE("binomial irreducibility criterion") {
    Field F3(3, 1);
    CHECK(binomial_irreducible(F3, 2, 2));       // x^2 + 1 over F_3
    CHECK_FALSE(binomial_irreducible(F3, 2, 1));  // x^2 - 1 splits
    Field F2(2, 1);
    CHECK_FALSE(binomial_irreducible(F2, 3, 1));
    CHECK(poly_irreducible(F2, P({1, 1, 1})));
    CHECK_FALSE(poly_irreducible(F2, P({1, 0, 1})));  // (x+1)^2
}
