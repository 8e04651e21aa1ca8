#include "chaincodes/factor.hpp"

#include <algorithm>
#include <random>

namespace chaincodes {

namespace {

std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

Poly random_poly(const Field& F, std::mt19937_64& rng, size_t max_deg) {
    Poly r;
    r.c.resize(max_deg + 1);
    for (auto& v : r.c) v = uint32_t(rng() % F.q());
    r.trim();
    return r;
}

// equal-degree splitting: f squarefree, all irreducible factors of degree d
void edf(const Field& F, const Poly& f, size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    size_t deg = size_t(f.degree());
    if (deg == d) {
        out.push_back(poly_monic(F, f));
        return;
    }
    Poly split;
    while (split.is_zero()) {
        Poly r = random_poly(F, rng, deg - 1);
        if (r.degree() < 1 && r.is_zero()) continue;
        Poly g = poly_gcd(F, f, r);
        if (g.degree() > 0 && size_t(g.degree()) < deg) {
            split = g;
            break;
        }
        if (F.p() == 2) {
            // trace map over F_2: sum r^{2^i}, i < d*m
            Poly t = poly_mod(F, r, f);
            Poly acc = t;
            for (size_t i = 1; i < d * F.m(); ++i) {
                t = poly_powmod(F, t, 2, f);
                acc = poly_add(F, acc, t);
            }
            Poly g2 = poly_gcd(F, f, acc);
            if (g2.degree() > 0 && size_t(g2.degree()) < deg) split = g2;
        } else {
            // r^{(q^d-1)/2} - 1
            uint64_t e = 1;
            for (size_t i = 0; i < d; ++i) e *= F.q();
            e = (e - 1) / 2;
            Poly t = poly_powmod(F, r, e, f);
            t = poly_sub(F, t, Poly::constant(1));
            Poly g2 = poly_gcd(F, f, t);
            if (g2.degree() > 0 && size_t(g2.degree()) < deg) split = g2;
        }
    }
    edf(F, split, d, rng, out);
    edf(F, poly_div_exact(F, f, split), d, rng, out);
}

}  // namespace

bool binomial_irreducible(const Field& F, uint64_t n, uint32_t a0) {
    if (a0 == 0) throw ZeroInputError("a0 must be nonzero");
    if (n == 1) return true;
    uint64_t e = F.mult_order(a0);
    uint64_t cofactor = (F.q() - 1) / e;
    for (uint64_t t : prime_divisors(n)) {
        if (e % t != 0) return false;
        if (cofactor % t == 0) return false;
    }
    if (n % 4 == 0 && F.q() % 4 != 1) return false;
    return true;
}

std::vector<Poly> factor_binomial(const Field& F, uint64_t n, uint32_t a0) {
    if (a0 == 0) throw ZeroInputError("a0 must be nonzero");
    if (n % F.p() == 0) throw NotCoprimeError("n must be coprime to p");
    // x^n - a0
    Poly f;
    f.c.assign(n + 1, 0);
    f.c[0] = F.neg(a0);
    f.c[n] = 1;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (uint64_t(F.p()) << 40) ^ (uint64_t(F.m()) << 32) ^
                        (n << 16) ^ a0);

    std::vector<Poly> factors;
    // distinct-degree splitting: strip degree-d parts via gcd(x^{q^d} - x, f)
    Poly rem = f;
    Poly h = poly_mod(F, Poly::x(), rem);  // x^{q^d} mod rem, built incrementally
    size_t d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > size_t(rem.degree())) {
            factors.push_back(poly_monic(F, rem));
            break;
        }
        h = poly_powmod(F, h, F.q(), rem);
        Poly g = poly_gcd(F, rem, poly_sub(F, h, Poly::x()));
        if (g.degree() > 0) {
            edf(F, g, d, rng, factors);
            rem = poly_div_exact(F, rem, g);
            h = poly_mod(F, h, rem);
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

bool poly_irreducible(const Field& F, const Poly& f) {
    if (f.degree() < 1) return false;
    size_t d = size_t(f.degree());
    Poly xq = poly_powmod(F, Poly::x(), F.q(), f);  // x^q
    Poly h = xq;
    // x^{q^d} == x and gcd(x^{q^{d/t}} - x, f) = 1 for prime t | d
    auto primes = prime_divisors(d);
    for (size_t i = 1; i < d; ++i) {
        bool check = false;
        for (uint64_t t : primes)
            if (d % t == 0 && i == d / t) check = true;
        if (check) {
            Poly g = poly_gcd(F, f, poly_sub(F, h, Poly::x()));
            if (g.degree() != 0) return false;
        }
        Poly next = Poly();
        // h(x) -> h(x)^q via repeated powmod
        next = poly_powmod(F, h, F.q(), f);
        h = next;
    }
    return h == poly_mod(F, Poly::x(), f);
}

}  // namespace chaincodes
