#ifndef CHAINCODES_FACTOR_HPP
#define CHAINCODES_FACTOR_HPP

#include <vector>

#include "poly.hpp"

namespace chaincodes {

/// Irreducibility of x^n - a0 over F_{p^m} by the binomial criterion:
/// every prime divisor of n divides e = mult_order(a0) but not (p^m - 1)/e,
/// and p^m = 1 (mod 4) whenever 4 | n.
bool binomial_irreducible(const Field& F, uint64_t n, uint32_t a0);

/// Monic irreducible factors of x^n - a0 over F_{p^m}, sorted by
/// (degree, coefficient vector).  Requires gcd(n, p) = 1 and a0 != 0; the
/// factorization is squarefree.  Distinct-degree splitting followed by
/// equal-degree splitting with a deterministic stream seeded from
/// (p, m, n, a0).
std::vector<Poly> factor_binomial(const Field& F, uint64_t n, uint32_t a0);

/// General irreducibility test for a monic polynomial over F_{p^m}.
bool poly_irreducible(const Field& F, const Poly& f);

}  // namespace chaincodes

#endif
