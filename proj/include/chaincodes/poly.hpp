#ifndef CHAINCODES_POLY_HPP
#define CHAINCODES_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "field.hpp"

namespace chaincodes {

/// Dense polynomial over F_{p^m}.  Coefficients are field-element indices,
/// constant term first, no trailing zeros; the zero polynomial is empty.
struct Poly {
    std::vector<uint32_t> c;

    Poly() = default;
    explicit Poly(std::vector<uint32_t> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    uint32_t lead() const { return c.empty() ? 0 : c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
    bool operator<(const Poly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        return c < o.c;
    }

    static Poly zero() { return Poly(); }
    static Poly constant(uint32_t v) { return Poly({v}); }
    static Poly x() { return Poly({0, 1}); }
};

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, uint32_t s);
Poly poly_shift(const Poly& a, size_t k);  // multiply by x^k

/// Quotient and remainder; divisor must have a unit (nonzero) leading
/// coefficient.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_div_exact(const Field& F, const Poly& a, const Poly& b);

Poly poly_monic(const Field& F, const Poly& a);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic gcd

/// (g, u, v) with u*a + v*b = g = gcd(a, b), g monic.
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult poly_xgcd(const Field& F, const Poly& a, const Poly& b);

Poly poly_powmod(const Field& F, Poly base, uint64_t e, const Poly& mod);
Poly poly_pow(const Field& F, Poly base, uint64_t e);
uint32_t poly_eval(const Field& F, const Poly& a, uint32_t x);

/// f* = x^{deg f} f(1/x); reciprocal of zero is zero.
Poly poly_reciprocal(const Poly& a);

/// Largest i with f^i | a (f non-constant); returns `cap` for a = 0.
int poly_valuation(const Field& F, const Poly& a, const Poly& f, int cap);

}  // namespace chaincodes

#endif
