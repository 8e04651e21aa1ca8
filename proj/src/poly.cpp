#include "chaincodes/poly.hpp"

#include <algorithm>

namespace chaincodes {

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly poly_neg(const Field& F, const Poly& a) {
    Poly r = a;
    for (auto& v : r.c) v = F.neg(v);
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) { return poly_add(F, a, poly_neg(F, b)); }

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

Poly poly_scale(const Field& F, const Poly& a, uint32_t s) {
    if (s == 0) return Poly();
    Poly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    r.trim();
    return r;
}

Poly poly_shift(const Poly& a, size_t k) {
    if (a.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + k, 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroInputError("division by zero polynomial");
    Poly rem = a;
    if (rem.c.size() < b.c.size()) return {Poly(), rem};
    uint32_t lead_inv = F.inv(b.lead());
    Poly quot;
    quot.c.assign(rem.c.size() - b.c.size() + 1, 0);
    for (int k = int(rem.c.size()) - int(b.c.size()); k >= 0; --k) {
        uint32_t coef = F.mul(rem.coeff(k + b.c.size() - 1), lead_inv);
        if (coef == 0) continue;
        quot.c[k] = coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[k + i] = F.sub(rem.c[k + i], F.mul(coef, b.c[i]));
    }
    quot.trim();
    rem.trim();
    return {quot, rem};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_div_exact(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(F, a, b);
    if (!r.is_zero()) throw InvariantViolationError("inexact polynomial division");
    return q;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

XgcdResult poly_xgcd(const Field& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(1), u1;
    Poly v0, v1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(F, r0, r1);
        Poly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
        Poly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        uint32_t s = F.inv(r0.lead());
        r0 = poly_scale(F, r0, s);
        u0 = poly_scale(F, u0, s);
        v0 = poly_scale(F, v0, s);
    }
    return {r0, u0, v0};
}

Poly poly_powmod(const Field& F, Poly base, uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(1);
    base = poly_mod(F, base, mod);
    while (e > 0) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

Poly poly_pow(const Field& F, Poly base, uint64_t e) {
    Poly r = Poly::constant(1);
    while (e > 0) {
        if (e & 1) r = poly_mul(F, r, base);
        if (e > 1) base = poly_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

uint32_t poly_eval(const Field& F, const Poly& a, uint32_t x) {
    uint32_t r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly poly_reciprocal(const Poly& a) {
    Poly r = a;
    std::reverse(r.c.begin(), r.c.end());
    r.trim();
    return r;
}

int poly_valuation(const Field& F, const Poly& a, const Poly& f, int cap) {
    if (a.is_zero()) return cap;
    Poly cur = a;
    int v = 0;
    while (v < cap) {
        auto [q, r] = poly_divmod(F, cur, f);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++v;
    }
    return v;
}

}  // namespace chaincodes
