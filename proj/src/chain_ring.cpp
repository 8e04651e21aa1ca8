#include "chaincodes/chain_ring.hpp"

#include <algorithm>

namespace chaincodes {

ChainElem chain_add(const Field& F, const ChainElem& a, const ChainElem& b) {
    return {F.add(a.a0, b.a0), F.add(a.a1, b.a1), F.add(a.a2, b.a2)};
}

ChainElem chain_sub(const Field& F, const ChainElem& a, const ChainElem& b) {
    return {F.sub(a.a0, b.a0), F.sub(a.a1, b.a1), F.sub(a.a2, b.a2)};
}

ChainElem chain_neg(const Field& F, const ChainElem& a) {
    return {F.neg(a.a0), F.neg(a.a1), F.neg(a.a2)};
}

ChainElem chain_mul(const Field& F, const ChainElem& a, const ChainElem& b) {
    uint32_t c0 = F.mul(a.a0, b.a0);
    uint32_t c1 = F.add(F.mul(a.a0, b.a1), F.mul(a.a1, b.a0));
    uint32_t c2 = F.add(F.add(F.mul(a.a0, b.a2), F.mul(a.a1, b.a1)), F.mul(a.a2, b.a0));
    return {c0, c1, c2};
}

ChainElem chain_inv(const Field& F, const ChainElem& a) {
    if (a.a0 == 0) throw NonUnitError("chain element with zero residue part has no inverse");
    // (a0 + u a1 + u^2 a2)^{-1} = b0 (1 - n + n^2) with b0 = a0^{-1},
    // n = u a1 b0 + u^2 a2 b0.
    uint32_t b0 = F.inv(a.a0);
    uint32_t n1 = F.mul(a.a1, b0), n2 = F.mul(a.a2, b0);
    // 1 - n + n^2 = 1 - u n1 + u^2 (n1^2 - n2)
    ChainElem t{1, F.neg(n1), F.sub(F.mul(n1, n1), n2)};
    return {F.mul(b0, t.a0), F.mul(b0, t.a1), F.mul(b0, t.a2)};
}

int ChainPoly::degree() const {
    return std::max(a0.degree(), std::max(a1.degree(), a2.degree()));
}

ChainPoly ChainPoly::layered(int layer, Poly p) {
    ChainPoly r;
    if (layer == 0)
        r.a0 = std::move(p);
    else if (layer == 1)
        r.a1 = std::move(p);
    else
        r.a2 = std::move(p);
    return r;
}

ChainPoly cpoly_add(const Field& F, const ChainPoly& a, const ChainPoly& b) {
    return {poly_add(F, a.a0, b.a0), poly_add(F, a.a1, b.a1), poly_add(F, a.a2, b.a2)};
}

ChainPoly cpoly_sub(const Field& F, const ChainPoly& a, const ChainPoly& b) {
    return {poly_sub(F, a.a0, b.a0), poly_sub(F, a.a1, b.a1), poly_sub(F, a.a2, b.a2)};
}

ChainPoly cpoly_neg(const Field& F, const ChainPoly& a) {
    return {poly_neg(F, a.a0), poly_neg(F, a.a1), poly_neg(F, a.a2)};
}

ChainPoly cpoly_mul(const Field& F, const ChainPoly& a, const ChainPoly& b) {
    ChainPoly r;
    r.a0 = poly_mul(F, a.a0, b.a0);
    r.a1 = poly_add(F, poly_mul(F, a.a0, b.a1), poly_mul(F, a.a1, b.a0));
    r.a2 = poly_add(F, poly_add(F, poly_mul(F, a.a0, b.a2), poly_mul(F, a.a1, b.a1)),
                    poly_mul(F, a.a2, b.a0));
    return r;
}

ChainPoly cpoly_scale(const Field& F, const ChainPoly& a, const ChainElem& s) {
    return cpoly_mul(F, a, ChainPoly::from_elem(s));
}

ChainPoly cpoly_mul_u(const ChainPoly& a) { return {Poly(), a.a0, a.a1}; }

ChainPoly cpoly_star(const ChainPoly& a) {
    int d = a.degree();
    if (d < 0) return a;
    auto rev = [d](const Poly& p) {
        Poly r;
        r.c.assign(size_t(d) + 1, 0);
        for (size_t i = 0; i < p.c.size(); ++i) r.c[size_t(d) - i] = p.c[i];
        r.trim();
        return r;
    };
    return {rev(a.a0), rev(a.a1), rev(a.a2)};
}

QuotientRing::QuotientRing(FieldPtr field, Poly res_modulus, Poly g, Poly h)
    : field_(std::move(field)), F_(std::move(res_modulus)), g_(std::move(g)), h_(std::move(h)) {
    if (F_.degree() < 1) throw DegreeZeroError("quotient modulus must be non-constant");
    if (F_.lead() != 1) throw InvariantViolationError("quotient modulus must be monic");
    if (g_.degree() >= F_.degree() || h_.degree() >= F_.degree())
        throw InvariantViolationError("u-layers of modulus must have degree below the residue part");
}

ChainPoly QuotientRing::reduce(ChainPoly a) const {
    const Field& K = *field_;
    // Layer 0 first: each subtracted multiple q0 * (F + u g + u^2 h)
    // pushes -q0*g into layer 1 and -q0*h into layer 2.
    auto [q0, r0] = poly_divmod(K, a.a0, F_);
    a.a0 = std::move(r0);
    if (!q0.is_zero()) {
        if (!g_.is_zero()) a.a1 = poly_sub(K, a.a1, poly_mul(K, q0, g_));
        if (!h_.is_zero()) a.a2 = poly_sub(K, a.a2, poly_mul(K, q0, h_));
    }
    auto [q1, r1] = poly_divmod(K, a.a1, F_);
    a.a1 = std::move(r1);
    if (!q1.is_zero() && !g_.is_zero()) a.a2 = poly_sub(K, a.a2, poly_mul(K, q1, g_));
    a.a2 = poly_mod(K, a.a2, F_);
    return a;
}

ChainPoly QuotientRing::mul(const ChainPoly& a, const ChainPoly& b) const {
    return reduce(cpoly_mul(*field_, a, b));
}

ChainPoly QuotientRing::mul_poly(const ChainPoly& a, const Poly& s) const {
    const Field& K = *field_;
    return reduce({poly_mul(K, a.a0, s), poly_mul(K, a.a1, s), poly_mul(K, a.a2, s)});
}

ChainPoly QuotientRing::pow(ChainPoly base, uint64_t e) const {
    ChainPoly r = ChainPoly::one();
    base = reduce(std::move(base));
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

ChainPoly QuotientRing::shift_x(const ChainPoly& a) const {
    return reduce({poly_shift(a.a0, 1), poly_shift(a.a1, 1), poly_shift(a.a2, 1)});
}

bool QuotientRing::is_unit(const ChainPoly& a) const {
    Poly g = poly_gcd(*field_, a.a0, F_);
    return g.degree() == 0 && !g.is_zero();
}

ChainPoly QuotientRing::inv(const ChainPoly& a) const {
    const Field& K = *field_;
    ChainPoly ar = reduce(a);
    auto xg = poly_xgcd(K, ar.a0, F_);
    if (xg.g.degree() != 0 || xg.g.is_zero())
        throw NonUnitError("residue part is not invertible modulo the residue modulus");
    // b0 with a0 * b0 = 1 (mod F); then a * b0 = 1 + n with n nilpotent,
    // so a^{-1} = b0 (1 - n + n^2).
    ChainPoly b0 = ChainPoly::from_res(xg.u);
    ChainPoly n = sub(mul(ar, b0), ChainPoly::one());
    ChainPoly corr = add(sub(ChainPoly::one(), n), mul(n, n));
    return mul(b0, corr);
}

uint64_t nilpotency_index(LambdaCase c, uint32_t p, uint32_t s) {
    uint64_t ps = 1;
    for (uint32_t i = 0; i < s; ++i) ps *= p;
    switch (c) {
        case LambdaCase::BetaNonzero: return 3 * ps;
        case LambdaCase::GammaNonzero: return 2 * ps;
        case LambdaCase::BetaGammaZero: return ps;
    }
    return ps;
}

ChainPoly Component::f_power(uint64_t e) const {
    return ring.pow(ChainPoly::from_res(f), e);
}

ChainPoly Component::layered_f_power(int layer, uint64_t e, const Poly& w) const {
    ChainPoly fe = f_power(e);
    if (!w.is_zero() && w != Poly::constant(1)) fe = ring.mul_poly(fe, w);
    ChainPoly r;
    if (layer == 0) return fe;
    if (layer == 1) fe = cpoly_mul_u(fe);
    else fe = cpoly_mul_u(cpoly_mul_u(fe));
    return ring.reduce(fe);
}

bool is_unit_in_Kj(const Field& F, const ChainPoly& a, const Component& K) {
    return poly_mod(F, a.a0, K.f).is_zero() ? false : true;
}

}  // namespace chaincodes
