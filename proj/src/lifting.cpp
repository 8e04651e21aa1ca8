#include "chaincodes/lifting.hpp"

namespace chaincodes {

namespace {

// x^n - a (over the residue field)
Poly binomial_poly(const Field& F, uint64_t n, uint32_t a) {
    Poly f;
    f.c.assign(n + 1, 0);
    f.c[0] = F.neg(a);
    f.c[n] = 1;
    return f;
}

struct PeelStep {
    ChainPoly k;       // unreduced factor
    Poly v, w;         // Bezout cofactors (empty for the last factor)
};

// Bezout peeling of T = prod F_j + u*G + u^2*H into factors matching the
// residue parts F_j, front to back.  With vA + wB = 1 for A = F_j and
// B = prod_{i>j} F_i:
//   k    = A + u*wG + u^2*w(H - vwG^2)
//   tail = B + u*vG + u^2*v(H - vwG^2)
std::vector<PeelStep> peel(const Field& K, const std::vector<Poly>& Fs, Poly G, Poly H) {
    size_t r = Fs.size();
    // suffix[j] = prod_{i >= j} F_i
    std::vector<Poly> suffix(r + 1);
    suffix[r] = Poly::constant(1);
    for (size_t j = r; j-- > 0;) suffix[j] = poly_mul(K, Fs[j], suffix[j + 1]);

    std::vector<PeelStep> out;
    out.reserve(r);
    for (size_t j = 0; j + 1 < r; ++j) {
        const Poly& A = Fs[j];
        const Poly& B = suffix[j + 1];
        auto xg = poly_xgcd(K, A, B);
        if (xg.g != Poly::constant(1))
            throw InvariantViolationError("lifted residue factors are not coprime");
        const Poly& v = xg.u;  // cofactor of A
        const Poly& w = xg.v;  // cofactor of B, deg < deg A
        Poly G2 = poly_mul(K, G, G);
        Poly D = poly_sub(K, H, poly_mul(K, poly_mul(K, v, w), G2));  // H - vwG^2
        PeelStep st;
        st.k = {A, poly_mul(K, w, G), poly_mul(K, w, D)};
        st.v = v;
        st.w = w;
        out.push_back(std::move(st));
        G = poly_mul(K, v, G);
        H = poly_mul(K, v, D);
    }
    out.push_back({{Fs[r - 1], G, H}, Poly(), Poly()});
    return out;
}

void check_factor_invariants(const Field& K, const FactorData& fd, LambdaCase lc) {
    switch (lc) {
        case LambdaCase::BetaNonzero:
            if (poly_gcd(K, fd.f, fd.g).degree() != 0)
                throw InvariantViolationError("gcd(f_j, g_j) != 1 with beta nonzero");
            break;
        case LambdaCase::GammaNonzero:
            if (!fd.g.is_zero())
                throw InvariantViolationError("g_j != 0 with beta = 0");
            if (poly_gcd(K, fd.f, fd.h).degree() != 0)
                throw InvariantViolationError("gcd(f_j, h_j) != 1 with gamma nonzero");
            break;
        case LambdaCase::BetaGammaZero:
            if (!fd.g.is_zero() || !fd.h.is_zero())
                throw InvariantViolationError("nonzero correction with beta = gamma = 0");
            break;
    }
}

void build_components_and_idempotents(ConstacyclicSpec& spec) {
    const Field& K = *spec.field;
    spec.components.clear();
    for (const auto& fd : spec.factors) {
        Component comp;
        comp.ring = QuotientRing(spec.field, fd.k.a0, fd.g, fd.h);
        if (!comp.ring.reduce(spec.ambient.modulus()).is_zero())
            throw InvariantViolationError("component modulus does not divide the ambient modulus");
        comp.f = fd.f;
        comp.d = fd.d;
        comp.ps = uint32_t(spec.ps);
        comp.s = spec.s;
        comp.lambda_case = spec.lambda_case;
        spec.components.push_back(std::move(comp));
    }
    // e_j = B_j * (B_j^{-1} mod k_j) with B_j = prod_{i != j} k_i.
    size_t r = spec.factors.size();
    spec.idempotents.assign(r, ChainPoly());
    if (r == 1) {
        spec.idempotents[0] = ChainPoly::one();
        return;
    }
    for (size_t j = 0; j < r; ++j) {
        ChainPoly Bj = ChainPoly::one();
        for (size_t i = 0; i < r; ++i)
            if (i != j) Bj = spec.ambient.reduce(cpoly_mul(K, Bj, spec.factors[i].k));
        ChainPoly cj = spec.components[j].ring.inv(spec.components[j].ring.reduce(Bj));
        spec.idempotents[j] = spec.ambient.mul(Bj, cj);
    }
}

}  // namespace

ConstacyclicSpec lift_factorization(FieldPtr field, uint32_t n, uint32_t s, ChainElem lambda) {
    const Field& K = *field;
    if (n == 0) throw ZeroInputError("n must be positive");
    if (n % K.p() == 0) throw NotCoprimeError("n must be coprime to p");
    if (!is_unit_elem(lambda)) throw NonUnitError("lambda must be a unit of the chain ring");
    if (s == 0) throw RangeError("s must be positive");

    ConstacyclicSpec spec;
    spec.field = field;
    spec.n = n;
    spec.s = s;
    spec.ps = 1;
    for (uint32_t i = 0; i < s; ++i) {
        spec.ps *= K.p();
        if (spec.ps > (1ull << 20)) throw RangeError("p^s too large");
    }
    spec.N = uint64_t(n) * spec.ps;
    spec.lambda = lambda;
    spec.alpha0 = K.ps_root(lambda.a0, s);
    spec.lambda_case = lambda.a1 != 0   ? LambdaCase::BetaNonzero
                       : lambda.a2 != 0 ? LambdaCase::GammaNonzero
                                        : LambdaCase::BetaGammaZero;
    spec.ambient = QuotientRing(field, binomial_poly(K, spec.N, lambda.a0),
                                Poly::constant(K.neg(lambda.a1)),
                                Poly::constant(K.neg(lambda.a2)));

    std::vector<Poly> base = factor_binomial(K, n, spec.alpha0);
    std::vector<Poly> Fs;
    for (const Poly& f : base) Fs.push_back(poly_pow(K, f, spec.ps));

    auto steps = peel(K, Fs, Poly::constant(K.neg(lambda.a1)), Poly::constant(K.neg(lambda.a2)));

    // The unreduced product must reproduce x^N - lambda coefficient-exactly.
    ChainPoly prod = ChainPoly::one();
    for (const auto& st : steps) prod = cpoly_mul(K, prod, st.k);
    if (prod != spec.ambient.modulus())
        throw InvariantViolationError("factor product does not match x^N - lambda");

    for (size_t j = 0; j < base.size(); ++j) {
        FactorData fd;
        fd.f = base[j];
        fd.d = uint32_t(base[j].degree());
        // Canonical associate with layers reduced mod F = f^{p^s}: for
        // k = F + uG + u^2 H, multiplying by the units (1 - u qG) and then
        // (1 - u^2 q') gives F + u (G mod F) + u^2 ((H - qG G) mod F),
        // where qG = G div F.  The cross term -qG G comes from the first
        // unit acting on the u-layer.
        auto [qG, gmod] = poly_divmod(K, steps[j].k.a1, Fs[j]);
        fd.g = gmod;
        fd.h = poly_mod(K, poly_sub(K, steps[j].k.a2, poly_mul(K, qG, steps[j].k.a1)), Fs[j]);
        fd.v = steps[j].v;
        fd.w = steps[j].w;
        fd.k = {Fs[j], fd.g, fd.h};
        check_factor_invariants(K, fd, spec.lambda_case);
        spec.factors.push_back(std::move(fd));
    }

    build_components_and_idempotents(spec);
    return spec;
}

std::vector<ChainPoly> unreduced_factors(const ConstacyclicSpec& spec) {
    const Field& K = *spec.field;
    std::vector<Poly> Fs;
    for (const auto& fd : spec.factors) Fs.push_back(fd.k.a0);
    auto steps = peel(K, Fs, Poly::constant(K.neg(spec.lambda.a1)),
                      Poly::constant(K.neg(spec.lambda.a2)));
    std::vector<ChainPoly> out;
    for (auto& st : steps) out.push_back(std::move(st.k));
    return out;
}

std::vector<ChainPoly> crt_split(const ConstacyclicSpec& spec, const ChainPoly& a) {
    std::vector<ChainPoly> out;
    out.reserve(spec.r());
    for (const auto& comp : spec.components) out.push_back(comp.ring.reduce(a));
    return out;
}

ChainPoly crt_combine(const ConstacyclicSpec& spec, const std::vector<ChainPoly>& comps) {
    if (comps.size() != spec.r())
        throw ArityMismatchError("component count does not match factor count");
    ChainPoly acc;
    for (size_t j = 0; j < comps.size(); ++j)
        acc = spec.ambient.add(acc, spec.ambient.mul(spec.idempotents[j], comps[j]));
    return spec.ambient.reduce(acc);
}

ConstacyclicSpec dual_modulus(const ConstacyclicSpec& spec) {
    const Field& K = *spec.field;
    ChainElem lam_inv = chain_inv(K, spec.lambda);

    ConstacyclicSpec dual;
    dual.field = spec.field;
    dual.n = spec.n;
    dual.s = spec.s;
    dual.ps = spec.ps;
    dual.N = spec.N;
    dual.lambda = lam_inv;
    dual.alpha0 = K.inv(spec.alpha0);
    dual.lambda_case = spec.lambda_case;
    dual.ambient = QuotientRing(spec.field, binomial_poly(K, dual.N, lam_inv.a0),
                                Poly::constant(K.neg(lam_inv.a1)),
                                Poly::constant(K.neg(lam_inv.a2)));

    for (const auto& fd : spec.factors) {
        // k* is the coefficient reversal at degree deg f^{p^s}; its leading
        // R-coefficient is k(0), a unit since x does not divide x^n - alpha0.
        ChainPoly kstar = cpoly_star(fd.k);
        ChainElem lead{kstar.a0.lead(), kstar.a1.coeff(size_t(kstar.a0.degree())),
                       kstar.a2.coeff(size_t(kstar.a0.degree()))};
        ChainPoly knorm = cpoly_scale(K, kstar, chain_inv(K, lead));

        FactorData fd2;
        fd2.f = poly_monic(K, poly_reciprocal(fd.f));
        fd2.d = fd.d;
        fd2.g = knorm.a1;
        fd2.h = knorm.a2;
        fd2.k = knorm;
        if (knorm.a0 != poly_pow(K, fd2.f, spec.ps))
            throw InvariantViolationError("reversed factor is not a power of the reversed base");
        // k_j* must divide x^N - lambda^{-1}
        QuotientRing probe(spec.field, knorm.a0, knorm.a1, knorm.a2);
        if (!probe.reduce(dual.ambient.modulus()).is_zero())
            throw InvariantViolationError("reversed factor does not divide the dual modulus");
        dual.factors.push_back(std::move(fd2));
    }

    // Fresh Bezout certificates for the reversed residue system.
    size_t r = dual.factors.size();
    std::vector<Poly> suffix(r + 1, Poly::constant(1));
    for (size_t j = r; j-- > 0;) suffix[j] = poly_mul(K, dual.factors[j].k.a0, suffix[j + 1]);
    for (size_t j = 0; j + 1 < r; ++j) {
        auto xg = poly_xgcd(K, dual.factors[j].k.a0, suffix[j + 1]);
        dual.factors[j].v = xg.u;
        dual.factors[j].w = xg.v;
    }

    build_components_and_idempotents(dual);
    return dual;
}

}  // namespace chaincodes
