#include "chaincodes/classify.hpp"

#include <algorithm>
#include <cmath>

namespace chaincodes {

namespace {

uint32_t max0(int64_t v) { return v > 0 ? uint32_t(v) : 0; }

bool unit_mod_f(const Field& F, const Poly& a, const Poly& f) {
    return !a.is_zero() && !poly_mod(F, a, f).is_zero();
}

// t = f-adic valuation of z (reduced mod f^bound), U = z / f^t.
// Zero maps to (bound, 0).
void split_unit(const Field& F, const Poly& z, const Poly& f, uint32_t bound, uint32_t& t, Poly& U) {
    if (z.is_zero()) {
        t = bound;
        U = Poly();
        return;
    }
    t = uint32_t(poly_valuation(F, z, f, int(bound)));
    U = poly_div_exact(F, z, poly_pow(F, f, t));
}

size_t pivot_of(const Vec& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return i;
    return row.size();
}

// Combination of the span rows whose `layer` block equals tgt exactly and
// whose earlier layers vanish (only rows with pivot in `layer` are used).
ChainPoly element_with_layer_part(const Component& K, const Mat& span, size_t layer,
                                  const Poly& tgt) {
    const Field& F = K.field();
    size_t D = K.ring.deg();
    Mat sub, full;
    for (const Vec& row : span) {
        if (pivot_of(row) / D != layer) continue;
        sub.emplace_back(row.begin() + layer * D, row.begin() + (layer + 1) * D);
        full.push_back(row);
    }
    Vec target(D, 0);
    for (size_t i = 0; i < tgt.c.size(); ++i) target[i] = tgt.c[i];
    auto coeffs = express(F, sub, target);
    if (!coeffs)
        throw InvariantViolationError("requested layer part is not in the ideal's layer span");
    Vec acc(3 * D, 0);
    for (size_t i = 0; i < full.size(); ++i) {
        if ((*coeffs)[i] == 0) continue;
        for (size_t j = 0; j < 3 * D; ++j)
            acc[j] = F.add(acc[j], F.mul((*coeffs)[i], full[i][j]));
    }
    return vec_to_chainpoly(acc, D);
}

// Minimum f-valuation of the `layer` blocks of the rows with pivot in
// `layer`; p^s when no such row exists.
uint32_t layer_min_valuation(const Component& K, const Mat& span, size_t layer) {
    const Field& F = K.field();
    size_t D = K.ring.deg();
    uint32_t best = K.ps;
    for (const Vec& row : span) {
        if (pivot_of(row) / D != layer) continue;
        Poly part(Vec(row.begin() + layer * D, row.begin() + (layer + 1) * D));
        best = std::min(best, uint32_t(poly_valuation(F, part, K.f, int(K.ps))));
    }
    return best;
}

bool ring_fits_cap(const Component& K, uint64_t cap_log2) {
    uint64_t exp = 3ull * K.field().m() * K.d * K.ps;
    long double bits = exp * std::log2l((long double)K.field().p());
    if (bits > 62) return cap_log2 >= 63;
    uint64_t size = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        size *= K.field().p();
        if (cap_log2 < 63 && size > (1ull << cap_log2)) return false;
    }
    return true;
}

}  // namespace

Vec chainpoly_to_vec(const ChainPoly& a, size_t D) {
    Vec v(3 * D, 0);
    for (size_t i = 0; i < a.a0.c.size(); ++i) v[i] = a.a0.c[i];
    for (size_t i = 0; i < a.a1.c.size(); ++i) v[D + i] = a.a1.c[i];
    for (size_t i = 0; i < a.a2.c.size(); ++i) v[2 * D + i] = a.a2.c[i];
    return v;
}

ChainPoly vec_to_chainpoly(const Vec& v, size_t D) {
    ChainPoly a;
    a.a0 = Poly(Vec(v.begin(), v.begin() + D));
    a.a1 = Poly(Vec(v.begin() + D, v.begin() + 2 * D));
    a.a2 = Poly(Vec(v.begin() + 2 * D, v.end()));
    return a;
}

void validate_ideal_spec(const IdealSpec& spec, const Component& K) {
    const Field& F = K.field();
    uint32_t ps = K.ps, d = K.d;
    bool chain_case = K.lambda_case == LambdaCase::BetaNonzero;
    auto fail = [](const char* msg) { throw InvariantViolationError(msg); };
    auto check_unit = [&](const Poly& U, uint32_t exp, uint32_t lo, uint32_t hi_excl) {
        // U = 0 demands exp == hi_excl (the torsion bound convention);
        // otherwise U is a unit of f-adic length <= hi_excl - exp with
        // lo <= exp < hi_excl.
        if (U.is_zero()) {
            if (exp != hi_excl) fail("zero unit polynomial with non-canonical exponent");
            return;
        }
        if (exp < lo || exp >= hi_excl) fail("unit exponent out of range");
        if (!unit_mod_f(F, U, K.f)) fail("unit polynomial is divisible by the base factor");
        if (U.degree() >= int((hi_excl - exp) * d)) fail("unit polynomial too long");
    };
    switch (spec.kind) {
        case IdealKind::Zero:
        case IdealKind::Unit:
            return;
        case IdealKind::Chain:
            if (!chain_case) fail("Chain ideal outside the beta != 0 case");
            if (spec.ell == 0 || spec.ell >= 3 * ps) fail("Chain exponent out of range");
            return;
        case IdealKind::TypeI:
            if (chain_case) fail("TypeI ideal in the beta != 0 case");
            if (spec.c >= ps) fail("TypeI torsion exponent out of range");
            return;
        case IdealKind::TypeII:
            if (chain_case) fail("TypeII ideal in the beta != 0 case");
            if (spec.b >= ps || spec.c > spec.b) fail("TypeII exponents out of range");
            check_unit(spec.G, spec.t, max0(int64_t(spec.c) + spec.b - ps), spec.c);
            return;
        case IdealKind::TypeIII:
            if (chain_case) fail("TypeIII ideal in the beta != 0 case");
            if (spec.a == 0 || spec.a >= ps || spec.b > spec.a || spec.c > spec.b)
                fail("TypeIII exponents out of range");
            check_unit(spec.D1, spec.t1, max0(int64_t(spec.a) + spec.b - ps), spec.b);
            check_unit(spec.D2, spec.t2, 0, spec.c);
            check_unit(spec.V, spec.theta, max0(int64_t(spec.b) + spec.c - ps), spec.c);
            return;
    }
}

TorProfile tor_profile(const IdealSpec& spec, const Component& K) {
    uint32_t ps = K.ps;
    auto clamp = [ps](int64_t v) { return uint32_t(std::max<int64_t>(0, std::min<int64_t>(v, ps))); };
    switch (spec.kind) {
        case IdealKind::Zero: return {ps, ps, ps};
        case IdealKind::Unit: return {0, 0, 0};
        case IdealKind::Chain:
            return {clamp(spec.ell), clamp(int64_t(spec.ell) - ps), clamp(int64_t(spec.ell) - 2 * ps)};
        case IdealKind::TypeI: return {ps, ps, spec.c};
        case IdealKind::TypeII: return {ps, spec.b, spec.c};
        case IdealKind::TypeIII: return {spec.a, spec.b, spec.c};
    }
    return {};
}

uint64_t ideal_size_exp(const IdealSpec& spec, const Component& K) {
    validate_ideal_spec(spec, K);
    TorProfile pr = tor_profile(spec, K);
    return uint64_t(K.field().m()) * K.d * (3ull * K.ps - pr.a - pr.b - pr.c);
}

std::vector<ChainPoly> ideal_generators(const IdealSpec& spec, const Component& K) {
    validate_ideal_spec(spec, K);
    const Field& F = K.field();
    auto fpow = [&](uint32_t e) { return poly_pow(F, K.f, e); };  // e < p^s here
    switch (spec.kind) {
        case IdealKind::Zero: return {ChainPoly::zero()};
        case IdealKind::Unit: return {ChainPoly::one()};
        case IdealKind::Chain: return {K.f_power(spec.ell)};
        case IdealKind::TypeI: return {{Poly(), Poly(), fpow(spec.c)}};
        case IdealKind::TypeII: {
            Poly zt = spec.G.is_zero() ? Poly() : poly_mul(F, fpow(spec.t), spec.G);
            return {{Poly(), fpow(spec.b), zt}, {Poly(), Poly(), fpow(spec.c)}};
        }
        case IdealKind::TypeIII: {
            Poly l1 = spec.D1.is_zero() ? Poly() : poly_mul(F, fpow(spec.t1), spec.D1);
            Poly l2 = spec.D2.is_zero() ? Poly() : poly_mul(F, fpow(spec.t2), spec.D2);
            Poly zt = spec.V.is_zero() ? Poly() : poly_mul(F, fpow(spec.theta), spec.V);
            return {{fpow(spec.a), l1, l2}, {Poly(), fpow(spec.b), zt},
                    {Poly(), Poly(), fpow(spec.c)}};
        }
    }
    return {};
}

std::vector<ChainPoly> annihilator_generators(const IdealSpec& spec, const Component& K) {
    validate_ideal_spec(spec, K);
    const Field& F = K.field();
    uint32_t ps = K.ps;
    auto u_times = [&](const ChainPoly& x) { return K.ring.reduce(cpoly_mul_u(x)); };
    switch (spec.kind) {
        case IdealKind::Zero: return {ChainPoly::one()};
        case IdealKind::Unit: return {ChainPoly::zero()};
        case IdealKind::Chain: return {K.f_power(3ull * ps - spec.ell)};
        case IdealKind::TypeI:
            return {K.f_power(ps - spec.c), {Poly(), Poly::constant(1), Poly()}};
        case IdealKind::TypeII: {
            ChainPoly e1 = K.f_power(ps - spec.c);
            if (!spec.G.is_zero()) {
                ChainPoly corr = K.ring.mul_poly(
                    u_times(K.f_power(ps - spec.c + spec.t - spec.b)), spec.G);
                e1 = K.ring.sub(e1, corr);
            }
            ChainPoly e2 = u_times(K.f_power(ps - spec.b));
            ChainPoly e3 = {Poly(), Poly(), Poly::constant(1)};
            return {e1, e2, e3};
        }
        case IdealKind::TypeIII: {
            // Solve f^c A = [h_j +] f^{p^s-a+t1-b+theta} V D1 - f^{p^s-a+t2} D2
            // in F_{p^m}[x]/(f^{p^s}).
            Poly L;
            if (K.lambda_case == LambdaCase::GammaNonzero) L = K.ring.hpart();
            if (!spec.V.is_zero() && !spec.D1.is_zero()) {
                Poly term = poly_mul(F, poly_pow(F, K.f, ps - spec.a + spec.t1 - spec.b + spec.theta),
                                     poly_mul(F, spec.V, spec.D1));
                L = poly_add(F, L, term);
            }
            if (!spec.D2.is_zero()) {
                Poly term = poly_mul(F, poly_pow(F, K.f, ps - spec.a + spec.t2), spec.D2);
                L = poly_sub(F, L, term);
            }
            L = poly_mod(F, L, K.ring.res_modulus());
            Poly A;
            if (!L.is_zero()) {
                if (poly_valuation(F, L, K.f, int(spec.c)) < int(spec.c))
                    throw CongruenceUnsolvableError(
                        "annihilator congruence has no solution: f^c does not divide the "
                        "prescribed combination");
                A = poly_div_exact(F, L, poly_pow(F, K.f, spec.c));
            }
            ChainPoly e1 = K.f_power(ps - spec.c);
            if (!spec.V.is_zero())
                e1 = K.ring.sub(e1, K.ring.mul_poly(
                                        u_times(K.f_power(ps - spec.c + spec.theta - spec.b)),
                                        spec.V));
            if (!A.is_zero()) e1 = K.ring.add(e1, {Poly(), Poly(), poly_mod(F, A, K.ring.res_modulus())});
            ChainPoly e2 = u_times(K.f_power(ps - spec.b));
            if (!spec.D1.is_zero())
                e2 = K.ring.sub(e2, {Poly(), Poly(),
                                     poly_mul(F, poly_pow(F, K.f, ps - spec.a + spec.t1 - spec.b),
                                              spec.D1)});
            ChainPoly e3 = {Poly(), Poly(), poly_pow(F, K.f, ps - spec.a)};
            return {e1, e2, e3};
        }
    }
    return {};
}

IdealSpec annihilator(const IdealSpec& spec, const Component& K) {
    return canonicalize(annihilator_generators(spec, K), K);
}

Mat ideal_span(const std::vector<ChainPoly>& gens, const Component& K) {
    size_t D = K.ring.deg();
    Mat rows;
    for (const ChainPoly& g : gens) {
        ChainPoly base = K.ring.reduce(g);
        for (int layer = 0; layer < 3; ++layer) {
            ChainPoly cur = base;
            for (int l = 0; l < layer; ++l) cur = K.ring.reduce(cpoly_mul_u(cur));
            for (size_t i = 0; i < D; ++i) {
                rows.push_back(chainpoly_to_vec(cur, D));
                cur = K.ring.shift_x(cur);
            }
        }
    }
    rref(K.field(), rows);
    return rows;
}

IdealSpec canonicalize_span(const Mat& span, const Component& K) {
    const Field& F = K.field();
    size_t D = K.ring.deg();
    uint32_t ps = K.ps;
    if (span.empty()) return {IdealKind::Zero};
    if (span.size() == 3 * D) return {IdealKind::Unit};

    if (K.lambda_case == LambdaCase::BetaNonzero) {
        size_t codim = 3 * D - span.size();
        if (codim % K.d != 0)
            throw InvariantViolationError("chain-case ideal dimension is not a multiple of d_j");
        IdealSpec s;
        s.kind = IdealKind::Chain;
        s.ell = uint32_t(codim / K.d);
        return s;
    }

    uint32_t a = layer_min_valuation(K, span, 0);
    uint32_t b = layer_min_valuation(K, span, 1);
    uint32_t c = layer_min_valuation(K, span, 2);
    if (a == 0) return {IdealKind::Unit};

    if (a == ps && b == ps) {
        IdealSpec s;
        s.kind = IdealKind::TypeI;
        s.a = ps;
        s.b = ps;
        s.c = c;
        return s;
    }

    Poly fc = poly_pow(F, K.f, c);
    auto layer2_params = [&](const Poly& z, uint32_t& t, Poly& U) {
        Poly zbar = c == 0 ? Poly() : poly_mod(F, z, fc);
        split_unit(F, zbar, K.f, c, t, U);
    };

    if (a == ps) {  // TypeII
        IdealSpec s;
        s.kind = IdealKind::TypeII;
        s.a = ps;
        s.b = b;
        s.c = c;
        ChainPoly w1 = element_with_layer_part(K, span, 1, poly_pow(F, K.f, b));
        layer2_params(w1.a2, s.t, s.G);
        validate_ideal_spec(s, K);
        return s;
    }

    // TypeIII
    IdealSpec s;
    s.kind = IdealKind::TypeIII;
    s.a = a;
    s.b = b;
    s.c = c;
    Poly fb = poly_pow(F, K.f, b);
    ChainPoly w1 = element_with_layer_part(K, span, 1, fb);
    layer2_params(w1.a2, s.theta, s.V);
    ChainPoly w0 = element_with_layer_part(K, span, 0, poly_pow(F, K.f, a));
    auto [q, r1] = poly_divmod(F, w0.a1, fb);
    ChainPoly w0r = K.ring.sub(w0, K.ring.mul_poly(w1, q));
    if (w0r.a1 != r1)
        throw InvariantViolationError("layer-1 reduction of the leading generator failed");
    split_unit(F, r1, K.f, b, s.t1, s.D1);
    uint32_t t2;
    Poly D2;
    layer2_params(w0r.a2, t2, D2);
    s.t2 = t2;
    s.D2 = D2;
    validate_ideal_spec(s, K);
    return s;
}

IdealSpec canonicalize(const std::vector<ChainPoly>& gens, const Component& K) {
    return canonicalize_span(ideal_span(gens, K), K);
}

namespace {

// All unit polynomials sum C_k f^k, 0 <= k < len, digits C_k of degree
// < d over F_{p^m}, C_0 != 0, in lexicographic digit order.
std::vector<Poly> unit_polys(const Component& K, uint32_t len) {
    const Field& F = K.field();
    uint64_t q = F.q();
    uint64_t digit_count = 1;
    for (uint32_t i = 0; i < K.d; ++i) digit_count *= q;  // q^d digit values
    auto digit_poly = [&](uint64_t idx) {
        Poly p;
        for (uint32_t i = 0; i < K.d; ++i) {
            p.c.push_back(uint32_t(idx % q));
            idx /= q;
        }
        p.trim();
        return p;
    };
    std::vector<Poly> fpows(len);
    for (uint32_t k = 0; k < len; ++k) fpows[k] = poly_pow(F, K.f, k);
    std::vector<Poly> out;
    std::vector<uint64_t> digits(len, 0);
    digits[0] = 1;
    while (true) {
        Poly val;
        for (uint32_t k = 0; k < len; ++k)
            if (digits[k] != 0) val = poly_add(F, val, poly_mul(F, digit_poly(digits[k]), fpows[k]));
        out.push_back(std::move(val));
        // lexicographic increment: last digit fastest
        size_t i = len;
        while (i-- > 0) {
            if (++digits[i] < digit_count) break;
            digits[i] = 0;
            if (i == 0) return out;
        }
    }
}

struct UnitChoice {
    uint32_t exp;
    Poly U;
};

// The canonical (exp, U) pairs for one unit slot with torsion bound
// `bound` and exponent floor `lo`: the zero choice (bound, 0) first, then
// exponents ascending with all unit polynomials of the matching length.
std::vector<UnitChoice> unit_choices(const Component& K, uint32_t lo, uint32_t bound) {
    std::vector<UnitChoice> out;
    out.push_back({bound, Poly()});
    for (uint32_t e = lo; e < bound; ++e)
        for (Poly& U : unit_polys(K, bound - e)) out.push_back({e, std::move(U)});
    return out;
}

}  // namespace

std::vector<IdealSpec> enumerate_ideals(const Component& K, uint64_t cap_ring_log2) {
    uint32_t ps = K.ps;
    std::vector<IdealSpec> out;
    out.push_back({IdealKind::Zero});

    if (K.lambda_case == LambdaCase::BetaNonzero) {
        for (uint32_t ell = 1; ell < 3 * ps; ++ell) {
            IdealSpec s;
            s.kind = IdealKind::Chain;
            s.ell = ell;
            out.push_back(s);
        }
        out.push_back({IdealKind::Unit});
        return out;
    }

    if (!ring_fits_cap(K, cap_ring_log2))
        throw CapExceededError("component ring exceeds the enumeration cap");

    // Candidate tuples are kept only when self-canonical, which both
    // deduplicates and drops parameter tuples that do not realize their
    // stated torsion profile.
    auto emit_if_canonical = [&](IdealSpec s) {
        Mat span = ideal_span(ideal_generators(s, K), K);
        if (canonicalize_span(span, K) == s) out.push_back(std::move(s));
    };

    for (uint32_t c = 0; c < ps; ++c) {
        IdealSpec s;
        s.kind = IdealKind::TypeI;
        s.a = ps;
        s.b = ps;
        s.c = c;
        out.push_back(s);
    }

    for (uint32_t b = 0; b < ps; ++b)
        for (uint32_t c = 0; c <= b; ++c)
            for (const auto& g : unit_choices(K, max0(int64_t(c) + b - ps), c)) {
                IdealSpec s;
                s.kind = IdealKind::TypeII;
                s.a = ps;
                s.b = b;
                s.c = c;
                s.t = g.exp;
                s.G = g.U;
                emit_if_canonical(std::move(s));
            }

    for (uint32_t a = 1; a < ps; ++a)
        for (uint32_t b = 0; b <= a; ++b)
            for (uint32_t c = 0; c <= b; ++c) {
                auto d1s = unit_choices(K, max0(int64_t(a) + b - ps), b);
                auto d2s = unit_choices(K, 0, c);
                auto vs = unit_choices(K, max0(int64_t(b) + c - ps), c);
                for (const auto& d1 : d1s)
                    for (const auto& d2 : d2s)
                        for (const auto& v : vs) {
                            IdealSpec s;
                            s.kind = IdealKind::TypeIII;
                            s.a = a;
                            s.b = b;
                            s.c = c;
                            s.t1 = d1.exp;
                            s.D1 = d1.U;
                            s.t2 = d2.exp;
                            s.D2 = d2.U;
                            s.theta = v.exp;
                            s.V = v.U;
                            emit_if_canonical(std::move(s));
                        }
            }

    out.push_back({IdealKind::Unit});
    return out;
}

}  // namespace chaincodes
