#include "chaincodes/metrics.hpp"

namespace chaincodes {

namespace {

uint64_t upow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Profile (a, b, c) of the single component ideal; requires r = 1 and a
// lambda with beta = 0 so that the closed-form band formulas apply.
TorProfile applicable_profile(const CodeDescriptor& C) {
    if (!C.spec) throw ZeroInputError("code has no ambient spec");
    if (C.spec->r() != 1)
        throw NotApplicableError("closed-form metrics require an irreducible x^n - alpha0");
    if (C.spec->lambda_case == LambdaCase::BetaNonzero)
        throw NotApplicableError("closed-form metrics require the u-coefficient of lambda to vanish");
    if (C.components.size() != 1)
        throw ArityMismatchError("component count does not match factor count");
    return tor_profile(C.components[0], C.spec->components[0]);
}

}  // namespace

uint32_t hamming_distance_field(uint32_t v, uint32_t p, uint32_t s) {
    uint64_t ps = upow(p, s);
    if (v > ps) throw RangeError("exponent outside [0, p^s]");
    if (v == 0) return 1;
    if (v == ps) return 0;
    uint64_t ps1 = ps / p;  // p^{s-1}
    // v <= (p-1) p^{s-1}: value l + 2 on the band l p^{s-1} < v <= (l+1) p^{s-1}
    if (v <= (p - 1) * ps1) return uint32_t((v - 1) / ps1 + 2);
    // remaining bands, indexed by k = 1 .. s-1:
    // (i+1) p^k on p^s - p^{s-k} + (i-1) p^{s-k-1} < v <= p^s - p^{s-k} + i p^{s-k-1}
    for (uint32_t k = 1; k + 1 <= s; ++k) {
        uint64_t base = ps - upow(p, s - k);
        uint64_t step = upow(p, s - k - 1);
        if (v > base && v <= base + (uint64_t(p) - 1) * step) {
            uint64_t i = (v - base - 1) / step + 1;
            return uint32_t((i + 1) * upow(p, k));
        }
    }
    throw InvariantViolationError("Hamming band lookup fell through");
}

uint32_t hamming_distance(const CodeDescriptor& C) {
    TorProfile prof = applicable_profile(C);
    const Field& F = *C.spec->field;
    return hamming_distance_field(prof.c, F.p(), uint32_t(C.spec->s));
}

uint64_t rt_distance(const CodeDescriptor& C) {
    TorProfile prof = applicable_profile(C);
    uint64_t ps = C.spec->ps;
    if (prof.a == ps && prof.b == ps && prof.c == ps) return 0;  // zero code
    return uint64_t(C.spec->n) * prof.c + 1;
}

WeightDistribution rt_weight_distribution(const CodeDescriptor& C) {
    TorProfile prof = applicable_profile(C);
    uint64_t n = C.spec->n;
    uint64_t N = C.spec->N;
    uint64_t na = n * prof.a, nb = n * prof.b, nc = n * prof.c;
    BigInt q = 1;
    for (uint32_t i = 0; i < C.spec->field->m(); ++i) q *= C.spec->field->p();

    WeightDistribution wd;
    wd.A.assign(N + 1, 0);
    wd.A[0] = 1;
    auto qpow = [&](uint64_t e) {
        BigInt r = 1;
        for (uint64_t i = 0; i < e; ++i) r *= q;
        return r;
    };
    for (uint64_t rho = nc + 1; rho <= nb; ++rho)
        wd.A[rho] = (q - 1) * qpow(rho - nc - 1);
    for (uint64_t rho = nb + 1; rho <= na; ++rho)
        wd.A[rho] = (q * q - 1) * qpow(2 * rho - nb - nc - 2);
    for (uint64_t rho = na + 1; rho <= N; ++rho)
        wd.A[rho] = (q * q * q - 1) * qpow(3 * rho - na - nb - nc - 3);
    return wd;
}

}  // namespace chaincodes
