#ifndef CHAINCODES_LIFTING_HPP
#define CHAINCODES_LIFTING_HPP

#include <vector>

#include "chain_ring.hpp"
#include "factor.hpp"

namespace chaincodes {

/// One factor k_j = f_j^{p^s} + u g_j + u^2 h_j of x^{n p^s} - lambda,
/// with g_j, h_j reduced mod f_j^{p^s}.  v, w are the Bezout cofactors
/// v * f_j^{p^s} + w * prod_{i>j} f_i^{p^s} = 1 (deg w < d_j p^s),
/// present whenever a later factor exists (j < r - 1; zero-based).
struct FactorData {
    Poly f;
    uint32_t d = 0;
    Poly g, h;
    Poly v, w;
    ChainPoly k;  // {f^{p^s}, g, h}
};

/// A constacyclic ambient R[x]/(x^{n p^s} - lambda) together with its
/// factored component rings K_j and cached CRT idempotents.
struct ConstacyclicSpec {
    FieldPtr field;
    uint32_t n = 0, s = 0;
    uint64_t ps = 0, N = 0;  // p^s and n * p^s
    ChainElem lambda;
    uint32_t alpha0 = 0;
    LambdaCase lambda_case = LambdaCase::BetaGammaZero;
    QuotientRing ambient;
    std::vector<FactorData> factors;
    std::vector<Component> components;
    std::vector<ChainPoly> idempotents;  // e_j = 1 in K_j, 0 elsewhere

    size_t r() const { return factors.size(); }
};

/// Factor x^{n p^s} - lambda over R = F_{p^m}[u]/(u^3) by lifting the
/// factorization of x^n - alpha0 over the residue field.  Verifies the
/// exact (unreduced) product identity internally.
/// Throws NotCoprimeError if p | n, NonUnitError if lambda is not a unit.
ConstacyclicSpec lift_factorization(FieldPtr field, uint32_t n, uint32_t s, ChainElem lambda);

/// The unreduced factors from the Bezout peeling, whose coefficient-exact
/// product is x^{n p^s} - lambda in R[x].
std::vector<ChainPoly> unreduced_factors(const ConstacyclicSpec& spec);

/// a mod k_j for each j.  Ring isomorphism onto the direct sum of the K_j.
std::vector<ChainPoly> crt_split(const ConstacyclicSpec& spec, const ChainPoly& a);

/// Unique ambient preimage of per-component values; inverse of crt_split.
/// Throws ArityMismatchError if the component count is wrong.
ChainPoly crt_combine(const ConstacyclicSpec& spec, const std::vector<ChainPoly>& comps);

/// The spec for x^{n p^s} - lambda^{-1} whose component moduli are the
/// monic-normalized reversals k_j*, in the same component order as spec.
ConstacyclicSpec dual_modulus(const ConstacyclicSpec& spec);

}  // namespace chaincodes

#endif
