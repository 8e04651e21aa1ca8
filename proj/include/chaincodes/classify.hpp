#ifndef CHAINCODES_CLASSIFY_HPP
#define CHAINCODES_CLASSIFY_HPP

#include <vector>

#include "chain_ring.hpp"
#include "linalg.hpp"

namespace chaincodes {

/// Kinds of ideals of a component ring K_j.  Chain covers the beta != 0
/// case (0 < ell < 3p^s); Types I-III cover beta = 0.  Zero and Unit are
/// shared by all cases.
enum class IdealKind { Zero, Unit, Chain, TypeI, TypeII, TypeIII };

/// Canonical description of one ideal of K_j.
///   Chain:   <f^ell>
///   TypeI:   <u^2 f^c>                                  (a = b = p^s)
///   TypeII:  <u f^b + u^2 f^t G, u^2 f^c>               (a = p^s, b < p^s)
///   TypeIII: <f^a + u f^t1 D1 + u^2 f^t2 D2,
///             u f^b + u^2 f^theta V, u^2 f^c>           (0 < a < p^s)
/// Convention: when a unit polynomial is zero its exponent is set to the
/// torsion bound (t = c, t1 = b, t2 = c, theta = c).
struct IdealSpec {
    IdealKind kind = IdealKind::Zero;
    uint32_t ell = 0;
    uint32_t a = 0, b = 0, c = 0;
    uint32_t t = 0, t1 = 0, t2 = 0, theta = 0;
    Poly G, D1, D2, V;

    bool operator==(const IdealSpec& o) const {
        return kind == o.kind && ell == o.ell && a == o.a && b == o.b && c == o.c && t == o.t &&
               t1 == o.t1 && t2 == o.t2 && theta == o.theta && G == o.G && D1 == o.D1 &&
               D2 == o.D2 && V == o.V;
    }
    bool operator!=(const IdealSpec& o) const { return !(*this == o); }
};

/// Exponents (a, b, c) of the residue and torsion ideals
/// Res_u(I) = <f^a>, Tor_u(I) = <f^b>, Tor_{u^2}(I) = <f^c>.
struct TorProfile {
    uint32_t a = 0, b = 0, c = 0;
    bool operator==(const TorProfile& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Throws InvariantViolationError unless spec is a valid canonical tuple
/// for K (ranges, unit-polynomial shapes, case compatibility).
void validate_ideal_spec(const IdealSpec& spec, const Component& K);

/// (a, b, c) by closed form; Chain(ell) uses the layered clamps
/// a = min(ell, p^s), b = clamp(ell - p^s), c = clamp(ell - 2 p^s).
TorProfile tor_profile(const IdealSpec& spec, const Component& K);

/// log_p |I| = m * d_j * (3 p^s - a - b - c).
uint64_t ideal_size_exp(const IdealSpec& spec, const Component& K);

/// The generator list of the matching taxonomy statement.
std::vector<ChainPoly> ideal_generators(const IdealSpec& spec, const Component& K);

/// Closed-form annihilator generators.  For TypeIII this solves
/// f^c A = [h_j +] f^{p^s-a+t1-b+theta} V D1 - f^{p^s-a+t2} D2 (mod f^{p^s})
/// by exact division (h_j only in the gamma != 0 case); throws
/// CongruenceUnsolvableError when the divisibility fails.
std::vector<ChainPoly> annihilator_generators(const IdealSpec& spec, const Component& K);

/// Canonical IdealSpec of the annihilator.
IdealSpec annihilator(const IdealSpec& spec, const Component& K);

/// RREF basis of the F_{p^m}-span of the ideal generated by gens, as a
/// subspace of K_j with coordinates layer0 | layer1 | layer2 (each block
/// of size deg f^{p^s}).  This is the ideal's fingerprint: two generator
/// sets give the same ideal iff their spans are identical.
Mat ideal_span(const std::vector<ChainPoly>& gens, const Component& K);

/// Canonical IdealSpec of the ideal generated by gens (or spanned by an
/// already-computed RREF span).
IdealSpec canonicalize(const std::vector<ChainPoly>& gens, const Component& K);
IdealSpec canonicalize_span(const Mat& span, const Component& K);

/// All ideals of K_j, each exactly once, in the order Zero, Chain/TypeI,
/// TypeII, TypeIII, Unit (lexicographic within a kind).  For beta = 0
/// cases throws CapExceededError when |K_j| > 2^cap_ring_log2.
std::vector<IdealSpec> enumerate_ideals(const Component& K, uint64_t cap_ring_log2 = 15);

/// Conversions between K_j elements and span coordinates.
Vec chainpoly_to_vec(const ChainPoly& a, size_t D);
ChainPoly vec_to_chainpoly(const Vec& v, size_t D);

}  // namespace chaincodes

#endif
