#ifndef CHAINCODES_CHAIN_RING_HPP
#define CHAINCODES_CHAIN_RING_HPP

#include <cstdint>
#include <vector>

#include "poly.hpp"

namespace chaincodes {

/// Element a0 + u*a1 + u^2*a2 of R = F_{p^m}[u]/(u^3).
struct ChainElem {
    uint32_t a0 = 0, a1 = 0, a2 = 0;

    bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0; }
    bool operator==(const ChainElem& o) const { return a0 == o.a0 && a1 == o.a1 && a2 == o.a2; }
    bool operator!=(const ChainElem& o) const { return !(*this == o); }
};

/// Units of R are exactly the elements with nonzero residue part.
inline bool is_unit_elem(const ChainElem& e) { return e.a0 != 0; }

ChainElem chain_add(const Field& F, const ChainElem& a, const ChainElem& b);
ChainElem chain_sub(const Field& F, const ChainElem& a, const ChainElem& b);
ChainElem chain_neg(const Field& F, const ChainElem& a);
ChainElem chain_mul(const Field& F, const ChainElem& a, const ChainElem& b);
/// Inverse of a unit; throws NonUnitError otherwise.
ChainElem chain_inv(const Field& F, const ChainElem& a);

/// Element a0(x) + u*a1(x) + u^2*a2(x) of R[x] (or of a quotient of it).
struct ChainPoly {
    Poly a0, a1, a2;

    bool is_zero() const { return a0.is_zero() && a1.is_zero() && a2.is_zero(); }
    /// Degree as a polynomial over R: largest index with a nonzero R-coefficient.
    int degree() const;
    ChainElem coeff(size_t i) const { return {a0.coeff(i), a1.coeff(i), a2.coeff(i)}; }

    bool operator==(const ChainPoly& o) const { return a0 == o.a0 && a1 == o.a1 && a2 == o.a2; }
    bool operator!=(const ChainPoly& o) const { return !(*this == o); }

    static ChainPoly zero() { return {}; }
    static ChainPoly one() { return {Poly::constant(1), Poly(), Poly()}; }
    static ChainPoly from_elem(const ChainElem& e) {
        return {Poly::constant(e.a0), Poly::constant(e.a1), Poly::constant(e.a2)};
    }
    static ChainPoly from_res(Poly p) { return {std::move(p), Poly(), Poly()}; }
    /// u^layer * p(x), layer in {0, 1, 2}
    static ChainPoly layered(int layer, Poly p);
};

ChainPoly cpoly_add(const Field& F, const ChainPoly& a, const ChainPoly& b);
ChainPoly cpoly_sub(const Field& F, const ChainPoly& a, const ChainPoly& b);
ChainPoly cpoly_neg(const Field& F, const ChainPoly& a);
ChainPoly cpoly_mul(const Field& F, const ChainPoly& a, const ChainPoly& b);
ChainPoly cpoly_scale(const Field& F, const ChainPoly& a, const ChainElem& s);
ChainPoly cpoly_mul_u(const ChainPoly& a);  // multiply by u

/// Coefficient reversal: x^{deg a} a(1/x), on R-coefficients.
ChainPoly cpoly_star(const ChainPoly& a);

/// Quotient ring R[x]/(M) for a modulus M = F(x) + u*g(x) + u^2*h(x) with
/// F monic and deg g, deg h < deg F.  Covers both the ambient ring
/// R[x]/(x^N - lambda) and the component rings K_j = R[x]/(k_j).
class QuotientRing {
   public:
    QuotientRing() = default;
    QuotientRing(FieldPtr field, Poly res_modulus, Poly g, Poly h);

    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    const Poly& res_modulus() const { return F_; }
    const Poly& gpart() const { return g_; }
    const Poly& hpart() const { return h_; }
    ChainPoly modulus() const { return {F_, g_, h_}; }
    size_t deg() const { return size_t(F_.degree()); }
    /// log_p of the ring size: 3 * m * deg.
    uint64_t size_log_p() const { return 3ull * field_->m() * deg(); }

    ChainPoly reduce(ChainPoly a) const;
    ChainPoly add(const ChainPoly& a, const ChainPoly& b) const { return cpoly_add(*field_, a, b); }
    ChainPoly sub(const ChainPoly& a, const ChainPoly& b) const { return cpoly_sub(*field_, a, b); }
    ChainPoly mul(const ChainPoly& a, const ChainPoly& b) const;
    ChainPoly mul_poly(const ChainPoly& a, const Poly& s) const;
    ChainPoly pow(ChainPoly base, uint64_t e) const;
    /// Multiplication by x, single-step reduction.
    ChainPoly shift_x(const ChainPoly& a) const;

    /// Inverse of a unit (residue part coprime to the residue modulus).
    /// Throws NonUnitError if a is not a unit.
    ChainPoly inv(const ChainPoly& a) const;
    bool is_unit(const ChainPoly& a) const;

   private:
    FieldPtr field_;
    Poly F_, g_, h_;
};

enum class LambdaCase { BetaNonzero, BetaGammaZero, GammaNonzero };

/// Nilpotency index of f_j in K_j: 3p^s, 2p^s or p^s by lambda case.
uint64_t nilpotency_index(LambdaCase c, uint32_t p, uint32_t s);

/// Component ring K_j = R[x]/(k_j), k_j = f_j^{p^s} + u g_j + u^2 h_j.
struct Component {
    QuotientRing ring;
    Poly f;         // base irreducible
    uint32_t d = 0;     // deg f
    uint32_t ps = 0;    // p^s
    uint32_t s = 0;
    LambdaCase lambda_case = LambdaCase::BetaGammaZero;

    const Field& field() const { return ring.field(); }
    /// f^e as an element of K_j (e may exceed p^s).
    ChainPoly f_power(uint64_t e) const;
    /// u^layer * f^e * w, reduced.
    ChainPoly layered_f_power(int layer, uint64_t e, const Poly& w) const;
};

/// true iff a is a unit of K_j: residue part not divisible by f_j.
bool is_unit_in_Kj(const Field& F, const ChainPoly& a, const Component& K);

}  // namespace chaincodes

#endif
