#ifndef CHAINCODES_TEST_UTIL_HPP
#define CHAINCODES_TEST_UTIL_HPP

#include <memory>

#include "chaincodes/codes.hpp"
#include "chaincodes/lifting.hpp"

namespace chaincodes::testutil {

inline FieldPtr make_field(uint32_t p, uint32_t m) { return std::make_shared<Field>(p, m); }

inline Poly P(std::vector<uint32_t> coeffs) { return Poly(std::move(coeffs)); }

inline std::shared_ptr<const ConstacyclicSpec> make_spec(uint32_t p, uint32_t m, uint32_t n,
                                                         uint32_t s, ChainElem lambda) {
    return std::make_shared<ConstacyclicSpec>(lift_factorization(make_field(p, m), n, s, lambda));
}

inline CodeDescriptor make_code(std::shared_ptr<const ConstacyclicSpec> spec,
                                std::vector<IdealSpec> comps) {
    return CodeDescriptor{std::move(spec), std::move(comps)};
}

inline IdealSpec chain_ideal(uint32_t ell) {
    IdealSpec s;
    s.kind = IdealKind::Chain;
    s.ell = ell;
    return s;
}

inline IdealSpec zero_ideal() { return IdealSpec{}; }

inline IdealSpec unit_ideal() {
    IdealSpec s;
    s.kind = IdealKind::Unit;
    return s;
}

// Type I <u^2 f^c>; unused parameter fields stay at their defaults, as
// canonicalize leaves them.
inline IdealSpec type1_ideal(uint32_t c, uint32_t ps) {
    IdealSpec s;
    s.kind = IdealKind::TypeI;
    s.a = ps;
    s.b = ps;
    s.c = c;
    return s;
}

inline IdealSpec type2_ideal(uint32_t b, uint32_t c, uint32_t t, Poly G, uint32_t ps) {
    IdealSpec s;
    s.kind = IdealKind::TypeII;
    s.a = ps;
    s.b = b;
    s.c = c;
    s.t = G.is_zero() ? c : t;
    s.G = std::move(G);
    return s;
}

}  // namespace chaincodes::testutil

#endif
