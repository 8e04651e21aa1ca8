#ifndef CHAINCODES_CODES_HPP
#define CHAINCODES_CODES_HPP

#include <memory>
#include <vector>

#include "classify.hpp"
#include "lifting.hpp"

namespace chaincodes {

/// A constacyclic code as one ideal per component of its ambient.
struct CodeDescriptor {
    std::shared_ptr<const ConstacyclicSpec> spec;
    std::vector<IdealSpec> components;
};

/// log_p |C| = sum of the component size exponents.
uint64_t code_size_exp(const CodeDescriptor& C);

/// The dual code, living over lambda^{-1}: per component the annihilator,
/// carried through the coefficient-reversal map into the dual_modulus
/// spec and re-classified there.
CodeDescriptor dual_code(const CodeDescriptor& C);

enum class IsodualVerdict { Yes, No, Unknown };

/// Is C equivalent to its dual?  Decided by the closed characterizations
/// for single-factor ambients (x^n - alpha0 irreducible); Unknown where
/// no characterization is claimed (r > 1, and p = 2 TypeIII outside the
/// listed family).
IsodualVerdict is_isodual(const CodeDescriptor& C);

/// All |C| codewords as reduced ambient elements, deterministic order.
/// Throws CapExceededError if log2 |C| > cap_codewords_log2.
std::vector<ChainPoly> expand_codewords(const CodeDescriptor& C,
                                        uint64_t cap_codewords_log2 = 20);

/// F_{p^m}-basis (RREF over coordinates layer0|layer1|layer2, each of
/// size N) of the code as a subspace of the ambient.
Mat code_span(const CodeDescriptor& C);

/// Fixed-length coefficient reversal a(x) -> x^{N-1} a(1/x) on ambient
/// representatives of degree < N; maps a lambda-code bijectively onto
/// the underlying set of a lambda^{-1}-code.
ChainPoly ambient_star(const ChainPoly& a, size_t N);

}  // namespace chaincodes

#endif
