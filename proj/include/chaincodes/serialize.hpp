#ifndef CHAINCODES_SERIALIZE_HPP
#define CHAINCODES_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "metrics.hpp"
#include "oracle.hpp"

namespace chaincodes {

using Json = nlohmann::json;

/// {"p": int, "m": int, "modulus": [int]} (modulus over F_p, constant first).
Json field_to_json(const Field& F);

/// Coefficient array; each field element as its base-p digit vector.
Json poly_to_json(const Field& F, const Poly& a);

/// {"a0": poly, "a1": poly, "a2": poly}.
Json chainpoly_to_json(const Field& F, const ChainPoly& a);

/// p, m, n, s, lambda: [alpha, beta, gamma], alpha0, factors (f, g, h, v, w).
Json spec_to_json(const ConstacyclicSpec& spec);

/// {"kind": str, "params": {...}, "units": {"G"|"D1"|"D2"|"V": poly}}.
Json ideal_spec_to_json(const Field& F, const IdealSpec& spec);

std::string kind_name(IdealKind kind);

/// CSV: one row per codeword, 3N element indices (a0 | a1 | a2 blocks).
std::string codewords_to_csv(const std::vector<ChainPoly>& words, size_t N);

/// CSV rows (rho, A_rho), exact decimal integers.
std::string weight_distribution_to_csv(const WeightDistribution& wd);

}  // namespace chaincodes

#endif
