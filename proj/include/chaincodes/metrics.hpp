#ifndef CHAINCODES_METRICS_HPP
#define CHAINCODES_METRICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "codes.hpp"

namespace chaincodes {

using BigInt = boost::multiprecision::cpp_int;

/// A[rho] = number of codewords of RT weight rho, 0 <= rho <= N.
struct WeightDistribution {
    std::vector<BigInt> A;
};

/// Hamming distance of <(x^n - eta0)^v> in F_{p^m}[x]/(x^{n p^s} - eta)
/// with x^n - eta0 irreducible (the value depends only on v, p, s):
///   1 at v = 0, 0 at v = p^s,
///   l+2 on l*p^{s-1}+1 <= v <= (l+1)*p^{s-1}         (0 <= l <= p-2),
///   (i+1)p^k on p^s-p^{s-k}+(i-1)p^{s-k-1}+1 <= v
///                    <= p^s-p^{s-k}+i*p^{s-k-1}      (1<=i<=p-1, 1<=k<=s-1).
/// Throws RangeError unless 0 <= v <= p^s.
uint32_t hamming_distance_field(uint32_t v, uint32_t p, uint32_t s);

/// Closed-form metrics for single-factor beta = 0 codes.  All three throw
/// NotApplicableError when r > 1 or beta != 0 (route to the oracle).
uint32_t hamming_distance(const CodeDescriptor& C);
uint64_t rt_distance(const CodeDescriptor& C);
WeightDistribution rt_weight_distribution(const CodeDescriptor& C);

}  // namespace chaincodes

#endif
