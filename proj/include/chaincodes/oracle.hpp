#ifndef CHAINCODES_ORACLE_HPP
#define CHAINCODES_ORACLE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "codes.hpp"
#include "metrics.hpp"

namespace chaincodes {

/// Brute-force referee routines.  These deliberately avoid the closed-form
/// taxonomy, dual, and metric formulas: they work from raw ring arithmetic
/// and linear algebra only, so agreement with the formula modules is
/// meaningful evidence.

/// Every ideal of K_j, as canonical RREF span fingerprints, found by
/// closing all singleton-generated ideals under pairwise sums.
/// Throws CapExceededError when |K_j| > 2^cap_ring_log2.
std::vector<Mat> enumerate_ideals_bf(const Component& K, uint64_t cap_ring_log2 = 12);

struct BruteWeights {
    uint64_t d_h = 0;
    uint64_t d_rt = 0;
    WeightDistribution dist;
};

/// Exhaustive minimum Hamming / RT weights and the full RT histogram of an
/// explicit codeword list of length-N words.
/// Throws CapExceededError when there are more than 2^cap_codewords_log2 words.
BruteWeights min_weights_bf(const std::vector<ChainPoly>& codewords, size_t N,
                            uint64_t cap_codewords_log2 = 16);

/// RREF basis (coordinates layer0|layer1|layer2, each block of size N) of
/// {v in R^N : v . c = 0 for all c in C}, from the kernel of the
/// inner-product constraints of a spanning set of C.
Mat dual_bf_span(const Field& F, const std::vector<ChainPoly>& spanning, size_t N);

/// The dual as an explicit codeword set, sorted by coordinate vector.
/// Small ambients (|R|^N <= 2^16) are scanned exhaustively; larger ones
/// expand the kernel basis.  Throws CapExceededError when the dual itself
/// has more than 2^cap_log2 words.
std::vector<ChainPoly> dual_bf(const Field& F, const std::vector<ChainPoly>& codewords, size_t N,
                               uint64_t cap_log2 = 24);

struct OracleCheck {
    std::string check;
    nlohmann::json expected, actual;
    bool pass = false;
};

/// One line of JSON per check: {"check","expected","actual","pass"}.
struct OracleReport {
    std::vector<OracleCheck> checks;

    bool all_pass() const;
    std::string to_jsonl() const;
};

/// Compares the closed-form claims about C (sizes, annihilators, dual
/// span, distances and RT distribution where the formulas apply) against
/// brute force.  Checks beyond the caps are skipped, not failed.
OracleReport verify_instance(const CodeDescriptor& C, uint64_t cap_codewords_log2 = 16,
                             uint64_t cap_ring_log2 = 12);

}  // namespace chaincodes

#endif
