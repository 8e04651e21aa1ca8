#ifndef CHAINCODES_LINALG_HPP
#define CHAINCODES_LINALG_HPP

#include <optional>
#include <vector>

#include "field.hpp"

namespace chaincodes {

using Vec = std::vector<uint32_t>;  // field-element indices
using Mat = std::vector<Vec>;       // row-major

/// In-place reduced row echelon form.  Zero rows are dropped; remaining
/// rows are ordered by pivot column, pivots are 1 and alone in their
/// column.  The result is the canonical basis of the row space.
void rref(const Field& F, Mat& rows);

/// Is v in the row space?  `rows` must be in RREF.
bool in_span(const Field& F, const Mat& rows, Vec v);

/// Coefficients expressing v as a combination of the RREF rows, or
/// nullopt if v is outside the row space.
std::optional<Vec> express(const Field& F, const Mat& rows, Vec v);

/// Canonical (RREF) basis of the right kernel {x : M x = 0}; each basis
/// vector has length cols.
Mat kernel(const Field& F, const Mat& M, size_t cols);

}  // namespace chaincodes

#endif
