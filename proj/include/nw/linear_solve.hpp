#pragma once

#include <optional>
#include <vector>

#include "nw/rational.hpp"

namespace nw {

using RatVector = std::vector<Rational>;
/// Row-major dense matrix.
using RatMatrix = std::vector<RatVector>;

/// Basis of {x : A x = 0}, one vector per free column in increasing column
/// order. Each vector is content-normalized: a primitive integer vector whose
/// free-column entry is positive. Elimination is fraction-free (Bareiss) on
/// the row-scaled integer matrix.
std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t cols);

/// One solution of A x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t cols);

/// Rank of A.
std::size_t rank(const RatMatrix& a, std::size_t cols);

}  // namespace nw
