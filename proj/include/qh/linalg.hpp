#ifndef QH_LINALG_HPP
#define QH_LINALG_HPP

#include <optional>
#include <vector>

#include "qh/rational.hpp"

namespace qh {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row major

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(RatMat& m);

// Basis of the left kernel {x : x*m = 0}, echelonized with pivots on the
// lowest row indices.
RatMat left_kernel(const RatMat& m);

// One solution of x*m = rhs with free coordinates set to zero, or nullopt.
std::optional<RatVec> solve_left(const RatMat& m, const RatVec& rhs);

int rank(RatMat m);

Rational determinant(RatMat m);

}  // namespace qh

#endif
