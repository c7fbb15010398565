#ifndef CYCLECONES_LINALG_HPP
#define CYCLECONES_LINALG_HPP

#include "cyclecones/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cyclecones {

// Dense exact rational matrices, row-major.  Small sizes only; plain
// Gauss-Jordan is fine.
using RatMatrix = std::vector<RatVec>;

RatMatrix transpose(const RatMatrix& m);
RatVec matVec(const RatMatrix& m, const RatVec& v);
std::size_t rank(RatMatrix m);
Rat determinant(RatMatrix m);

// Solves A x = b for square nonsingular A; nullopt when A is singular or the
// system is inconsistent.
std::optional<RatVec> solveLinear(RatMatrix a, RatVec b);

}  // namespace cyclecones

#endif  // CYCLECONES_LINALG_HPP
