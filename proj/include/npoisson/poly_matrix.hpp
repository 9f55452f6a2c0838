#pragma once

#include <vector>

#include "npoisson/polynomial.hpp"

namespace npoisson {

/// Square matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Fraction-free (Bareiss) determinant; every division is exact.
Polynomial determinant(const PolyMatrix& m);

/// Transposed cofactor matrix, so that m * adjugate(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

} // namespace npoisson
