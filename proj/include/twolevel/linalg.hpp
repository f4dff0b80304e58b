#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twolevel/rational.hpp"

// Exact dense linear algebra over Q. Sizes here are desk scale (tens of
// columns), so plain Gauss-Jordan elimination is all that is needed.
namespace twolevel::linalg {

struct Rref {
  RatMatrix rows;                    // nonzero rows only, pivots normalised to 1
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
};

Rref rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

RatMatrix transpose(const RatMatrix& m);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in row order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

}  // namespace twolevel::linalg
