#pragma once

#include <cstddef>
#include <vector>

#include "flagval/field.hpp"

namespace flagval {

using FqVector = std::vector<Elem>;
using FqMatrix = std::vector<FqVector>;

struct RowEchelon {
  FqMatrix rows;                   // reduced, nonzero rows only
  std::vector<std::size_t> pivots; // pivot column per row
};

RowEchelon reduced_row_echelon(const Field& field, FqMatrix rows, std::size_t ncols);
std::size_t rank(const Field& field, const FqMatrix& rows, std::size_t ncols);
// Basis of {v : A v = 0}, one vector per free column in increasing order;
// each vector has a 1 at its free column.
FqMatrix nullspace(const Field& field, const FqMatrix& rows, std::size_t ncols);

}  // namespace flagval
