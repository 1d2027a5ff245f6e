#include "flagval/linalg.hpp"

namespace flagval {

RowEchelon reduced_row_echelon(const Field& field, FqMatrix rows, std::size_t ncols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem inv = field.inv(rows[r][c]);
    for (Elem& v : rows[r]) v = field.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        rows[i][k] = field.sub(rows[i][k], field.mul(factor, rows[r][k]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const Field& field, const FqMatrix& rows, std::size_t ncols) {
  return reduced_row_echelon(field, rows, ncols).pivots.size();
}

FqMatrix nullspace(const Field& field, const FqMatrix& rows, std::size_t ncols) {
  RowEchelon e = reduced_row_echelon(field, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  FqMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = field.neg(e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace flagval
